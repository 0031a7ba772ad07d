#pragma once

#include <stdexcept>
#include <string>

namespace twostep {

struct EmptyCohortError : std::runtime_error {
  explicit EmptyCohortError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateDesignError : std::runtime_error {
  explicit DegenerateDesignError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCompositionError : std::runtime_error {
  explicit DegenerateCompositionError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDofError : std::invalid_argument {
  explicit InsufficientDofError(const std::string& what) : std::invalid_argument(what) {}
};

struct InitializationError : std::runtime_error {
  explicit InitializationError(const std::string& what) : std::runtime_error(what) {}
};

struct DiagnosticUnavailableError : std::runtime_error {
  explicit DiagnosticUnavailableError(const std::string& what) : std::runtime_error(what) {}
};

struct UndefinedCorrelationError : std::runtime_error {
  explicit UndefinedCorrelationError(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twostep
