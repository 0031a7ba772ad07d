#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace twostep::rng {

/// Counter-based Philox4x32-10 generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3").
///
/// Every (seed, stream) pair indexes an independent 2^64-long sequence, so
/// cohort generation, MCMC chains and sweep workers can each own a private
/// substream and produce results that do not depend on scheduling or thread
/// count.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1); safe to pass to log().
  double uniform();

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();
  double normal(double mean, double stddev);

  /// Gamma(shape, scale) by the Marsaglia-Tsang squeeze method.
  /// Accepts any real shape > 0.
  double gamma(double shape, double scale);

  /// Chi-square with real-valued degrees of freedom > 0.
  double chi_square(double dof);

  /// Normal(mean, stddev) conditioned on the result being >= 0.
  double truncated_normal_nonneg(double mean, double stddev);

  /// Skip ahead; used by tests to probe counter independence.
  void discard(std::uint64_t blocks);

 private:
  std::array<std::uint32_t, 4> block();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t counter_ = 0;
  std::uint64_t stream_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;  // consumed
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// SplitMix64 finalizer; used to derive well-separated stream ids.
std::uint64_t mix64(std::uint64_t x);

/// Hash a list of words into a stream id. Distinct argument lists give
/// (with overwhelming probability) distinct streams.
std::uint64_t stream_id(std::initializer_list<std::uint64_t> parts);

}  // namespace twostep::rng
