#pragma once

#include <cmath>
#include <limits>

namespace twostep {

inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297364056;

template <typename Scalar>
Scalar log_normal_pdf(Scalar x, Scalar mean, Scalar stddev) {
  const Scalar z = (x - mean) / stddev;
  return Scalar(-0.5) * z * z - std::log(stddev) - Scalar(kLogSqrt2Pi);
}

/// log Phi(x), stable far into the left tail.
inline double log_normal_cdf(double x) {
  if (x > -20.0) {
    return std::log(0.5 * std::erfc(-x * M_SQRT1_2));
  }
  // Asymptotic expansion: Phi(x) ~ phi(x)/|x| * (1 - 1/x^2 + 3/x^4)
  const double x2 = x * x;
  return -0.5 * x2 - kLogSqrt2Pi - std::log(-x) + std::log1p(-1.0 / x2 + 3.0 / (x2 * x2));
}

/// Normal(mean, stddev) conditioned on x >= 0, with exact renormalization.
inline double log_trunc_normal_nonneg_pdf(double x, double mean, double stddev) {
  if (x < 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return log_normal_pdf(x, mean, stddev) - log_normal_cdf(mean / stddev);
}

/// Chi-square density with real-valued degrees of freedom.
inline double log_chi_square_pdf(double x, double dof) {
  if (x <= 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  const double half = 0.5 * dof;
  return (half - 1.0) * std::log(x) - 0.5 * x - half * std::log(2.0) - std::lgamma(half);
}

/// Neumaier variant of Kahan summation. Used wherever the spec of a sum is
/// "the exact value", e.g. OLS cross-products over 1e5 terms of size ~1e4.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace twostep
