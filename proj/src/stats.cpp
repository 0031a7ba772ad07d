#include "twostep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "twostep/errors.hpp"

namespace twostep {

double mean(const Eigen::Ref<const Eigen::VectorXd>& x) { return x.mean(); }

double sample_variance(const Eigen::Ref<const Eigen::VectorXd>& x) {
  const Eigen::Index n = x.size();
  if (n < 2) {
    return 0.0;
  }
  const double m = x.mean();
  return (x.array() - m).square().sum() / static_cast<double>(n - 1);
}

double sample_stddev(const Eigen::Ref<const Eigen::VectorXd>& x) {
  return std::sqrt(sample_variance(x));
}

double pearson_correlation(const Eigen::Ref<const Eigen::VectorXd>& x,
                           const Eigen::Ref<const Eigen::VectorXd>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw UndefinedCorrelationError("correlation needs two equally sized samples");
  }
  const double mx = x.mean();
  const double my = y.mean();
  const Eigen::ArrayXd dx = x.array() - mx;
  const Eigen::ArrayXd dy = y.array() - my;
  const double vx = dx.square().sum();
  const double vy = dy.square().sum();
  if (vx <= 0.0 || vy <= 0.0) {
    throw UndefinedCorrelationError("correlation undefined for zero-variance sample");
  }
  return (dx * dy).sum() / std::sqrt(vx * vy);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) {
    return sorted[0];
  }
  const double pos = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::array<double, 3> quartiles(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return {quantile_sorted(values, 0.25), quantile_sorted(values, 0.50),
          quantile_sorted(values, 0.75)};
}

double effective_sample_size(const Eigen::MatrixXd& draws) {
  const Eigen::Index n_chains = draws.rows();
  const Eigen::Index n = draws.cols();
  if (n < 4) {
    return static_cast<double>(n_chains * n);
  }
  Eigen::VectorXd chain_mean(n_chains);
  Eigen::VectorXd chain_var(n_chains);
  for (Eigen::Index c = 0; c < n_chains; ++c) {
    chain_mean(c) = draws.row(c).mean();
    chain_var(c) = (draws.row(c).array() - chain_mean(c)).square().sum() /
                   static_cast<double>(n - 1);
  }
  const double w = chain_var.mean();
  double b_over_n = 0.0;
  if (n_chains > 1) {
    const double grand = chain_mean.mean();
    b_over_n = (chain_mean.array() - grand).square().sum() /
               static_cast<double>(n_chains - 1);
  }
  const double var_plus = (static_cast<double>(n - 1) / n) * w + b_over_n;
  if (var_plus <= 0.0) {
    return static_cast<double>(n_chains * n);
  }

  // Mean autocovariance over chains at each lag.
  auto acov = [&](Eigen::Index lag) {
    double total = 0.0;
    for (Eigen::Index c = 0; c < n_chains; ++c) {
      double s = 0.0;
      for (Eigen::Index t = 0; t < n - lag; ++t) {
        s += (draws(c, t) - chain_mean(c)) * (draws(c, t + lag) - chain_mean(c));
      }
      total += s / static_cast<double>(n);
    }
    return total / static_cast<double>(n_chains);
  };

  // Geyer initial monotone positive sequence on paired autocorrelations.
  double rho_sum = 0.0;
  double prev_pair = std::numeric_limits<double>::infinity();
  for (Eigen::Index lag = 1; lag + 1 < n; lag += 2) {
    const double rho_a = 1.0 - (w - acov(lag)) / var_plus;
    const double rho_b = 1.0 - (w - acov(lag + 1)) / var_plus;
    double pair = rho_a + rho_b;
    if (pair < 0.0) {
      break;
    }
    pair = std::min(pair, prev_pair);
    prev_pair = pair;
    rho_sum += pair;
  }
  const double total = static_cast<double>(n_chains * n);
  const double ess = total / (1.0 + 2.0 * rho_sum);
  return std::min(ess, total * std::log10(total));
}

double split_rhat_statistic(const Eigen::MatrixXd& draws) {
  const Eigen::Index n_chains = draws.rows();
  const Eigen::Index n = draws.cols();
  if (n_chains < 1 || n < 4) {
    throw DiagnosticUnavailableError("split-Rhat needs >= 4 draws per chain");
  }
  const Eigen::Index half = n / 2;
  const Eigen::Index m = 2 * n_chains;
  Eigen::VectorXd means(m);
  Eigen::VectorXd vars(m);
  for (Eigen::Index c = 0; c < n_chains; ++c) {
    const auto first = draws.row(c).segment(0, half);
    const auto second = draws.row(c).segment(n - half, half);
    means(2 * c) = first.mean();
    means(2 * c + 1) = second.mean();
    vars(2 * c) = (first.array() - means(2 * c)).square().sum() /
                  static_cast<double>(half - 1);
    vars(2 * c + 1) = (second.array() - means(2 * c + 1)).square().sum() /
                      static_cast<double>(half - 1);
  }
  const double w = vars.mean();
  const double grand = means.mean();
  const double b = static_cast<double>(half) *
                   (means.array() - grand).square().sum() / static_cast<double>(m - 1);
  if (w <= 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double var_plus =
      (static_cast<double>(half - 1) / half) * w + b / static_cast<double>(half);
  return std::sqrt(var_plus / w);
}

}  // namespace twostep
