#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace twostep {

double mean(const Eigen::Ref<const Eigen::VectorXd>& x);
double sample_variance(const Eigen::Ref<const Eigen::VectorXd>& x);
double sample_stddev(const Eigen::Ref<const Eigen::VectorXd>& x);

/// Pearson correlation. Throws UndefinedCorrelationError when either input
/// has zero variance.
double pearson_correlation(const Eigen::Ref<const Eigen::VectorXd>& x,
                           const Eigen::Ref<const Eigen::VectorXd>& y);

/// Two-sample Kolmogorov-Smirnov statistic (sup distance between ECDFs).
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// (q1, q2, q3) under the linear-interpolation convention: the p-quantile of
/// sorted x[0..n-1] interpolates between the floor/ceil of p*(n-1).
std::array<double, 3> quartiles(std::vector<double> values);
double quantile_sorted(const std::vector<double>& sorted, double p);

/// Effective sample size across chains (Geyer initial monotone sequence on
/// the multi-chain autocorrelation, as used by the usual Rhat/ESS toolkits).
/// `draws` is chains x iterations for one parameter.
double effective_sample_size(const Eigen::MatrixXd& draws);

/// Split-chain potential scale reduction for one parameter; each row of
/// `draws` is a chain. Returns NaN when all chains are constant.
double split_rhat_statistic(const Eigen::MatrixXd& draws);

}  // namespace twostep
