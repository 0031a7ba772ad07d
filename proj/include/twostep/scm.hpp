#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "twostep/rng.hpp"

namespace twostep {

struct GaussianNoise {
  double mean = 0.0;
  double stddev = 1.0;
};

/// The true data-generating process: a linear-Gaussian structural causal
/// model over (X, A, Y) with
///   X := N_X,  A := d X + N_A,  Y := a + b X + e A + N_Y.
/// The default instance is the historical SCM of the use case: weight,
/// chemotherapy dose, and months of survival.
struct LinearGaussianScm {
  double intercept_a = 12.0;     // months
  double coeff_x_b = -0.1;       // months per weight unit
  double treat_effect_e = 1.0;   // months per dose unit
  double assign_coeff_d = 0.125; // dose per weight unit
  GaussianNoise noise_x{80.0, 10.0};
  GaussianNoise noise_a{2.0, 1.0};
  GaussianNoise noise_y{0.0, 0.1};

  void validate() const;  // stddevs must be nonnegative
};

struct HistRecord {
  double x = 0.0;
  double a = 0.0;
  double y = 0.0;
};

/// One of the two candidate doses the agent chooses between.
struct Dose {
  double value = 0.0;
};

/// Draws an historical cohort of size n. Deterministic in (scm, n, seed),
/// independent of thread count. Throws EmptyCohortError when n == 0.
std::vector<HistRecord> sample_historical(const LinearGaussianScm& scm, std::size_t n,
                                          std::uint64_t seed);

/// Outcome of do(A = dose) for a patient with covariate x and outcome noise
/// noise_y; the structural assignment of A is severed.
double outcome_under_do(const LinearGaussianScm& scm, double x, double dose,
                        double noise_y);

using DosePolicy = std::function<double(double)>;

struct DecisionSupportEffect {
  double mean_y_with = 0.0;
  double mean_y_without = 0.0;
  double risk_difference = 0.0;  // with minus without
};

/// Compares two dose policies on the same simulated population, pairing the
/// outcome noise across arms so the difference is free of between-arm noise.
DecisionSupportEffect effect_of_decision_support(const LinearGaussianScm& scm,
                                                 const DosePolicy& act_with_ds,
                                                 const DosePolicy& act_without_ds,
                                                 std::size_t n, std::uint64_t seed);

/// Writes a cohort as CSV with header "x,a,y".
void write_cohort_csv(const std::vector<HistRecord>& cohort, std::ostream& out);

}  // namespace twostep
