#include "twostep/scm.hpp"

#include <ostream>
#include <stdexcept>

#include "twostep/errors.hpp"
#include "twostep/io.hpp"

namespace twostep {

namespace {
// Stream tags; cohort draws must stay independent of inference draws.
constexpr std::uint64_t kCohortTag = 0x5363'6d43'6f68'6f72ull;
constexpr std::uint64_t kPopulationTag = 0x5363'6d50'6f70'756cull;
}  // namespace

void LinearGaussianScm::validate() const {
  if (noise_x.stddev < 0.0 || noise_a.stddev < 0.0 || noise_y.stddev < 0.0) {
    throw std::invalid_argument("LinearGaussianScm: noise stddevs must be >= 0");
  }
}

std::vector<HistRecord> sample_historical(const LinearGaussianScm& scm, std::size_t n,
                                          std::uint64_t seed) {
  scm.validate();
  if (n == 0) {
    throw EmptyCohortError("sample_historical: empty cohort requested");
  }
  rng::Philox gen(seed, rng::stream_id({kCohortTag}));
  std::vector<HistRecord> cohort;
  cohort.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = gen.normal(scm.noise_x.mean, scm.noise_x.stddev);
    const double a = scm.assign_coeff_d * x + gen.normal(scm.noise_a.mean, scm.noise_a.stddev);
    const double y = scm.intercept_a + scm.coeff_x_b * x + scm.treat_effect_e * a +
                     gen.normal(scm.noise_y.mean, scm.noise_y.stddev);
    cohort.push_back({x, a, y});
  }
  return cohort;
}

double outcome_under_do(const LinearGaussianScm& scm, double x, double dose,
                        double noise_y) {
  return scm.intercept_a + scm.coeff_x_b * x + scm.treat_effect_e * dose + noise_y;
}

DecisionSupportEffect effect_of_decision_support(const LinearGaussianScm& scm,
                                                 const DosePolicy& act_with_ds,
                                                 const DosePolicy& act_without_ds,
                                                 std::size_t n, std::uint64_t seed) {
  scm.validate();
  if (n == 0) {
    throw EmptyCohortError("effect_of_decision_support: empty cohort requested");
  }
  rng::Philox gen(seed, rng::stream_id({kPopulationTag}));
  double sum_with = 0.0;
  double sum_without = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = gen.normal(scm.noise_x.mean, scm.noise_x.stddev);
    const double noise_y = gen.normal(scm.noise_y.mean, scm.noise_y.stddev);
    sum_with += outcome_under_do(scm, x, act_with_ds(x), noise_y);
    sum_without += outcome_under_do(scm, x, act_without_ds(x), noise_y);
  }
  const double mean_with = sum_with / static_cast<double>(n);
  const double mean_without = sum_without / static_cast<double>(n);
  return {mean_with, mean_without, mean_with - mean_without};
}

void write_cohort_csv(const std::vector<HistRecord>& cohort, std::ostream& out) {
  out << "x,a,y\n";
  for (const HistRecord& row : cohort) {
    out << io::format_double(row.x) << ',' << io::format_double(row.a) << ','
        << io::format_double(row.y) << '\n';
  }
}

}  // namespace twostep
