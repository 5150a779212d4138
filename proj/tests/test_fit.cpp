#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "decay/builtin.hpp"
#include "decay/fit.hpp"
#include "decay/rng.hpp"
#include "table_oracle.hpp"
#include "test_util.hpp"

using namespace decay;
using namespace decay::testutil;

namespace {

double rms(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s / v.size());
}

// 1% relative perturbation; seed 1 keeps every record non-degenerate.
ParameterSet perturbed_table4(std::uint64_t seed) {
  ParameterSet p = builtin_parameters();
  GaussianStream g = GaussianStream::stream(seed, 0);
  for (auto& a : p.a) a *= 1.0 + 0.01 * g.next();
  return p;
}

// dataset whose half-lives are the model's own predictions (zero residuals)
Dataset synthetic_dataset(const ParameterSet& truth) {
  Dataset ds = builtin_dataset();
  const PhysicalConstants constants;
  for (auto& r : ds.records) {
    r.t_half_exp = std::pow(10.0, log_half_life(r, truth, constants).lg_t_half);
  }
  return ds;
}

}  // namespace

TEST_CASE("residual RMS at the calibrated parameters matches the published columns") {
  const auto res = residuals(builtin_dataset(), builtin_parameters(), Weighting::unit());
  REQUIRE(res.size() == 93);
  // oracle: RMS of the frozen printed theory-vs-experiment columns
  std::vector<double> col;
  std::size_t k = 0;
  for (const auto& r : builtin_dataset().records) {
    const std::size_t i = k++;
    if (r.role != Role::Fit) continue;
    col.push_back(testdata::kLgTheory[i] - testdata::kLgExp[i]);
  }
  CHECK(close(rms(res), rms(col), 0.02));
}

TEST_CASE("a dataset built from the model itself has zero residuals") {
  Dataset ds = builtin_dataset();
  ds.records.resize(1);
  ds.records[0].role = Role::Fit;
  const PhysicalConstants constants;
  ds.records[0].t_half_exp =
      std::pow(10.0, log_half_life(ds.records[0], builtin_parameters(), constants).lg_t_half);
  const auto res = residuals(ds, builtin_parameters(), Weighting::unit());
  REQUIRE(res.size() == 1);
  CHECK(close(res[0], 0.0, 1e-12));
}

TEST_CASE("sigma weighting rescales residuals element-wise") {
  const auto unit = residuals(builtin_dataset(), builtin_parameters(), Weighting::unit());
  const auto sigma =
      residuals(builtin_dataset(), builtin_parameters(), Weighting::experimental_sigma());
  REQUIRE(unit.size() == sigma.size());
  std::size_t k = 0;
  constexpr double lg_e = 0.43429448190325182765;
  for (const auto& r : builtin_dataset().records) {
    if (r.role != Role::Fit) continue;
    const double s = lg_e * 0.5 * (r.t_half_err_lo + r.t_half_err_hi) / r.t_half_exp;
    CHECK(close_rel(sigma[k], unit[k] / s, 1e-12));
    ++k;
  }
}

TEST_CASE("jacobian: charge-factor columns vanish for Z_cl = 1") {
  Dataset ds;
  ds.records.push_back(make_record(238, 92, 4, 2, 4.198, 4.270, 4.468e9));
  ds.records[0].z_cl = 1;  // hypothetical: (1 - 1/Z_cl) = 0
  const auto jac = jacobian(ds, builtin_parameters(), 1e-6, Weighting::unit());
  REQUIRE(jac.size() == 20);
  CHECK(jac[3] == 0.0);  // a4 and a5 only enter through the vanishing factor
  CHECK(jac[4] == 0.0);
  CHECK(jac[0] != 0.0);
}

TEST_CASE("forward and central differences agree to relative 1e-4") {
  const auto fwd = jacobian(builtin_dataset(), builtin_parameters(), 5e-7, Weighting::unit());
  const auto ctr =
      jacobian(builtin_dataset(), builtin_parameters(), 5e-7, Weighting::unit(), true);
  REQUIRE(fwd.size() == ctr.size());
  double diff_sq = 0.0, ref_sq = 0.0;
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    diff_sq += (fwd[i] - ctr[i]) * (fwd[i] - ctr[i]);
    ref_sq += ctr[i] * ctr[i];
  }
  CHECK(std::sqrt(diff_sq / ref_sq) <= 1e-4);
  // per-column check against that column's own scale
  for (int j = 0; j < 20; ++j) {
    double scale = 0.0, worst = 0.0;
    for (std::size_t r = 0; r < fwd.size() / 20; ++r) {
      scale = std::max(scale, std::abs(ctr[r * 20 + j]));
      worst = std::max(worst, std::abs(fwd[r * 20 + j] - ctr[r * 20 + j]));
    }
    CHECK(worst <= 1e-3 * std::max(scale, 1.0));
  }
}

TEST_CASE("forward-difference error scales linearly in the step") {
  const auto ctr =
      jacobian(builtin_dataset(), builtin_parameters(), 1e-7, Weighting::unit(), true);
  const auto f1 = jacobian(builtin_dataset(), builtin_parameters(), 1e-6, Weighting::unit());
  const auto f2 = jacobian(builtin_dataset(), builtin_parameters(), 2e-6, Weighting::unit());
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < ctr.size(); ++i) {
    e1 += std::abs(f1[i] - ctr[i]);
    e2 += std::abs(f2[i] - ctr[i]);
  }
  CHECK(e2 > 1.5 * e1);  // doubling the step roughly doubles the bias
  CHECK(e2 < 3.0 * e1);
}

TEST_CASE("fit from the calibrated point polishes in a few steps") {
  // the calibrated vector is already at a local optimum: steps are tiny from
  // the first iteration and the RMS barely moves
  FitConfig config;
  config.max_iter = 5;
  config.step_tol = 2e-3;
  const FitResult r = fit(builtin_dataset(), builtin_parameters(), config);
  const double init_rms =
      rms(residuals(builtin_dataset(), builtin_parameters(), Weighting::unit()));
  CHECK(r.converged);
  CHECK(close(r.rms_lg, init_rms, 0.02));
  CHECK(r.ndf == 73);
  CHECK(r.iterations.size() <= 6);  // init + at most 5 accepted steps
}

TEST_CASE("noise-free synthetic recovery to 1e-3") {
  const ParameterSet truth = builtin_parameters();
  const Dataset ds = synthetic_dataset(truth);
  FitConfig config;
  const FitResult r = fit(ds, perturbed_table4(1), config);
  CHECK(r.converged);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::abs(r.params.a[i] - truth.a[i]) <= 1e-3 * std::abs(truth.a[i]));
  }
}

TEST_CASE("underdetermined fit set is rejected") {
  Dataset ds = builtin_dataset();
  ds.records.resize(20);
  CHECK_THROWS_AS(fit(ds, builtin_parameters(), FitConfig{}), DomainError);
}

TEST_CASE("degenerate initial point raises an initialization error") {
  ParameterSet bad = builtin_parameters();
  bad.a[10] = -200.0;  // collapses B1 for every record
  CHECK_THROWS_AS(fit(builtin_dataset(), bad, FitConfig{}), Error);
}

TEST_CASE("chi_square") {
  const auto [chi2, ndf] = chi_square(builtin_dataset(), builtin_parameters(), Weighting::unit());
  CHECK(ndf == 73);
  const auto res = residuals(builtin_dataset(), builtin_parameters(), Weighting::unit());
  CHECK(close_rel(chi2, 93.0 * rms(res) * rms(res), 1e-9));
  CHECK(close(chi2, 2.011, 0.1));  // unit-weight value for the bundled data

  const Dataset synth = synthetic_dataset(builtin_parameters());
  const auto [chi0, ndf0] = chi_square(synth, builtin_parameters(), Weighting::unit());
  CHECK(chi0 <= 1e-20);
  CHECK(ndf0 == 73);
}

TEST_CASE("accepted objectives decrease monotonically") {
  FitConfig config;
  config.max_iter = 40;
  const FitResult r = fit(builtin_dataset(), perturbed_table4(1), config);
  REQUIRE(r.iterations.size() >= 2);
  for (std::size_t i = 1; i < r.iterations.size(); ++i) {
    CHECK(r.iterations[i].objective < r.iterations[i - 1].objective);
  }
}

TEST_CASE("identical inputs give bitwise-identical results") {
  FitConfig config;
  config.max_iter = 15;
  const FitResult a = fit(builtin_dataset(), perturbed_table4(3), config);
  const FitResult b = fit(builtin_dataset(), perturbed_table4(3), config);
  CHECK(a.params.a == b.params.a);
  CHECK(a.chi2 == b.chi2);
  REQUIRE(a.iterations.size() == b.iterations.size());
  for (std::size_t i = 0; i < a.iterations.size(); ++i) {
    CHECK(a.iterations[i].objective == b.iterations[i].objective);
    CHECK(a.iterations[i].lambda == b.iterations[i].lambda);
  }
}

TEST_CASE("heavy regularization pins the solution to the reference") {
  FitConfig config;
  config.regularization = 1e12;
  config.a_ref = builtin_parameters();
  config.max_iter = 60;
  const FitResult r = fit(builtin_dataset(), perturbed_table4(1), config);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::abs(r.params.a[i] - builtin_parameters().a[i]) <=
          1e-3 * std::abs(builtin_parameters().a[i]));
  }
}

TEST_CASE("rescaling all weights leaves the minimizer unchanged") {
  // scaling by a power of two keeps every float op exact, so the whole
  // iteration path is reproduced bit for bit
  const std::size_t n = builtin_dataset().count_role(Role::Fit);
  FitConfig c1;
  c1.weighting = Weighting::custom_weights(std::vector<double>(n, 1.0));
  c1.max_iter = 40;
  FitConfig c2 = c1;
  c2.weighting = Weighting::custom_weights(std::vector<double>(n, 8.0));
  const FitResult r1 = fit(builtin_dataset(), perturbed_table4(1), c1);
  const FitResult r2 = fit(builtin_dataset(), perturbed_table4(1), c2);
  for (int i = 0; i < 20; ++i) {
    CHECK(r1.params.a[i] == r2.params.a[i]);
  }
  // an inexact common factor only perturbs rounding; the minimizer moves by
  // no more than the convergence basin
  FitConfig c3 = c1;
  c3.weighting = Weighting::custom_weights(std::vector<double>(n, 7.5));
  const FitResult r3 = fit(builtin_dataset(), perturbed_table4(1), c3);
  for (int i = 0; i < 20; ++i) {
    CHECK(close_rel(r3.params.a[i], r1.params.a[i], 1e-3));
  }
}

TEST_CASE("parameter errors: zero-noise fit reports vanishing uncertainties") {
  const Dataset ds = synthetic_dataset(builtin_parameters());
  FitConfig config;
  const FitResult r = fit(ds, perturbed_table4(1), config);
  REQUIRE(r.converged);
  const auto rel = parameter_errors(r);
  for (double e : rel) CHECK(e < 1e-6);
}

TEST_CASE("parameter errors: a_14 is the least constrained on the bundled data") {
  const FitResult r = fit(builtin_dataset(), builtin_parameters(), FitConfig{});
  REQUIRE(r.converged);
  const auto rel = parameter_errors(r);
  const auto max_it = std::max_element(rel.begin(), rel.end());
  CHECK(std::distance(rel.begin(), max_it) == 13);  // a_14
}

TEST_CASE("parameter errors track a bootstrap estimate under known noise") {
  // synthetic data with gaussian noise in lg T
  const ParameterSet truth = builtin_parameters();
  Dataset ds = synthetic_dataset(truth);
  GaussianStream g = GaussianStream::stream(99, 0);
  const double sigma = 0.15;
  std::vector<double> noise;
  for (auto& r : ds.records) {
    const double n = sigma * g.next();
    noise.push_back(n);
    r.t_half_exp *= std::pow(10.0, n);
  }
  FitConfig config;
  config.max_iter = 60;
  const FitResult base = fit(ds, truth, config);
  REQUIRE(base.converged);
  const auto rel = parameter_errors(base);

  // 200-resample bootstrap: refit with resampled residual noise
  GaussianStream resampler = GaussianStream::stream(7, 1);
  constexpr int kResamples = 200;
  std::array<double, 20> sum{}, sum_sq{};
  FitConfig fast = config;
  fast.max_iter = 30;
  fast.step_tol = 1e-8;
  for (int b = 0; b < kResamples; ++b) {
    Dataset boot = synthetic_dataset(truth);
    for (auto& r : boot.records) {
      r.t_half_exp *= std::pow(10.0, sigma * resampler.next());
    }
    const FitResult rb = fit(boot, truth, fast);
    for (int i = 0; i < 20; ++i) {
      sum[i] += rb.params.a[i];
      sum_sq[i] += rb.params.a[i] * rb.params.a[i];
    }
  }
  int within = 0;
  for (int i = 0; i < 20; ++i) {
    const double mean = sum[i] / kResamples;
    const double var = sum_sq[i] / kResamples - mean * mean;
    const double boot_rel = std::sqrt(std::max(var, 0.0)) / std::abs(truth.a[i]);
    if (std::abs(rel[i] - boot_rel) <= 0.3 * std::max(rel[i], boot_rel)) ++within;
  }
  CHECK(within >= 16);  // covariance and bootstrap agree to 30% for most parameters
}
