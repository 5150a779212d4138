#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "decay/kramers.hpp"
#include "decay/langevin.hpp"
#include "decay/rng.hpp"
#include "test_util.hpp"

using namespace decay;
using namespace decay::testutil;

namespace {

// cubic with omega_min = omega_max = 1 at mass 1 and the requested height
PotentialSpec unit_cubic(double barrier) {
  const double a = 0.5;
  return PotentialSpec::cubic(a, std::sqrt(4.0 * a * a * a / (27.0 * barrier)));
}

SimConfig escape_config(double barrier, double eps, double gamma, std::uint64_t n_traj,
                        std::uint64_t seed) {
  const double a = 0.5;
  const double b = std::sqrt(4.0 * a * a * a / (27.0 * barrier));
  SimConfig c;
  c.gamma = gamma;
  c.eps = eps;
  c.dt = 0.05;
  c.absorb_x = a / b;  // far U = 0 crossing
  c.n_traj = n_traj;
  c.seed = seed;
  const double analytic = kramers_rate_full(barrier, 1.0, 1.0, gamma, eps);
  c.t_max = 50.0 / analytic;
  return c;
}

}  // namespace

TEST_CASE("free particle: drift is exact, momentum conserved") {
  PotentialSpec flat = PotentialSpec::tabulated({-100.0, -50.0, 50.0, 100.0},
                                                {0.0, 0.0, 0.0, 0.0});
  SimConfig c;
  c.gamma = 0.0;
  c.eps = 0.0;
  c.dt = 0.01;
  double x = 0.0, p = 2.0;
  for (int i = 0; i < 1000; ++i) std::tie(x, p) = step(x, p, flat, c, 0.77 /*ignored*/);
  CHECK(p == 2.0);
  CHECK(close(x, 2.0 * 1000 * 0.01, 1e-10));
}

TEST_CASE("pure damping: OU momentum decay is exact") {
  PotentialSpec flat = PotentialSpec::tabulated({-1e5, -5e4, 5e4, 1e5}, {0.0, 0.0, 0.0, 0.0});
  SimConfig c;
  c.gamma = 0.7;
  c.eps = 0.0;
  c.dt = 0.02;
  double x = 0.0, p = 3.0;
  const int n = 500;
  for (int i = 0; i < n; ++i) std::tie(x, p) = step(x, p, flat, c, 0.0);
  CHECK(close_rel(p, 3.0 * std::exp(-0.7 * n * 0.02), 1e-12));
}

TEST_CASE("deterministic limit is symplectic on a harmonic well") {
  // U = x^2/2 sampled on a spline grid; gamma = eps = 0 reduces to Verlet
  std::vector<double> xs, us;
  for (int i = 0; i <= 400; ++i) {
    const double x = -4.0 + 8.0 * i / 400;
    xs.push_back(x);
    us.push_back(0.5 * x * x);
  }
  PotentialSpec well = PotentialSpec::tabulated(xs, us);
  SimConfig c;
  c.gamma = 0.0;
  c.eps = 0.0;
  c.dt = 0.05;  // dt * omega = 0.05
  double x = 1.0, p = 0.0;
  const double e0 = 0.5 * p * p + well.value(x);
  double max_drift = 0.0;
  for (int i = 0; i < 100000; ++i) {
    std::tie(x, p) = step(x, p, well, c, 0.0);
    const double e = 0.5 * p * p + well.value(x);
    max_drift = std::max(max_drift, std::abs(e - e0) / e0);
  }
  CHECK(max_drift <= 1e-3);  // bounded oscillation, no secular drift
  CHECK(std::abs(0.5 * p * p + well.value(x) - e0) / e0 <= 1e-3);
}

TEST_CASE("potential_features: cubic closed form") {
  const double a = 0.8, b = 0.3;
  PotentialSpec pot = PotentialSpec::cubic(a, b);
  const PotentialFeatures f = potential_features(pot, 2.0);
  CHECK(close(f.x_min, 0.0, 1e-6));
  CHECK(close(f.x_max, 2.0 * a / (3.0 * b), 1e-6));
  CHECK(close_rel(f.delta_u, 4.0 * a * a * a / (27.0 * b * b), 1e-6));
  CHECK(close_rel(f.omega_min, std::sqrt(2.0 * a / 2.0), 1e-4));
  CHECK(close_rel(f.omega_max, std::sqrt(2.0 * a / 2.0), 1e-4));
}

TEST_CASE("potential_features: symmetric double well and monotone rejection") {
  PotentialSpec dw = PotentialSpec::double_well(1.5, 2.0);
  const PotentialFeatures f = potential_features(dw, 1.0);
  CHECK(close(std::abs(f.x_min), 2.0, 1e-5));
  CHECK(close(f.x_max, 0.0, 1e-5));
  CHECK(close_rel(f.delta_u, 1.5, 1e-6));
  // curvature at the two minima is the same by symmetry
  const double h = 1e-4;
  const double c_left = (dw.value(-2.0 + h) - 2.0 * dw.value(-2.0) + dw.value(-2.0 - h)) / (h * h);
  const double c_right = (dw.value(2.0 + h) - 2.0 * dw.value(2.0) + dw.value(2.0 - h)) / (h * h);
  CHECK(close_rel(c_left, c_right, 1e-6));

  std::vector<double> xs, us;
  for (int i = 0; i <= 40; ++i) {
    xs.push_back(i * 0.1);
    us.push_back(2.0 * i * 0.1);  // monotone ramp: no barrier
  }
  CHECK_THROWS_AS(potential_features(PotentialSpec::tabulated(xs, us), 1.0), TopologyError);
}

TEST_CASE("equilibrium: equipartition and Einstein diffusion") {
  // the squared endpoint is chi^2-distributed, so the MSD estimate carries
  // sqrt(2/n) relative noise; n = 4000 keeps it near 2%
  SimConfig c;
  c.gamma = 1.0;
  c.eps = 0.7;
  c.dt = 0.01;
  c.t_max = 100.0;
  c.n_traj = 4000;
  c.seed = 12;
  const EquilibriumMoments m = equilibrium_check(c);
  // <p^2>/2m = eps/2 within three standard errors
  CHECK(std::abs(m.kinetic_avg - 0.5 * c.eps) <= 3.0 * m.kinetic_stderr);
  // <x^2>/t -> 2 eps / gamma within 5%
  CHECK(close_rel(m.msd_rate, 2.0 * c.eps / c.gamma, 0.05));
}

TEST_CASE("equilibrium: frozen bath damps all kinetic energy away") {
  SimConfig c;
  c.gamma = 1.0;
  c.eps = 0.0;
  c.dt = 0.01;
  c.t_max = 50.0;
  c.n_traj = 4;
  c.p_init = 1.0;
  const EquilibriumMoments m = equilibrium_check(c);
  CHECK(m.kinetic_avg <= 1e-9);  // e^(-2 gamma t) tail past the burn-in
}

TEST_CASE("noise statistics over a million steps") {
  // the OU update injects gaussians of variance m eps (1 - exp(-2 beta dt));
  // for small beta dt this is 2 D dt with D = gamma eps
  SimConfig c;
  c.gamma = 0.25;
  c.eps = 0.9;
  c.dt = 0.01;
  const double decay_const = std::exp(-c.gamma * c.dt);
  const double sigma = std::sqrt(c.eps * (1.0 - decay_const * decay_const));
  GaussianStream g = GaussianStream::stream(5, 0);
  const std::size_t n = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double inc = sigma * g.next();
    sum += inc;
    sum_sq += inc * inc;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) <= 3.0 * sigma / std::sqrt(static_cast<double>(n)));
  CHECK(close_rel(var, sigma * sigma, 0.02));
  // the small-beta-dt limit matches 2 gamma eps dt to first order
  CHECK(close_rel(sigma * sigma, 2.0 * c.gamma * c.eps * c.dt, 2.0 * c.gamma * c.dt));
}

TEST_CASE("fluctuation-dissipation: noise scales with gamma, momentum does not") {
  // per-step noise variance doubles (to first order) when gamma doubles
  SimConfig c;
  c.eps = 0.5;
  c.dt = 0.004;
  auto step_var = [&](double gamma) {
    const double d = std::exp(-gamma * c.dt);
    return c.eps * (1.0 - d * d);
  };
  CHECK(close_rel(step_var(0.8) / step_var(0.4), 2.0, 0.01));

  // stationary kinetic energy is friction-independent
  SimConfig base;
  base.eps = 0.5;
  base.dt = 0.01;
  base.t_max = 300.0;
  base.n_traj = 150;
  base.seed = 31;
  base.gamma = 0.4;
  const EquilibriumMoments slow = equilibrium_check(base);
  base.gamma = 1.6;
  base.seed = 32;
  const EquilibriumMoments fast = equilibrium_check(base);
  const double joint_err = 3.0 * std::hypot(slow.kinetic_stderr, fast.kinetic_stderr);
  CHECK(std::abs(slow.kinetic_avg - fast.kinetic_avg) <= joint_err);
}

TEST_CASE("frozen high barrier: everything censored, flag set") {
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.05, 0.5, 40, 3);  // barrier/eps = 20
  c.t_max = 2000.0;
  const EscapeStats s = simulate_escape(pot, c);
  CHECK(s.n_escaped == 0);
  CHECK(s.n_censored == 40);
  CHECK(s.all_censored);
  CHECK(s.rate > 0.0);  // reported as an upper bound, not a failure
}

TEST_CASE("escape statistics are reproducible bit for bit") {
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.25, 0.5, 500, 77);
  c.n_threads = 2;
  const EscapeStats a = simulate_escape(pot, c);
  c.n_threads = 1;  // thread count must not matter
  const EscapeStats b = simulate_escape(pot, c);
  CHECK(a.mfpt == b.mfpt);
  CHECK(a.rate == b.rate);
  CHECK(a.n_escaped == b.n_escaped);
  CHECK(a.escape_times == b.escape_times);
}

TEST_CASE("escape rate matches the analytic formula at moderate friction") {
  // barrier/eps = 6, beta = 0.5 omega_max
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 1.0 / 6.0, 0.5, 10000, 2024);
  const EscapeStats s = simulate_escape(pot, c);
  const double analytic = kramers_rate_full(1.0, 1.0, 1.0, 0.5, 1.0 / 6.0);
  CHECK(s.n_escaped == c.n_traj);
  CHECK(std::abs(s.rate / analytic - 1.0) <= 0.2);
}

TEST_CASE("deviation from the formula shrinks as the barrier grows") {
  // fixed low friction; the formula overestimates less at higher barriers
  PotentialSpec pot = unit_cubic(1.0);
  std::vector<double> deviation;
  for (double ratio : {4.0, 6.0, 8.0}) {
    SimConfig c = escape_config(1.0, 1.0 / ratio, 0.1, 3000, 5);
    const EscapeStats s = simulate_escape(pot, c);
    const double analytic = kramers_rate_full(1.0, 1.0, 1.0, 0.1, 1.0 / ratio);
    deviation.push_back(std::abs(s.rate / analytic - 1.0));
  }
  CHECK(deviation[0] > deviation[1]);
  CHECK(deviation[1] > deviation[2]);
}

TEST_CASE("escape times from different streams are uncorrelated") {
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.25, 0.5, 4000, 9);
  const EscapeStats s = simulate_escape(pot, c);
  REQUIRE(s.n_escaped == c.n_traj);
  const std::size_t n = s.escape_times.size() - 1;
  double mean = std::accumulate(s.escape_times.begin(), s.escape_times.end(), 0.0) /
                s.escape_times.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < s.escape_times.size(); ++i) {
    const double d = s.escape_times[i] - mean;
    den += d * d;
    if (i < n) num += d * (s.escape_times[i + 1] - mean);
  }
  CHECK(std::abs(num / den) <= 3.0 / std::sqrt(static_cast<double>(c.n_traj)));
}

TEST_CASE("runaway trajectory raises a divergence error naming the culprit") {
  // beyond the barrier the cubic plunges without bound; with the absorbing
  // boundary pushed out of reach the state overflows and must be reported
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.5, 0.5, 4, 21);
  c.absorb_x = 1e300;
  c.t_max = 1e4;
  try {
    simulate_escape(pot, c);
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(std::string(e.what()).find("trajectory") != std::string::npos);
  }
}

TEST_CASE("config guards") {
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.25, 0.5, 10, 1);
  c.dt = 0.2;  // violates dt * omega_max <= 0.05
  CHECK_THROWS_AS(simulate_escape(pot, c), DomainError);
  c = escape_config(1.0, 0.25, 0.5, 10, 1);
  c.absorb_x = 0.1;  // inside the well, not beyond the barrier
  CHECK_THROWS_AS(simulate_escape(pot, c), DomainError);
}

TEST_CASE("public step and the batched runner advance identically") {
  PotentialSpec pot = unit_cubic(1.0);
  SimConfig c = escape_config(1.0, 0.25, 0.5, 1, 123);
  // one trajectory through the public API, same noise stream
  GaussianStream noise = GaussianStream::stream(c.seed, 0);
  double x = c.x_init, p = c.p_init;
  double t = 0.0;
  while (x < c.absorb_x) {
    std::tie(x, p) = step(x, p, pot, c, noise.next());
    t += c.dt;
  }
  const EscapeStats s = simulate_escape(pot, c);
  CHECK(s.escape_times[0] == doctest::Approx(t).epsilon(1e-12));
}
