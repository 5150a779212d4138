#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "decay/errors.hpp"

namespace decay {

/// One-dimensional potential with an analytic or sampled shape.
/// Cubic:      U = a x^2 - b x^3 (well at 0, barrier top at 2a/3b).
/// DoubleWell: U = h ((x/x0)^2 - 1)^2 (wells at +-x0, barrier at 0).
/// Tabulated:  natural cubic spline through (x, U) samples.
class PotentialSpec {
 public:
  enum class Kind { Cubic, DoubleWell, Tabulated };

  static PotentialSpec cubic(double a, double b);
  static PotentialSpec double_well(double h, double x0);
  static PotentialSpec tabulated(std::vector<double> xs, std::vector<double> us);

  Kind kind() const { return kind_; }
  double value(double x) const;
  double grad(double x) const;

  std::pair<double, double> cubic_coefficients() const { return {a_, b_}; }
  std::pair<double, double> double_well_coefficients() const { return {h_, x0_}; }

  /// Search interval for feature location.
  double domain_lo() const { return lo_; }
  double domain_hi() const { return hi_; }

 private:
  PotentialSpec() = default;
  Kind kind_ = Kind::Cubic;
  double a_ = 0.0, b_ = 0.0;   // cubic
  double h_ = 0.0, x0_ = 0.0;  // double well
  std::vector<double> xs_, us_, d2_;  // tabulated + spline second derivatives
  double lo_ = 0.0, hi_ = 0.0;
};

struct SimConfig {
  double mass = 1.0;
  double gamma = 0.5;     // friction, mass/time; beta = gamma/mass
  double eps = 0.2;       // bath mean energy (temperature analog)
  double dt = 0.01;
  double t_max = 1e6;
  double x_init = 0.0;
  double p_init = 0.0;
  double absorb_x = 1.0;  // absorbing boundary, beyond the barrier top
  std::uint64_t n_traj = 1000;
  std::uint64_t seed = 1;
  int n_threads = 0;      // 0 = hardware concurrency
};

struct EscapeStats {
  double mfpt = 0.0;         // mean first-passage time (censoring-corrected)
  double mfpt_stderr = 0.0;
  double rate = 0.0;         // 1/mfpt
  std::uint64_t n_escaped = 0;
  std::uint64_t n_censored = 0;
  bool all_censored = false;  // no escapes: mfpt is only a lower bound
  std::vector<double> escape_times;  // per trajectory; t_max where censored
  std::vector<bool> censored;
};

struct PotentialFeatures {
  double x_min = 0.0;
  double x_max = 0.0;
  double delta_u = 0.0;    // U(x_max) - U(x_min)
  double omega_min = 0.0;  // sqrt(|U''|/m) at the well
  double omega_max = 0.0;  // sqrt(|U''|/m) at the barrier top
};

struct EquilibriumMoments {
  double kinetic_avg = 0.0;     // time average of p^2/2m
  double kinetic_stderr = 0.0;
  double msd_rate = 0.0;        // <x^2>/t at the horizon
};

/// One step of the symmetric splitting integrator
/// (half kick, half drift, exact OU momentum update, half drift, half kick).
/// `noise` must be a standard normal deviate. Reduces to velocity Verlet
/// when gamma = eps = 0.
std::pair<double, double> step(double x, double p, const PotentialSpec& potential,
                               const SimConfig& config, double noise);

/// Locates the well/barrier pair by grid bracketing plus golden-section
/// refinement; curvatures from central second differences.
/// Throws TopologyError when no interior min/max pair exists.
PotentialFeatures potential_features(const PotentialSpec& potential, double mass);

/// Free-particle (U = 0) moments for the fluctuation-dissipation checks.
EquilibriumMoments equilibrium_check(const SimConfig& config);

/// Runs config.n_traj independent trajectories from (x_init, p_init) until
/// x >= absorb_x or t_max. Trajectory k draws from noise stream (seed, k),
/// so results are identical regardless of thread count. Censored
/// trajectories enter the MFPT through the exponential-tail correction.
EscapeStats simulate_escape(const PotentialSpec& potential, const SimConfig& config);

}  // namespace decay
