#include "decay/kramers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace decay {

namespace {

struct RecordTerms {
  double isospin_sq;   // ((A - 2Z)/A)^2
  double mass_frac;    // (A - A_cl)/A
  double energy_gap;   // 1 - E_TKE/Q
  double z_cl_inv;     // 1/Z_cl
  double z_cl_weight;  // 1 - 1/Z_cl
};

RecordTerms terms_for(const NuclideRecord& r, double e_tke) {
  const double a = static_cast<double>(r.a);
  RecordTerms t;
  const double iso = (a - 2.0 * r.z) / a;
  t.isospin_sq = iso * iso;
  t.mass_frac = (a - r.a_cl) / a;
  t.energy_gap = 1.0 - e_tke / r.q_total;
  t.z_cl_inv = 1.0 / r.z_cl;
  t.z_cl_weight = 1.0 - t.z_cl_inv;
  return t;
}

double mu_at(const NuclideRecord& r, const ParameterSet& p, double e_tke) {
  if (r.q_total == 0.0) throw DomainError("mu_factor: Q_total must be nonzero");
  const RecordTerms t = terms_for(r, e_tke);
  const auto& a = p.a;
  return std::exp(a[0] + a[1] * t.isospin_sq + a[2] * t.mass_frac * t.energy_gap +
                  (a[3] * t.mass_frac + a[4] * t.z_cl_inv) * t.z_cl_weight);
}

RadiusResult radius_at(const NuclideRecord& r, const ParameterSet& p, RadiusVariant variant,
                       double e_tke) {
  const RecordTerms t = terms_for(r, e_tke);
  const auto& a = p.a;
  const double za = static_cast<double>(r.z) / r.a;
  const double b1 =
      std::exp(a[5] * t.isospin_sq + a[6] * za +
               (a[7] + a[8] * t.mass_frac + a[9] / r.a_cl) * t.energy_gap +
               (a[10] + a[11] * t.mass_frac + a[12] * t.z_cl_inv) * t.z_cl_weight);
  const double b2 =
      std::exp(a[13] / r.z + a[14] * t.isospin_sq + a[15] * za +
               a[16] * t.mass_frac * t.energy_gap +
               (a[17] + a[18] * (static_cast<double>(r.z - r.z_cl) / r.z)) * t.z_cl_weight);
  const double base = variant == RadiusVariant::DaughterMass
                          ? static_cast<double>(r.a - r.a_cl)
                          : static_cast<double>(r.a - r.z_cl);
  const double radius = (b1 * std::cbrt(base) + b1 * std::cbrt(static_cast<double>(r.a_cl)) - 1.0) * b2;
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DegenerateParameterization("kramers_radius: R = " + std::to_string(radius) +
                                     " fm for A=" + std::to_string(r.a) +
                                     ", A_cl=" + std::to_string(r.a_cl));
  }
  return {radius, b1, b2};
}

KramersBreakdown breakdown_at(const NuclideRecord& r, const ParameterSet& p,
                              const PhysicalConstants& c, RadiusVariant variant, double e_tke) {
  if (!(e_tke > 0.0)) throw DomainError("log_half_life: E_TKE must be positive");
  if (!(r.q_total > 0.0)) throw DomainError("log_half_life: Q_total must be positive");
  KramersBreakdown out;
  out.mu = mu_at(r, p, e_tke);
  const RadiusResult rad = radius_at(r, p, variant, e_tke);
  out.b1 = rad.b1;
  out.b2 = rad.b2;
  out.r_kramers = rad.r_kramers;
  out.v_coul = static_cast<double>((r.z - r.z_cl) * r.z_cl) / rad.r_kramers;
  out.eps_avg = average_energy(out.mu * e_tke, r.a, c);
  out.lg_omega_over_2pi = p.a[19] + 1.0 / rad.r_kramers;
  const double barrier_term =
      std::sqrt(r.a / (c.level_density_ratio * out.mu)) * (out.v_coul - e_tke) / std::sqrt(e_tke);
  out.lg_t_half = -out.lg_omega_over_2pi + kLog10eFit * barrier_term;
  return out;
}

}  // namespace

double coulomb_barrier(const NuclideRecord& r, double r_coul_fm,
                       const PhysicalConstants& constants) {
  if (!(r_coul_fm > 0.0)) throw DomainError("coulomb_barrier: radius must be positive");
  return constants.e_squared * static_cast<double>((r.z - r.z_cl) * r.z_cl) / r_coul_fm;
}

double mu_factor(const NuclideRecord& r, const ParameterSet& params) {
  return mu_at(r, params, r.e_tke);
}

RadiusResult kramers_radius(const NuclideRecord& r, const ParameterSet& params,
                            RadiusVariant variant) {
  return radius_at(r, params, variant, r.e_tke);
}

double average_energy(double e_star, int mass_number, const PhysicalConstants& constants) {
  if (e_star < 0.0) throw DomainError("average_energy: negative excitation energy");
  if (mass_number <= 0) throw DomainError("average_energy: mass number must be positive");
  return std::sqrt(e_star * constants.level_density_ratio / mass_number);
}

KramersBreakdown log_half_life(const NuclideRecord& r, const ParameterSet& params,
                               const PhysicalConstants& constants, RadiusVariant variant) {
  return breakdown_at(r, params, constants, variant, r.e_tke);
}

double kramers_rate_full(double delta_u, double omega_min, double omega_max, double beta,
                         double eps, std::vector<std::string>* warnings) {
  if (!(omega_min > 0.0) || !(omega_max > 0.0)) {
    throw DomainError("kramers_rate_full: frequencies must be positive");
  }
  if (beta < 0.0) throw DomainError("kramers_rate_full: negative friction");
  if (eps == 0.0) {
    if (delta_u > 0.0) return 0.0;  // frozen bath cannot climb a finite barrier
    throw DomainError("kramers_rate_full: eps = 0 with no barrier is undefined");
  }
  if (eps < 0.0) throw DomainError("kramers_rate_full: negative eps");
  if (warnings && beta < omega_max / 10.0) {
    warnings->push_back("kramers_rate_full: beta < omega_max/10, outside the stated "
                        "friction range of the rate formula");
  }
  const double half_beta = beta / (2.0 * omega_max);
  const double prefactor = std::sqrt(1.0 + half_beta * half_beta) - half_beta;
  constexpr double two_pi = 6.283185307179586476925;
  return omega_min / two_pi * prefactor * std::exp(-delta_u / eps);
}

EtkeSolution solve_etke(const NuclideRecord& r, const ParameterSet& params, double lg_t_target,
                        const PhysicalConstants& constants, RadiusVariant variant) {
  if (!(r.q_total > 0.0)) throw DomainError("solve_etke: Q_total must be positive");
  const double lo = 0.5 * r.q_total;
  const double hi = r.q_total;

  auto eval = [&](double e) -> double {
    // NaN marks the degenerate (R <= 0) part of the bracket.
    try {
      return breakdown_at(r, params, constants, variant, e).lg_t_half - lg_t_target;
    } catch (const DegenerateParameterization&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  constexpr int kScanPoints = 256;
  constexpr double kTol = 1e-6;
  double prev_e = lo;
  double prev_g = eval(lo);
  std::vector<double> roots;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double e = lo + (hi - lo) * i / kScanPoints;
    const double g = eval(e);
    if (std::isfinite(prev_g) && std::isfinite(g) && prev_g * g <= 0.0 && prev_g != g) {
      double xa = prev_e, xb = e, ga = prev_g, gb = g;
      double mid = 0.5 * (xa + xb);
      for (int it = 0; it < 200; ++it) {
        // secant proposal, kept only if it stays inside the bisection bracket
        double cand = xb - gb * (xb - xa) / (gb - ga);
        if (!(cand > xa && cand < xb)) cand = 0.5 * (xa + xb);
        const double gc = eval(cand);
        mid = cand;
        if (!std::isfinite(gc)) break;
        if (std::abs(gc) <= kTol) break;
        if (ga * gc < 0.0) {
          xb = cand;
          gb = gc;
        } else {
          xa = cand;
          ga = gc;
        }
      }
      roots.push_back(mid);
    }
    prev_e = e;
    prev_g = g;
  }
  if (roots.empty()) {
    throw SolveError("solve_etke: no sign change of lg T - target in [Q/2, Q] for A=" +
                     std::to_string(r.a) + ", A_cl=" + std::to_string(r.a_cl));
  }
  EtkeSolution sol;
  sol.all_roots = roots;
  sol.ambiguous = roots.size() > 1;
  const double kinematic = etke_from_q(r);
  sol.e_tke = *std::min_element(roots.begin(), roots.end(), [kinematic](double x, double y) {
    return std::abs(x - kinematic) < std::abs(y - kinematic);
  });
  return sol;
}

}  // namespace decay
