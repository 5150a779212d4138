#pragma once

#include <array>
#include <string>
#include <vector>

#include "decay/constants.hpp"
#include "decay/nuclide.hpp"

namespace decay {

/// The 20 phenomenological parameters of the half-life model, with the
/// relative errors (as fractions) attached to each.
struct ParameterSet {
  std::array<double, 20> a{};
  std::array<double, 20> rel_err{};
};

/// Exponent base-10 conversion constant as used when the bundled parameter
/// set was calibrated. The historical fit carried lg(e) truncated to three
/// digits; using the full-precision value shifts every predicted lg T by a
/// factor that grows with the barrier term (up to ~0.03 decades on the
/// bundled data), so the truncated constant is part of the model definition.
inline constexpr double kLog10eFit = 0.434;

/// Which mass number feeds the daughter-radius cube root in the radius
/// parameterization. DaughterMass, (A - A_cl)^(1/3), is what the bundled
/// parameters were calibrated with; ParentMinusZcl keeps the printed
/// (A - Z_cl)^(1/3) form for comparison.
enum class RadiusVariant { DaughterMass, ParentMinusZcl };

/// Every intermediate of one half-life evaluation.
struct KramersBreakdown {
  double mu = 0.0;            // excitation fraction E*/E_TKE
  double b1 = 0.0;
  double b2 = 0.0;
  double r_kramers = 0.0;     // fm (absorbs the Coulomb constant, see below)
  double v_coul = 0.0;        // MeV
  double eps_avg = 0.0;       // <eps> = sqrt(E* * ratio / A), MeV
  double lg_omega_over_2pi = 0.0;  // lg(1/years)
  double lg_t_half = 0.0;          // lg(years)
};

struct RadiusResult {
  double r_kramers = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

/// Coulomb barrier e^2 (Z - Z_cl) Z_cl / r for a pointlike pair at r [fm].
double coulomb_barrier(const NuclideRecord& r, double r_coul_fm,
                       const PhysicalConstants& constants);

/// Excitation fraction mu = exp[a1 + a2 ((A-2Z)/A)^2
///   + a3 (A-A_cl)/A (1 - E/Q) + (a4 (A-A_cl)/A + a5/Z_cl)(1 - 1/Z_cl)].
double mu_factor(const NuclideRecord& r, const ParameterSet& params);

/// R = [B1 * base^(1/3) + B1 * A_cl^(1/3) - 1] * B2 with B1, B2 the
/// exponential forms over (a6..a13) and (a14..a19).
/// Throws DegenerateParameterization if R <= 0.
RadiusResult kramers_radius(const NuclideRecord& r, const ParameterSet& params,
                            RadiusVariant variant = RadiusVariant::DaughterMass);

/// Fermi-gas mean thermal energy sqrt(e_star * ratio / A), MeV.
double average_energy(double e_star, int mass_number, const PhysicalConstants& constants);

/// Full model: lg T_1/2 [years] = -(a20 + 1/R)
///   + lg(e) * sqrt(A / (ratio * mu)) * (V_Coul - E_TKE) / sqrt(E_TKE).
/// The barrier is (Z - Z_cl) Z_cl / R in MeV with R in fm: the fitted radius
/// parameterization absorbs the Coulomb constant e^2.
KramersBreakdown log_half_life(const NuclideRecord& r, const ParameterSet& params,
                               const PhysicalConstants& constants,
                               RadiusVariant variant = RadiusVariant::DaughterMass);

/// Escape rate over a parabolic-capped barrier at friction beta = gamma/m:
///   w = (omega_min/2pi) { sqrt(1 + (beta/2 omega_max)^2) - beta/2 omega_max }
///       * exp(-delta_u / eps).
/// Appends a note to `warnings` when beta < omega_max/10, where the formula
/// is outside its stated friction range.
double kramers_rate_full(double delta_u, double omega_min, double omega_max,
                         double beta, double eps,
                         std::vector<std::string>* warnings = nullptr);

struct EtkeSolution {
  double e_tke = 0.0;               // root nearest the kinematic Q(A-A_cl)/A
  std::vector<double> all_roots;    // every root found in [Q/2, Q], ascending
  bool ambiguous = false;           // more than one root (non-monotone bracket)
};

/// Inverts lg T(E_TKE) = lg_t_target for E_TKE in [Q/2, Q] by scanning the
/// non-degenerate part of the bracket and refining each sign change to
/// |lg T - target| <= 1e-6. Throws SolveError when no sign change exists.
EtkeSolution solve_etke(const NuclideRecord& r, const ParameterSet& params,
                        double lg_t_target, const PhysicalConstants& constants,
                        RadiusVariant variant = RadiusVariant::DaughterMass);

}  // namespace decay
