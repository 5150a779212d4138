#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decay/constants.hpp"

namespace decay {

/// Inputs of the tunneling half-life for one alpha emitter.
struct GamowInputs {
  int z = 0;                       // parent charge
  int a = 0;                       // parent mass number
  double e_alpha = 0.0;            // alpha kinetic energy, MeV
  double r_coul = 0.0;             // Coulomb radius, fm
  double lg_omega_over_2pi = 0.0;  // lg(1/years)

  /// Reduced mass 4(A-4)/A in amu.
  double mu_alpha() const { return 4.0 * (a - 4) / a; }

  /// Classical turning radius 2 e^2 (Z-2) / E, fm. The factor 2 makes
  /// V(r_T) = E for the charge product 2(Z-2).
  double turning_radius(const PhysicalConstants& c) const {
    return 2.0 * c.e_squared * (z - 2) / e_alpha;
  }

  double x(const PhysicalConstants& c) const { return r_coul / turning_radius(c); }
};

/// Straight-line fit lg T = C / sqrt(E_TKE) - B.
struct GNFit {
  double c = 0.0;          // slope, lg(years) * MeV^(1/2)
  double b = 0.0;          // negated intercept, lg(years)
  double r_squared = 0.0;
};

/// WKB barrier integral between r_coul and the turning radius:
/// lg T = -lg(omega/2pi)
///        + lg(e) * (4 e^2 (Z-2)/hbar_c) sqrt(2 mu_alpha amu / E)
///          * [arccos(sqrt x) - sqrt(x(1-x))].
/// Requires 0 < x < 1; throws DomainError otherwise.
double gamow_log_half_life(const GamowInputs& in, const PhysicalConstants& constants);

/// Thick-barrier expansion of the same expression with the bracket replaced
/// by pi/2 - 2 sqrt(x). Valid for x < 0.5 (throws DomainError beyond);
/// appends a warning above x = 0.3.
double gamow_log_half_life_approx(const GamowInputs& in, const PhysicalConstants& constants,
                                  std::vector<std::string>* warnings = nullptr);

/// Ordinary least squares of lg T against 1/sqrt(E_TKE) over (E_TKE, lg T)
/// points. Needs at least two distinct abscissae.
GNFit geiger_nuttall_fit(std::span<const std::pair<double, double>> points);

}  // namespace decay
