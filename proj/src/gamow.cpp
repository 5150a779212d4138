#include "decay/gamow.hpp"

#include <cmath>

#include "decay/errors.hpp"

namespace decay {

namespace {

constexpr double kLog10e = 0.43429448190325182765;

double sommerfeld_scale(const GamowInputs& in, const PhysicalConstants& c) {
  return 4.0 * c.e_squared * (in.z - 2) / c.hbar_c *
         std::sqrt(2.0 * in.mu_alpha() * c.amu / in.e_alpha);
}

}  // namespace

double gamow_log_half_life(const GamowInputs& in, const PhysicalConstants& constants) {
  const double x = in.x(constants);
  if (!(x > 0.0)) throw DomainError("gamow_log_half_life: x must be positive");
  if (x >= 1.0) {
    throw DomainError("gamow_log_half_life: x >= 1, alpha energy is above the barrier");
  }
  const double bracket = std::acos(std::sqrt(x)) - std::sqrt(x * (1.0 - x));
  return -in.lg_omega_over_2pi + kLog10e * sommerfeld_scale(in, constants) * bracket;
}

double gamow_log_half_life_approx(const GamowInputs& in, const PhysicalConstants& constants,
                                  std::vector<std::string>* warnings) {
  const double x = in.x(constants);
  if (!(x > 0.0)) throw DomainError("gamow_log_half_life_approx: x must be positive");
  if (x >= 0.5) {
    throw DomainError("gamow_log_half_life_approx: x >= 0.5, outside the thick-barrier range");
  }
  if (warnings && x > 0.3) {
    warnings->push_back("gamow_log_half_life_approx: x = " + std::to_string(x) +
                        " > 0.3, expansion error grows");
  }
  constexpr double half_pi = 1.57079632679489661923;
  const double bracket = half_pi - 2.0 * std::sqrt(x);
  return -in.lg_omega_over_2pi + kLog10e * sommerfeld_scale(in, constants) * bracket;
}

GNFit geiger_nuttall_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("geiger_nuttall_fit: need at least two points");
  double sx = 0.0, sy = 0.0;
  const double n = static_cast<double>(points.size());
  for (const auto& [e, lg_t] : points) {
    if (!(e > 0.0)) throw DomainError("geiger_nuttall_fit: non-positive E_TKE");
    sx += 1.0 / std::sqrt(e);
    sy += lg_t;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [e, lg_t] : points) {
    const double dx = 1.0 / std::sqrt(e) - mx;
    sxx += dx * dx;
    sxy += dx * (lg_t - my);
  }
  if (sxx == 0.0) {
    throw DomainError("geiger_nuttall_fit: all abscissae coincide, fit is degenerate");
  }
  GNFit fit;
  fit.c = sxy / sxx;
  fit.b = -(my - fit.c * mx);
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& [e, lg_t] : points) {
    const double pred = fit.c / std::sqrt(e) - fit.b;
    ss_res += (lg_t - pred) * (lg_t - pred);
    ss_tot += (lg_t - my) * (lg_t - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace decay
