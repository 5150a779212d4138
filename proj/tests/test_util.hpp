#pragma once

#include <cmath>
#include <string>

#include "decay/nuclide.hpp"

namespace decay::testutil {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

inline NuclideRecord make_record(int a, int z, int a_cl, int z_cl, double e_tke, double q,
                                 double t_exp = 1.0, Role role = Role::Fit) {
  NuclideRecord r;
  r.a = a;
  r.z = z;
  r.a_cl = a_cl;
  r.z_cl = z_cl;
  r.e_tke = e_tke;
  r.q_total = q;
  r.t_half_exp = t_exp;
  r.t_half_err_lo = r.t_half_err_hi = 0.1 * t_exp;
  r.role = role;
  r.decay_class = classify(a_cl, z_cl);
  return r;
}

}  // namespace decay::testutil
