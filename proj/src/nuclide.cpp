#include "decay/nuclide.hpp"

#include <algorithm>

namespace decay {

DecayClass classify(int a_cl, int z_cl) {
  if (a_cl == 4 && z_cl == 2) return DecayClass::Alpha;
  if (a_cl > 34) return DecayClass::SpontaneousFission;
  return DecayClass::Cluster;
}

void validate(const NuclideRecord& r) {
  auto fail = [&r](const char* rule) {
    std::string name = r.element.empty() ? "?" : r.element;
    throw ValidationError("record " + name + "-" + std::to_string(r.a) + " (A_cl=" +
                          std::to_string(r.a_cl) + "): " + rule);
  };
  if (!(r.z >= 1)) fail("Z >= 1");
  if (!(r.a > r.z)) fail("A > Z");
  if (!(r.a_cl >= 4)) fail("A_cl >= 4");
  if (!(r.z_cl >= 2)) fail("Z_cl >= 2");
  if (!(r.a_cl < r.a)) fail("A_cl < A");
  if (!(r.z_cl < r.z)) fail("Z_cl < Z");
  if (!(r.e_tke > 0.0)) fail("E_TKE > 0");
  if (!(r.q_total >= r.e_tke)) fail("Q_total >= E_TKE");
  if (r.decay_class != classify(r.a_cl, r.z_cl)) fail("decay_class matches (A_cl, Z_cl)");
  if (r.role != Role::Predict && !(r.t_half_exp > 0.0)) {
    fail("T_half_exp > 0 for fit/validate roles");
  }
}

double etke_from_q(const NuclideRecord& r) {
  return r.q_total * static_cast<double>(r.a - r.a_cl) / static_cast<double>(r.a);
}

std::size_t Dataset::count_role(Role role) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [role](const NuclideRecord& r) { return r.role == role; }));
}

std::size_t Dataset::count_class(DecayClass c) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [c](const NuclideRecord& r) { return r.decay_class == c; }));
}

const char* to_string(Role role) {
  switch (role) {
    case Role::Fit: return "fit";
    case Role::Validate: return "validate";
    case Role::Predict: return "predict";
  }
  return "?";
}

const char* to_string(DecayClass c) {
  switch (c) {
    case DecayClass::Alpha: return "alpha";
    case DecayClass::Cluster: return "cluster";
    case DecayClass::SpontaneousFission: return "sf";
  }
  return "?";
}

Role role_from_string(const std::string& s) {
  if (s == "fit") return Role::Fit;
  if (s == "validate") return Role::Validate;
  if (s == "predict") return Role::Predict;
  throw ParseError("unknown role '" + s + "'");
}

DecayClass decay_class_from_string(const std::string& s) {
  if (s == "alpha") return DecayClass::Alpha;
  if (s == "cluster") return DecayClass::Cluster;
  if (s == "sf") return DecayClass::SpontaneousFission;
  throw ParseError("unknown decay_class '" + s + "'");
}

}  // namespace decay
