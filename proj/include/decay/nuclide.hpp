#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "decay/errors.hpp"

namespace decay {

enum class Role { Fit, Validate, Predict };

enum class DecayClass { Alpha, Cluster, SpontaneousFission };

/// One decay channel of a parent nucleus: alpha emission, heavy-cluster
/// emission, or spontaneous fission (light fragment listed as the cluster).
struct NuclideRecord {
  std::string element;      // may be empty for unnamed superheavies
  int a = 0;                // parent mass number
  int z = 0;                // parent charge
  int a_cl = 0;             // cluster / light-fragment mass number
  int z_cl = 0;             // cluster / light-fragment charge
  double e_tke = 0.0;       // total kinetic energy of decay products, MeV
  double e_tke_err = 0.0;   // MeV
  double q_total = 0.0;     // total decay energy, MeV
  double q_err = 0.0;       // MeV
  double t_half_exp = 0.0;  // measured half-life, years
  double t_half_err_lo = 0.0;
  double t_half_err_hi = 0.0;
  Role role = Role::Fit;
  DecayClass decay_class = DecayClass::Alpha;
};

/// Class implied by the emitted particle: (4,2) is alpha, fragments heavier
/// than 34 are fission, anything in between is cluster radioactivity.
DecayClass classify(int a_cl, int z_cl);

/// Throws ValidationError naming the violated rule.
void validate(const NuclideRecord& r);

/// Kinetic energy the products share when the daughter stays unexcited:
/// Q * (A - A_cl) / A.
double etke_from_q(const NuclideRecord& r);

/// Immutable after load; safe to share read-only across workers.
struct Dataset {
  std::vector<NuclideRecord> records;
  std::string provenance;

  std::size_t count_role(Role role) const;
  std::size_t count_class(DecayClass c) const;
};

const char* to_string(Role role);
const char* to_string(DecayClass c);
Role role_from_string(const std::string& s);
DecayClass decay_class_from_string(const std::string& s);

}  // namespace decay
