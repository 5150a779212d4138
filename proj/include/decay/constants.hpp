#pragma once

#include "decay/errors.hpp"

namespace decay {

/// Physical constants in MeV/fm/year units.
struct PhysicalConstants {
  double e_squared = 1.43996;         // Coulomb constant e^2, MeV*fm
  double hbar_c = 197.3269631;        // MeV*fm
  double amu = 931.494;               // atomic mass unit, MeV
  double seconds_per_year = 3.1557e7;
  double level_density_ratio = 8.0;   // A/a, MeV (Fermi-gas level density)

  void validate() const {
    if (e_squared <= 0 || hbar_c <= 0 || amu <= 0 || seconds_per_year <= 0 ||
        level_density_ratio <= 0) {
      throw DomainError("PhysicalConstants: all constants must be positive");
    }
    if (level_density_ratio < 7.0 || level_density_ratio > 9.0) {
      throw DomainError("PhysicalConstants: level_density_ratio outside [7, 9]");
    }
  }
};

}  // namespace decay
