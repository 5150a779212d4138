#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "decay/nuclide.hpp"

namespace decay {

struct ParameterSet;

inline constexpr const char* kDatasetCsvHeader =
    "element,A,Z,A_cl,Z_cl,E_TKE_MeV,E_TKE_err_MeV,Q_MeV,Q_err_MeV,"
    "T_half_exp_yr,T_half_err_lo_yr,T_half_err_hi_yr,role,decay_class";

/// Reads the CSV dataset format. Lines starting with '#' are skipped.
/// Throws ParseError (bad syntax, names the line) or ValidationError
/// (record invariant, names the record and rule).
Dataset load_dataset(std::istream& in, std::string provenance = "stream");
Dataset load_dataset_file(const std::string& path);

/// Writes the same CSV format with shortest round-trip number formatting.
void serialize_dataset(std::ostream& out, const Dataset& ds);

/// Parameter file: 20 lines of "index value rel_err_percent", index 1-20.
ParameterSet load_parameters(std::istream& in);
ParameterSet load_parameters_file(const std::string& path);
void serialize_parameters(std::ostream& out, const ParameterSet& params);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace decay
