#pragma once

#include "decay/kramers.hpp"
#include "decay/nuclide.hpp"

namespace decay {

/// Raw CSV text of the bundled 100-record dataset.
const char* builtin_dataset_csv();

/// Raw text of the bundled parameter file (20 lines).
const char* builtin_parameters_text();

/// Parsed, validated copies of the bundled data. Built once, then shared.
const Dataset& builtin_dataset();
const ParameterSet& builtin_parameters();

}  // namespace decay
