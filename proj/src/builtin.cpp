#include "decay/builtin.hpp"

#include <sstream>

#include "decay/dataset_io.hpp"

namespace decay {

const Dataset& builtin_dataset() {
  static const Dataset ds = [] {
    std::istringstream in(builtin_dataset_csv());
    return load_dataset(in, "builtin");
  }();
  return ds;
}

const ParameterSet& builtin_parameters() {
  static const ParameterSet p = [] {
    std::istringstream in(builtin_parameters_text());
    return load_parameters(in);
  }();
  return p;
}

}  // namespace decay
