#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "basindim/funcat.hpp"
#include "basindim/logtransform.hpp"

namespace basindim {

/// A function from the catalog together with its cycle seed, figure window
/// and the sampling rectangle used for the hypothesis checks.
struct Preset {
  std::string name;
  FunctionSpec function;
  int period;
  Complex seed;
  double window;          // half-width = half-height of the figure window
  SampleRegion tract;     // rectangle reaching into the tracts
  bool integral_family;   // of the form c + integral p e^q
};

const std::vector<Preset>& presets();
const Preset& preset(std::string_view name);  // throws std::invalid_argument

}  // namespace basindim
