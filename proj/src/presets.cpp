#include "basindim/presets.hpp"

#include <stdexcept>
#include <string>

namespace basindim {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    const Polynomial minus_square({Complex{}, Complex{}, Complex{-1.0, 0.0}});
    const SampleRegion erf_tract{-4.0, 4.0, 1.0, 10.0};
    const SampleRegion cosine_tract{-10.0, 10.0, -30.0, 30.0};
    return std::vector<Preset>{
        {"example1", FunctionSpec::erf_scaled(Complex{-2.0, 0.0}), 2, Complex{1.7, 0.0}, 2.8, erf_tract, true},
        {"morosawa",
         FunctionSpec::pexpq(Polynomial::constant(Complex{-0.14, 0.0}), minus_square, Complex{0.0, 1.9}), 2,
         Complex{0.0, 0.8}, 2.8, erf_tract, true},
        {"cosine2", FunctionSpec::cosine(Complex{0.0, -0.15}, Complex{0.0, 4.15}), 2, Complex{0.0, -0.05}, 8.0,
         cosine_tract, false},
        {"cosine3", FunctionSpec::cosine(Complex{0.0, -0.1}, Complex{1.3, -3.7}), 3, Complex{0.2, -0.2}, 8.0,
         cosine_tract, false},
        {"explambda", FunctionSpec::exp_lambda(Complex{0.2, 0.0}), 1, Complex{0.25, 0.0}, 4.0,
         SampleRegion{0.0, 30.0, -10.0, 10.0}, true},
    };
  }();
  return all;
}

const Preset& preset(std::string_view name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace basindim
