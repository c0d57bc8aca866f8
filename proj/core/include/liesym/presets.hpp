#pragma once

#include "liesym/determine.hpp"
#include "liesym/pde.hpp"

#include <string>
#include <vector>

namespace liesym {

/// A named equation with evaluation points whose entries are chosen so the
/// two-point parameter fit is well posed (distinct small primes at the
/// second point, none of them dividing a first-point value).
struct Preset {
  std::string name;
  std::string equation;
  ParameterPoint point1;
  ParameterPoint point2;
  int degree = 3;
};

const std::vector<Preset>& presets();

/// Null when the name is unknown.
const Preset* find_preset(const std::string& name);

EvolutionPDE preset_equation(const Preset& p);

}  // namespace liesym
