#include "liesym/presets.hpp"

namespace liesym {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"viscoelastic-tube",
       "u_t + a*u*u_x + b*u_x3 + c*u_x4 + d*u_x5 = e*u_x2",
       {{"a", 2}, {"b", 3}, {"c", 5}, {"d", 7}, {"e", 11}},
       {{"a", 13}, {"b", 17}, {"c", 19}, {"d", 23}, {"e", 29}},
       3},
      {"burgers", "u_t + u*u_x = u_x2", {}, {}, 3},
      {"kdv", "u_t + a*u*u_x + b*u_x3 = 0", {{"a", 2}, {"b", 3}}, {{"a", 13}, {"b", 17}}, 3},
  };
  return table;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

EvolutionPDE preset_equation(const Preset& p) { return EvolutionPDE::parse(p.equation); }

}  // namespace liesym
