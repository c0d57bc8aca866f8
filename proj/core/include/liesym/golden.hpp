#pragma once

#include <string>
#include <vector>

namespace liesym::golden {

/// One expected reduction of the flagship preset: the generator given by
/// its components, the resulting invariants and equation text, and the
/// number of notes the reducer must attach.
struct Reduction {
  std::string label;
  std::string xi;
  std::string eta;
  std::string phi;
  std::string chi;
  std::string shift;
  std::string ode;
  int order = 0;
  int notes = 0;
};

/// Frozen expected results for the flagship preset, in the exact printed
/// form the library produces. The repro command and the acceptance run
/// diff against these.
struct Flagship {
  std::string preset;
  std::string equation;
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> commutators;
  std::vector<std::vector<std::string>> adjoint;
  bool solvable = false;
  bool nilpotent = false;
  int derived_length = 0;
  int nilpotency_class = 0;
  std::vector<std::string> optimal_classes;
  std::vector<std::string> optimal_uncovered;
  std::vector<Reduction> reductions;
  std::string zeta_solution;
  std::string u_solution;
};

const Flagship& flagship();

}  // namespace liesym::golden
