#include "liesym/golden.hpp"

namespace liesym::golden {

const Flagship& flagship() {
  static const Flagship data = {
      "viscoelastic-tube",
      "u_t + a*u*u_x + b*u_x3 + c*u_x4 + d*u_x5 = e*u_x2",
      {"d/dx", "d/dt", "(t) d/dx + (1/a) d/du"},
      {{"0", "0", "0"},
       {"0", "0", "v1"},
       {"0", "-v1", "0"}},
      {{"v1", "v2", "v3"},
       {"v1", "v2", "v3 - eps*v1"},
       {"v1", "v2 + eps*v1", "v3"}},
      true,
      true,
      2,
      2,
      {"v2", "v3 + alpha*v2"},
      {"v1"},
      {
          {"v3", "t", "0", "1/a", "t", "x/(t*a)", "zeta/chi + zeta_chi", 1, 0},
          {"v2", "0", "1", "0", "x", "0",
           "b*zeta_chi3 + c*zeta_chi4 + d*zeta_chi5 - e*zeta_chi2 + a*zeta*zeta_chi", 5, 0},
          {"v2 + c0*v1", "c0", "1", "0", "x - t*c0", "0",
           "b*zeta_chi3 + c*zeta_chi4 - c0*zeta_chi + d*zeta_chi5 - e*zeta_chi2 + "
           "a*zeta*zeta_chi",
           5, 0},
          {"v3 + beta*v2", "t", "beta", "1/a", "x - 1/2*t^2/beta", "t/(a*beta)",
           "1/(a*beta) + b*zeta_chi3 + c*zeta_chi4 + d*zeta_chi5 - e*zeta_chi2 + "
           "a*zeta*zeta_chi",
           5, 1},
      },
      "c1/chi",
      "x/(t*a) + c1/t",
  };
  return data;
}

}  // namespace liesym::golden
