#include "rdi/catalog.hpp"

namespace rdi {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"rest", "free particle at rest", {}, "eA = 0"},
      {"rotation", "Gaussian packet rotating rigidly around a circle of radius r0",
       {"r0", "omega", "B0"}, "eA, E, B, J, J_D, classical and nonrelativistic limits"},
      {"translation", "Gaussian packet translated along y by a trajectory Y(t)",
       {"L", "T", "B0"}, "eA, E, B, J, classical and nonrelativistic limits"},
      {"translation-unnormalized", "translation without the 1/sqrt(u^0) factor; unreachable",
       {"L", "T", "B0"}, "none (fails the Hermiticity gate)"},
      {"confined-3d", "stationary state confined in 3D with beta = arcsin f'(z)",
       {"B0", "energy", "xi"}, "eA_0(f)"},
      {"soft-coulomb", "confined state with f(z) = sqrt(xi^2 + z^2)", {"xi", "B0"},
       "eA_0"},
      {"rotation-3d", "the confined state carried around a circle", {"r0", "omega", "B0", "xi"},
       "eA"},
      {"scalar", "state with beta = arctan(z/xi) held by a scalar potential", {"xi", "energy"},
       "V(z)"},
      {"nonlinear", "state with beta = pi/2 held by scalar and nonlinear interactions",
       {"xi", "kappa"}, "V(z)"},
      {"boosted-landau", "Landau ground state boosted along y", {"u2", "B0"}, "E, B"},
      {"accelerated-boost", "Landau state under the time-dependent boost of a constant E field",
       {"E0", "B0"}, "Dirac residual only"},
  };
  return entries;
}

}  // namespace rdi
