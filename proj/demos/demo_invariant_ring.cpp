// Generators of the polynomial invariant ring of the C_4 rotation action.

#include <iostream>

#include "reynolds/reynolds.hpp"

using namespace reynolds;

int main() {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c4 = make_cyclic(4);
  Representation rot = rotation_representation_c4(c4, q);
  DualElement w_g = *invariant_integral(c4, q).integral;

  InvariantGenerators gens = invariant_ring_generators(rot, w_g, 4);
  std::cout << "degree-d invariants of the 90-degree rotation on Q[x0, x1]:\n";
  for (unsigned d = 0; d < gens.dims_by_degree.size(); ++d)
    std::cout << "  d=" << d << ": dim " << gens.dims_by_degree[d]
              << " (oracle " << invariant_dimension(rot, w_g, d) << ")\n";
  std::cout << "generators:\n";
  for (std::size_t i = 0; i < gens.generators.size(); ++i)
    std::cout << "  degree " << gens.degrees[i] << ": " << gens.generators[i].to_string() << "\n";
  return 0;
}
