// Build a couple of monoids in code, compute their invariant integrals and
// split a representation into invariants and complement.

#include <iostream>

#include "reynolds/reynolds.hpp"

using namespace reynolds;

int main() {
  BaseRing q = BaseRing::rationals();

  FiniteMonoid s3 = make_symmetric_group(3);
  IntegralReport r = invariant_integral(s3, q);
  std::cout << "S_3 over Q, w_G =";
  for (const auto& c : r.integral->coeffs()) std::cout << " " << c.to_string();
  std::cout << "\n";

  Representation perm = permutation_representation_symmetric(s3, 3, q);
  auto [invariants, complement] = split_invariants(perm, *r.integral);
  std::cout << "permutation representation splits as " << invariants.dim() << " + "
            << complement.dim() << "\n";

  // a monoid that is not a group: all 2x2 matrices over F_2
  BaseRing f2 = BaseRing::prime_field(2);
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  IntegralReport rm = invariant_integral(m2, f2);
  std::cout << "M_2(F_2) is invariant exact: " << (rm.exists ? "yes" : "no")
            << " (w_G = ev_0, the evaluation at the zero matrix)\n";

  // and one that is not invariant exact
  BaseRing f3 = BaseRing::prime_field(3);
  FiniteMonoid c3 = make_cyclic(3);
  std::cout << "C_3 over F_3 is invariant exact: "
            << (invariant_integral(c3, f3).exists ? "yes" : "no") << "\n";
  return 0;
}
