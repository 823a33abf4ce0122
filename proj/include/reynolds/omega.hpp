#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reynolds/integrals.hpp"
#include "reynolds/repr.hpp"

namespace reynolds {

/// A nonzero linear operator on A, as an n x n matrix acting on value vectors
/// in the delta basis: (Omega a)(x) = sum_y matrix[x][y] a(y).
class OmegaOperator {
 public:
  OmegaOperator(const FiniteMonoid& m, ExactMatrix matrix) : monoid_(&m), matrix_(std::move(matrix)) {
    if (matrix_.rows() != m.order() || matrix_.cols() != m.order())
      throw dimension_error("OmegaOperator: matrix must be order x order");
    if (matrix_.is_zero()) throw validation_error("OmegaOperator: operator must be nonzero");
  }

  const FiniteMonoid& monoid() const { return *monoid_; }
  const ExactMatrix& matrix() const { return matrix_; }
  const BaseRing& ring() const { return matrix_.ring(); }

  FunctionElement apply(const FunctionElement& a) const {
    std::vector<Scalar> out(monoid_->order(), Scalar::zero(ring()));
    for (std::size_t x = 0; x < monoid_->order(); ++x)
      for (std::size_t y = 0; y < monoid_->order(); ++y)
        out[x] = out[x] + matrix_.at(x, y) * a.value(y);
    return FunctionElement(*monoid_, std::move(out));
  }

 private:
  const FiniteMonoid* monoid_;
  ExactMatrix matrix_;
};

namespace detail {

/// Matrix of the right translation a -> a(. g) on the delta basis.
inline ExactMatrix right_translation_matrix(const FiniteMonoid& m, const BaseRing& k, std::size_t g) {
  ExactMatrix r(m.order(), m.order(), k);
  for (std::size_t x = 0; x < m.order(); ++x) r.set(x, m.mul(x, g), Scalar::one(k));
  return r;
}
/// Matrix of the left translation a -> a(g .).
inline ExactMatrix left_translation_matrix(const FiniteMonoid& m, const BaseRing& k, std::size_t g) {
  ExactMatrix r(m.order(), m.order(), k);
  for (std::size_t x = 0; x < m.order(); ++x) r.set(x, m.mul(g, x), Scalar::one(k));
  return r;
}

}  // namespace detail

struct OmegaVerification {
  bool valid = true;
  std::string first_violation;  // names (g, delta basis index, which axiom)
};

/// Checks the twisted-intertwining axioms Omega(a.g) = chi(g) (Omega(a).g)
/// and Omega(g.a) = chi(g) (g.Omega(a)) on the delta basis for every g, with
/// a.g the right translate and g.a the left translate.
inline OmegaVerification verify_omega(const OmegaOperator& omega, const Character& chi) {
  const FiniteMonoid& m = omega.monoid();
  const BaseRing& k = omega.ring();
  require_same_ring(k, chi.ring(), "verify_omega");
  OmegaVerification out;
  for (std::size_t g = 0; g < m.order(); ++g) {
    ExactMatrix rg = detail::right_translation_matrix(m, k, g);
    ExactMatrix lhs = omega.matrix() * rg;
    ExactMatrix rhs = (rg * omega.matrix()).scaled(chi.value(g));
    if (lhs != rhs) {
      for (std::size_t j = 0; j < m.order(); ++j)
        if (lhs.column(j) != rhs.column(j)) {
          out.valid = false;
          out.first_violation = "right axiom fails at (g=" + std::to_string(g) + ", delta_" +
                                std::to_string(j) + ")";
          return out;
        }
    }
    ExactMatrix lg = detail::left_translation_matrix(m, k, g);
    lhs = omega.matrix() * lg;
    rhs = (lg * omega.matrix()).scaled(chi.value(g));
    if (lhs != rhs) {
      for (std::size_t j = 0; j < m.order(); ++j)
        if (lhs.column(j) != rhs.column(j)) {
          out.valid = false;
          out.first_violation = "left axiom fails at (g=" + std::to_string(g) + ", delta_" +
                                std::to_string(j) + ")";
          return out;
        }
    }
  }
  return out;
}

/// Pointwise multiplication by chi^-1: the canonical Omega-process on a group
/// (all character values must be units), normalized with Omega(chi) = 1.
inline OmegaOperator canonical_omega(const FiniteMonoid& m, const Character& chi) {
  ExactMatrix d(m.order(), m.order(), chi.ring());
  for (std::size_t x = 0; x < m.order(); ++x) {
    if (!chi.value(x).is_unit())
      throw validation_error("canonical_omega: chi(" + std::to_string(x) + ") is not a unit");
    d.set(x, x, chi.value(x).inverse());
  }
  return OmegaOperator(m, std::move(d));
}

struct OmegaSolution {
  std::vector<OmegaOperator> basis;          // basis of the solution space
  std::optional<OmegaOperator> normalized;   // one solution with Omega(chi) = 1, if requested/feasible
  std::string notes;
};

/// Solves the (linear) Omega axioms for all of A -> A; optionally imposes the
/// normalization Omega(chi) = 1.  An empty basis is a legitimate outcome.
inline OmegaSolution find_omega(const FiniteMonoid& m, const Character& chi, bool normalize) {
  const BaseRing& k = chi.ring();
  std::size_t n = m.order(), dim = n * n;
  ExactMatrix eye = ExactMatrix::identity(n, k);
  Subspace space = Subspace::full(dim, k);
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix rg = detail::right_translation_matrix(m, k, g);
    ExactMatrix lg = detail::left_translation_matrix(m, k, g);
    // Omega R_g - chi(g) R_g Omega = 0, flattened row-major
    space = refine_kernel(space, eye.kron(rg.transpose()) - rg.kron(eye).scaled(chi.value(g)));
    if (space.dim() == 0) break;
    space = refine_kernel(space, eye.kron(lg.transpose()) - lg.kron(eye).scaled(chi.value(g)));
    if (space.dim() == 0) break;
  }
  OmegaSolution out;
  for (std::size_t j = 0; j < space.dim(); ++j)
    out.basis.emplace_back(m, ExactMatrix::unvec(space.basis().column(j), n, n));
  if (space.dim() == 0) {
    out.notes = "only the zero operator satisfies the axioms";
    return out;
  }
  if (normalize) {
    // Omega(chi) = constant 1: for each x, sum_y Omega[x][y] chi(y) = 1
    ExactMatrix sys(n, space.dim(), k);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      ExactMatrix b = ExactMatrix::unvec(space.basis().column(j), n, n);
      for (std::size_t x = 0; x < n; ++x) {
        Scalar s = Scalar::zero(k);
        for (std::size_t y = 0; y < n; ++y) s = s + b.at(x, y) * chi.value(y);
        sys.set(x, j, s);
      }
    }
    ExactMatrix ones(n, 1, k);
    for (std::size_t x = 0; x < n; ++x) ones.set(x, 0, Scalar::one(k));
    SolveReport sol = solve_linear(sys, ones);
    if (sol.feasible) {
      ExactMatrix mat(n, n, k);
      for (std::size_t j = 0; j < space.dim(); ++j) {
        const Scalar& t = sol.particular->at(j, 0);
        if (t.is_zero()) continue;
        mat = mat + ExactMatrix::unvec(space.basis().column(j), n, n).scaled(t);
      }
      out.normalized.emplace(m, std::move(mat));
      out.notes = "normalization Omega(chi) = 1 is feasible";
    } else {
      out.notes = "normalization Omega(chi) = 1 is infeasible: " + sol.certificate;
    }
  }
  return out;
}

/// The central element z with chi . Omega(a) = z . a, where the bimodule
/// action of ev_g is the right translation (ev_g . a)(x) = a(x g) by default
/// (the left-translation convention sits behind the flag).  Verifies that the
/// composite intertwines both translation actions and that z is central.
inline DualElement central_element(const OmegaOperator& omega, const Character& chi,
                                   Side action_side = Side::right) {
  const FiniteMonoid& m = omega.monoid();
  const BaseRing& k = omega.ring();
  OmegaVerification v = verify_omega(omega, chi);
  if (!v.valid) throw validation_error("central_element: Omega fails the axioms: " + v.first_violation);
  std::size_t n = m.order();
  ExactMatrix composite(n, n, k);  // chi . Omega(a): pointwise multiply by chi
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) composite.set(x, y, chi.value(x) * omega.matrix().at(x, y));

  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix rg = detail::right_translation_matrix(m, k, g);
    ExactMatrix lg = detail::left_translation_matrix(m, k, g);
    if (composite * rg != rg * composite || composite * lg != lg * composite)
      throw theorem_violation("central_element: chi.Omega is not a bimodule intertwiner at g=" +
                              std::to_string(g));
  }

  ExactMatrix cols(n * n, n, k);
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix tg = action_side == Side::right ? detail::right_translation_matrix(m, k, g)
                                                : detail::left_translation_matrix(m, k, g);
    ExactMatrix vg = tg.vec();
    for (std::size_t i = 0; i < n * n; ++i) cols.set(i, g, vg.at(i, 0));
  }
  SolveReport sol = solve_linear(cols, composite.vec());
  if (!sol.feasible)
    throw theorem_violation("central_element: composite is not in the span of translations");
  DualElement z = DualElement::from_column(m, *sol.particular);
  for (std::size_t g = 0; g < n; ++g) {
    DualElement ev = DualElement::evaluation(m, k, g);
    if (convolve(z, ev) != convolve(ev, z))
      throw theorem_violation("central_element: z is not central at g=" + std::to_string(g));
  }
  return z;
}

/// w' = w_G o Omega, the semi-invariant integral built from an Omega-process
/// with Omega(chi) = 1; verified to equal the directly solved w_chi.
inline DualElement integral_from_omega(const OmegaOperator& omega, const Character& chi,
                                       const DualElement& w_g) {
  const FiniteMonoid& m = omega.monoid();
  require_invariant_integral(w_g, "integral_from_omega");
  OmegaVerification v = verify_omega(omega, chi);
  if (!v.valid) throw validation_error("integral_from_omega: Omega fails the axioms: " + v.first_violation);
  FunctionElement chi_a = FunctionElement::from_character(m, chi);
  FunctionElement omega_chi = omega.apply(chi_a);
  for (std::size_t x = 0; x < m.order(); ++x)
    if (!omega_chi.value(x).is_one())
      throw validation_error("integral_from_omega: Omega(chi) != 1");

  // w'(a) = w_G(Omega(a)), so in coordinates w' = Omega^T w_G
  ExactMatrix col = omega.matrix().transpose() * w_g.as_column();
  DualElement w_prime = DualElement::from_column(m, col);

  IntegralReport direct = semi_invariant_integral(m, chi);
  if (!direct.exists || *direct.integral != w_prime)
    throw theorem_violation("integral_from_omega: w_G o Omega != solved semi-invariant integral");
  return w_prime;
}

/// The Reynolds chi-operator of V computed through the Omega-process:
/// entry (i,j) is (w_G o Omega)(a_ij) on the matrix coefficients of V.
/// Verified to equal the action of the directly solved w_chi.
inline ExactMatrix chi_reynolds_via_omega(const Representation& v, const OmegaOperator& omega,
                                          const Character& chi) {
  const FiniteMonoid& m = omega.monoid();
  if (!(v.monoid() == m)) throw validation_error("chi_reynolds_via_omega: monoid mismatch");
  IntegralReport ir = invariant_integral(m, v.ring());
  if (!ir.exists)
    throw validation_error("chi_reynolds_via_omega: no invariant integral for this monoid");
  const DualElement& w_g = *ir.integral;
  OmegaVerification ver = verify_omega(omega, chi);
  if (!ver.valid)
    throw validation_error("chi_reynolds_via_omega: Omega fails the axioms: " + ver.first_violation);

  ExactMatrix out(v.dim(), v.dim(), v.ring());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      FunctionElement a_ij = v.matrix_coefficient(i, j);
      out.set(i, j, pair(w_g, omega.apply(a_ij)));
    }

  IntegralReport direct = semi_invariant_integral(m, chi);
  if (!direct.exists)
    throw theorem_violation("chi_reynolds_via_omega: semi-invariant integral missing");
  if (out != action_matrix(*direct.integral, v))
    throw theorem_violation("chi_reynolds_via_omega: formula disagrees with the w_chi action");
  return out;
}

}  // namespace reynolds
