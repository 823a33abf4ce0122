#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reynolds/bialgebra.hpp"
#include "reynolds/linalg.hpp"

namespace reynolds {

struct IntegralReport {
  bool exists = false;
  std::optional<DualElement> integral;
  /// Dimension (rank over Z) of the space of left-invariant forms in A*.
  std::size_t left_space_dim = 0;
  /// Over Z, the violated invariant factor when infeasible (0 otherwise).
  BigInt obstruction = 0;
  std::string notes;
};

namespace detail {

/// Rows expressing ev_g * w = c*w for all g (left) and w * ev_g = c*w (right),
/// as a homogeneous system M w = 0 in the n coefficients of w.
/// Row block for fixed g: row k reads  sum_{j : g*j = k} w_j - c_k w_k = 0.
inline ExactMatrix invariance_rows(const FiniteMonoid& m, const BaseRing& ring,
                                   const std::vector<Scalar>& twist) {
  std::size_t n = m.order();
  ExactMatrix rows(2 * n * n, n, ring);
  std::size_t r = 0;
  for (std::size_t g = 0; g < n; ++g) {
    // left: coefficient of ev_k in ev_g * w is sum over j with g*j = k
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = m.mul(g, j);
      rows.set(r + k, j, rows.at(r + k, j) + Scalar::one(ring));
    }
    for (std::size_t k = 0; k < n; ++k) rows.set(r + k, k, rows.at(r + k, k) - twist[g]);
    r += n;
    // right: coefficient of ev_k in w * ev_g is sum over j with j*g = k
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = m.mul(j, g);
      rows.set(r + k, j, rows.at(r + k, j) + Scalar::one(ring));
    }
    for (std::size_t k = 0; k < n; ++k) rows.set(r + k, k, rows.at(r + k, k) - twist[g]);
    r += n;
  }
  return rows;
}

inline std::size_t left_invariant_dim(const FiniteMonoid& m, const BaseRing& ring,
                                      const std::vector<Scalar>& twist) {
  std::size_t n = m.order();
  ExactMatrix rows(n * n, n, ring);
  std::size_t r = 0;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = m.mul(g, j);
      rows.set(r + k, j, rows.at(r + k, j) + Scalar::one(ring));
    }
    for (std::size_t k = 0; k < n; ++k) rows.set(r + k, k, rows.at(r + k, k) - twist[g]);
    r += n;
  }
  return kernel(rows).dim();
}

inline IntegralReport solve_integral(const FiniteMonoid& m, const BaseRing& ring,
                                     const std::vector<Scalar>& twist,
                                     const std::vector<Scalar>& normalization,
                                     const std::string& what) {
  std::size_t n = m.order();
  ExactMatrix sys = invariance_rows(m, ring, twist);
  ExactMatrix norm(1, n, ring);
  for (std::size_t j = 0; j < n; ++j) norm.set(0, j, normalization[j]);
  sys = sys.vstack(norm);
  ExactMatrix b(sys.rows(), 1, ring);
  b.set(sys.rows() - 1, 0, Scalar::one(ring));

  IntegralReport rep;
  rep.left_space_dim = left_invariant_dim(m, ring, twist);
  SolveReport sol = solve_linear(sys, b);
  if (!sol.feasible) {
    rep.exists = false;
    rep.obstruction = sol.obstruction;
    rep.notes = what + " does not exist over " + ring.name() + ": " + sol.certificate;
    return rep;
  }
  // The paper proves uniqueness whenever the system is feasible; a nontrivial
  // solution set signals a bug in the solver or the system assembly.
  if (sol.kernel->dim() != 0)
    throw theorem_violation(what + ": bilateral system feasible but not unique (kernel dim " +
                            std::to_string(sol.kernel->dim()) + ")");
  rep.exists = true;
  rep.integral = DualElement::from_column(m, *sol.particular);
  rep.notes = what + " exists and is unique";
  return rep;
}

}  // namespace detail

/// The invariant integral w_G: the unique w in A* with ev_g * w = w and
/// w * ev_g = w for all g and Theta(w) = w(1) = 1, when it exists.  The
/// monoid is invariant exact over k iff it exists.  For groups the result is
/// additionally checked to be fixed by the star involution.
IntegralReport invariant_integral(FiniteMonoid&&, const BaseRing&) = delete;
inline IntegralReport invariant_integral(const FiniteMonoid& m, const BaseRing& ring) {
  std::size_t n = m.order();
  std::vector<Scalar> ones(n, Scalar::one(ring));
  IntegralReport rep = detail::solve_integral(m, ring, ones, ones, "invariant integral");
  if (rep.exists) {
    const DualElement& w = *rep.integral;
    if (!is_left_invariant(w) || !is_right_invariant(w) || !augmentation_theta(w).is_one())
      throw theorem_violation("invariant integral: solution fails re-verification");
    if (m.is_group() && star_involution(w) != w)
      throw theorem_violation("invariant integral: *(w) != w on a group");
  }
  return rep;
}

/// The chi-semi-invariant integral w_chi: ev_g * w = chi(g) w, w * ev_g =
/// chi(g) w, and w(chi) = 1.  Unique when it exists.
IntegralReport semi_invariant_integral(FiniteMonoid&&, const Character&) = delete;
inline IntegralReport semi_invariant_integral(const FiniteMonoid& m, const Character& chi) {
  const BaseRing& ring = chi.ring();
  if (chi.size() != m.order()) throw dimension_error("semi_invariant_integral: character size");
  IntegralReport rep =
      detail::solve_integral(m, ring, chi.values(), chi.values(), "semi-invariant integral");
  if (rep.exists) {
    const DualElement& w = *rep.integral;
    if (!is_left_semi_invariant(w, chi) || !is_right_semi_invariant(w, chi) ||
        !pair(w, FunctionElement::from_character(m, chi)).is_one())
      throw theorem_violation("semi-invariant integral: solution fails re-verification");
  }
  return rep;
}

/// One-sided integrals (left or right invariance only, normalized by Theta).
/// Used by tests to exercise the composition w_l * w_r from the existence
/// proof; the bilateral solver above is the primary route.
std::optional<DualElement> one_sided_integral(FiniteMonoid&&, const BaseRing&, Side) = delete;
inline std::optional<DualElement> one_sided_integral(const FiniteMonoid& m, const BaseRing& ring,
                                                     Side side) {
  std::size_t n = m.order();
  ExactMatrix rows(n * n + 1, n, ring);
  std::size_t r = 0;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = side == Side::left ? m.mul(g, j) : m.mul(j, g);
      rows.set(r + k, j, rows.at(r + k, j) + Scalar::one(ring));
    }
    for (std::size_t k = 0; k < n; ++k) rows.set(r + k, k, rows.at(r + k, k) - Scalar::one(ring));
    r += n;
  }
  for (std::size_t j = 0; j < n; ++j) rows.set(n * n, j, Scalar::one(ring));
  ExactMatrix b(n * n + 1, 1, ring);
  b.set(n * n, 0, Scalar::one(ring));
  SolveReport sol = solve_linear(rows, b);
  if (!sol.feasible) return std::nullopt;
  return DualElement::from_column(m, *sol.particular);
}

struct DecompositionReport {
  DualElement idempotent;                          // w_G
  std::vector<DualElement> complement_ideal_basis; // basis of (1 - w_G) * A*
  bool theta_is_first_projection = false;
};

/// Verifies the decomposition A* = k x B* induced by w_G: idempotence,
/// centrality, w_G * A* = k w_G, complement ideal of dimension n-1 on which
/// Theta vanishes.  Any failure contradicts the decomposition theorem and is
/// reported as an internal error.
inline DecompositionReport decompose_dual_algebra(const FiniteMonoid& m, const DualElement& w_g) {
  const BaseRing& ring = w_g.ring();
  std::size_t n = m.order();
  if (convolve(w_g, w_g) != w_g) throw theorem_violation("decompose: w_G is not idempotent");
  for (std::size_t g = 0; g < n; ++g) {
    DualElement ev = DualElement::evaluation(m, ring, g);
    if (convolve(ev, w_g) != convolve(w_g, ev))
      throw theorem_violation("decompose: w_G is not central at g=" + std::to_string(g));
  }

  // columns (1 - w_G) * ev_g span the complement ideal
  ExactMatrix cols(n, n, ring);
  for (std::size_t g = 0; g < n; ++g) {
    DualElement ev = DualElement::evaluation(m, ring, g);
    DualElement c = ev - convolve(w_g, ev);
    for (std::size_t i = 0; i < n; ++i) cols.set(i, g, c.coeff(i));
  }
  Subspace ideal = image(cols);
  if (ideal.dim() != n - 1)
    throw theorem_violation("decompose: complement ideal has dimension " +
                            std::to_string(ideal.dim()) + ", expected " + std::to_string(n - 1));
  std::vector<DualElement> basis;
  for (std::size_t j = 0; j < ideal.dim(); ++j) {
    DualElement b = DualElement::from_column(m, ideal.basis().column(j));
    if (!augmentation_theta(b).is_zero())
      throw theorem_violation("decompose: Theta does not vanish on the complement ideal");
    basis.push_back(std::move(b));
  }

  // w_G * A* = k * w_G
  ExactMatrix wcols(n, n, ring);
  for (std::size_t g = 0; g < n; ++g) {
    DualElement c = convolve(w_g, DualElement::evaluation(m, ring, g));
    for (std::size_t i = 0; i < n; ++i) wcols.set(i, g, c.coeff(i));
  }
  Subspace wline = image(wcols);
  Subspace span_w(n, w_g.as_column());
  if (!wline.equals(span_w)) throw theorem_violation("decompose: w_G * A* != k * w_G");

  return DecompositionReport{w_g, std::move(basis), true};
}

struct ExactnessDecision {
  bool invariant_exact = false;
  std::optional<DualElement> witness;  // w_G when invariant exact
  std::string certificate;             // infeasibility note otherwise
};

/// Decision procedure for invariant exactness: G is invariant exact over k
/// iff the invariant integral exists.
inline ExactnessDecision is_invariant_exact(const FiniteMonoid& m, const BaseRing& ring) {
  IntegralReport rep = invariant_integral(m, ring);
  ExactnessDecision d;
  d.invariant_exact = rep.exists;
  d.witness = rep.integral;
  d.certificate = rep.notes;
  return d;
}

}  // namespace reynolds
