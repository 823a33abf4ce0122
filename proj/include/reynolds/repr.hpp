#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/bialgebra.hpp"
#include "reynolds/integrals.hpp"
#include "reynolds/linalg.hpp"
#include "reynolds/rng.hpp"

namespace reynolds {

/// A finite-dimensional representation: a monoid homomorphism rho from G into
/// m x m matrices.  rho(e) = I and rho(gh) = rho(g) rho(h) are checked
/// exhaustively at construction.  Also the comodule over A with matrix
/// coefficients a_ij(g) = rho(g)[i][j].
class Representation {
 public:
  static Representation validate(FiniteMonoid&&, std::vector<ExactMatrix>) = delete;
  static Representation validate(const FiniteMonoid& m, std::vector<ExactMatrix> matrices) {
    std::size_t n = m.order();
    if (matrices.size() != n) throw validation_error("representation: need one matrix per element");
    std::size_t dim = matrices[0].rows();
    const BaseRing& k = matrices[0].ring();
    for (const auto& mat : matrices) {
      if (mat.rows() != dim || mat.cols() != dim)
        throw validation_error("representation: matrices must be square of equal size");
      require_same_ring(k, mat.ring(), "representation");
    }
    if (matrices[m.identity()] != ExactMatrix::identity(dim, k))
      throw validation_error("representation: rho(e) != identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (matrices[m.mul(i, j)] != matrices[i] * matrices[j])
          throw validation_error("representation: rho(g_i g_j) != rho(g_i) rho(g_j) at (i,j)=(" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    Representation r;
    r.monoid_ = &m;
    r.dim_ = dim;
    r.matrices_ = std::move(matrices);
    return r;
  }

  const FiniteMonoid& monoid() const { return *monoid_; }
  std::size_t dim() const { return dim_; }
  const BaseRing& ring() const { return matrices_[0].ring(); }
  const ExactMatrix& matrix(std::size_t g) const { return matrices_[g]; }
  const std::vector<ExactMatrix>& matrices() const { return matrices_; }

  /// Matrix coefficient a_ij in A: g -> rho(g)[i][j].
  FunctionElement matrix_coefficient(std::size_t i, std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(monoid_->order());
    for (std::size_t g = 0; g < monoid_->order(); ++g) v.push_back(matrices_[g].at(i, j));
    return FunctionElement(*monoid_, std::move(v));
  }

  bool operator==(const Representation& o) const {
    return dim_ == o.dim_ && matrices_ == o.matrices_;
  }
  bool operator!=(const Representation& o) const { return !(*this == o); }

 private:
  Representation() = default;
  const FiniteMonoid* monoid_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<ExactMatrix> matrices_;
};

inline Representation trivial_representation(const FiniteMonoid& m, const BaseRing& k,
                                             std::size_t dim = 1) {
  return Representation::validate(
      m, std::vector<ExactMatrix>(m.order(), ExactMatrix::identity(dim, k)));
}

/// One-dimensional representation attached to a multiplicative character.
inline Representation character_representation(const FiniteMonoid& m, const Character& chi) {
  std::vector<ExactMatrix> mats;
  mats.reserve(m.order());
  for (std::size_t g = 0; g < m.order(); ++g) {
    ExactMatrix x(1, 1, chi.ring());
    x.set(0, 0, chi.value(g));
    mats.push_back(std::move(x));
  }
  return Representation::validate(m, std::move(mats));
}

/// Left regular representation on the delta basis: g . e_h = e_{g h}.
inline Representation regular_representation(const FiniteMonoid& m, const BaseRing& k) {
  std::size_t n = m.order();
  std::vector<ExactMatrix> mats(n, ExactMatrix(n, n, k));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) mats[g].set(m.mul(g, h), h, Scalar::one(k));
  return Representation::validate(m, std::move(mats));
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  std::size_t d = a.dim() + b.dim();
  std::vector<ExactMatrix> mats;
  mats.reserve(a.monoid().order());
  for (std::size_t g = 0; g < a.monoid().order(); ++g) {
    ExactMatrix mk(d, d, a.ring());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) mk.set(i, j, a.matrix(g).at(i, j));
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) mk.set(a.dim() + i, a.dim() + j, b.matrix(g).at(i, j));
    mats.push_back(std::move(mk));
  }
  return Representation::validate(a.monoid(), std::move(mats));
}

/// Change of basis: rho'(g) = S rho(g) S^-1.
inline Representation conjugate(const Representation& v, const ExactMatrix& s,
                                const ExactMatrix& s_inv) {
  std::vector<ExactMatrix> mats;
  mats.reserve(v.monoid().order());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) mats.push_back(s * v.matrix(g) * s_inv);
  return Representation::validate(v.monoid(), std::move(mats));
}

/// A random product of elementary shears: unimodular over Z, invertible over
/// every ring.  Returns (S, S^-1).
inline std::pair<ExactMatrix, ExactMatrix> random_basis_change(std::size_t dim,
                                                               const BaseRing& ring, Rng& rng) {
  ExactMatrix s = ExactMatrix::identity(dim, ring);
  ExactMatrix s_inv = s;
  for (std::size_t step = 0; step < 2 * dim; ++step) {
    std::size_t i = rng.index(dim), j = rng.index(dim);
    if (i == j) continue;
    Scalar c = Scalar::from_int(ring, rng.range(-2, 2));
    ExactMatrix e = ExactMatrix::identity(dim, ring);
    e.set(i, j, c);
    ExactMatrix e_inv = ExactMatrix::identity(dim, ring);
    e_inv.set(i, j, -c);
    s = e * s;
    s_inv = s_inv * e_inv;
  }
  return {std::move(s), std::move(s_inv)};
}

/// The A*-module structure extending the G-action: w = sum c_i ev_{g_i} acts
/// as sum c_i rho(g_i).  An algebra map for convolution.
inline ExactMatrix action_matrix(const DualElement& w, const Representation& v) {
  if (w.monoid().order() != v.monoid().order() || !(w.monoid() == v.monoid()))
    throw validation_error("action_matrix: monoid mismatch");
  require_same_ring(w.ring(), v.ring(), "action_matrix");
  ExactMatrix out(v.dim(), v.dim(), v.ring());
  for (std::size_t g = 0; g < w.size(); ++g) {
    if (w.coeff(g).is_zero()) continue;
    out = out + v.matrix(g).scaled(w.coeff(g));
  }
  return out;
}

/// Extend rho to the A*-action, then restrict back along g -> ev_g.  The
/// equivalence of categories makes this the identity on our objects.
inline Representation module_roundtrip(const Representation& v) {
  std::vector<ExactMatrix> mats;
  mats.reserve(v.monoid().order());
  for (std::size_t g = 0; g < v.monoid().order(); ++g)
    mats.push_back(action_matrix(DualElement::evaluation(v.monoid(), v.ring(), g), v));
  return Representation::validate(v.monoid(), std::move(mats));
}

/// M^G = {v : rho(g) v = v for all g}, by a stacked linear solve.
inline Subspace fixed_space(const Representation& v) {
  std::size_t n = v.monoid().order(), d = v.dim();
  ExactMatrix stacked(n * d, d, v.ring());
  ExactMatrix eye = ExactMatrix::identity(d, v.ring());
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix diff = v.matrix(g) - eye;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.set(g * d + i, j, diff.at(i, j));
  }
  return kernel(stacked);
}

/// M^chi = {v : rho(g) v = chi(g) v for all g}, solved directly.
inline Subspace semi_invariant_space_direct(const Representation& v, const Character& chi) {
  std::size_t n = v.monoid().order(), d = v.dim();
  ExactMatrix stacked(n * d, d, v.ring());
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix diff = v.matrix(g) - ExactMatrix::identity(d, v.ring()).scaled(chi.value(g));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.set(g * d + i, j, diff.at(i, j));
  }
  return kernel(stacked);
}

inline void require_invariant_integral(const DualElement& w_g, const char* where) {
  if (!is_left_invariant(w_g) || !is_right_invariant(w_g) || !augmentation_theta(w_g).is_one())
    throw validation_error(std::string(where) + ": w_G is not a bilateral invariant integral");
}

/// The Reynolds operator of V: P = action of w_G, the projector onto M^G.
inline ExactMatrix reynolds_projector(const Representation& v, const DualElement& w_g) {
  require_invariant_integral(w_g, "reynolds_projector");
  ExactMatrix p = action_matrix(w_g, v);
  if (p * p != p) throw theorem_violation("reynolds_projector: P^2 != P");
  return p;
}

/// M = w_G M (+) (1 - w_G) M: the invariants and the unique G-stable
/// complement, as (image of P, kernel of P).
inline std::pair<Subspace, Subspace> split_invariants(const Representation& v,
                                                      const DualElement& w_g) {
  ExactMatrix p = reynolds_projector(v, w_g);
  return {image(p), kernel(p)};
}

inline void require_semi_invariant_integral(const DualElement& w_chi, const Character& chi,
                                            const char* where) {
  if (!is_left_semi_invariant(w_chi, chi) || !is_right_semi_invariant(w_chi, chi) ||
      !pair(w_chi, FunctionElement::from_character(w_chi.monoid(), chi)).is_one())
    throw validation_error(std::string(where) + ": w_chi is not a chi-semi-invariant integral");
}

/// M^chi = w_chi M, as the image of the chi-Reynolds projector; verified
/// against the directly solved eigencondition.
inline Subspace semi_invariant_space(const Representation& v, const Character& chi,
                                     const DualElement& w_chi) {
  require_semi_invariant_integral(w_chi, chi, "semi_invariant_space");
  ExactMatrix q = action_matrix(w_chi, v);
  if (q * q != q) throw theorem_violation("semi_invariant_space: Q^2 != Q");
  Subspace im = image(q);
  if (!im.equals(semi_invariant_space_direct(v, chi)))
    throw theorem_violation("semi_invariant_space: w_chi M != directly solved M^chi");
  return im;
}

/// Hom_G(V, W) inside the flattened m_W x m_V matrix space (row-major vec),
/// solved as the kernel of f rho_V(g) - rho_W(g) f = 0 over all g.  Works for
/// monoids; no inverses required.
inline Subspace intertwiner_space(const Representation& v, const Representation& w) {
  if (!(v.monoid() == w.monoid())) throw validation_error("intertwiner_space: monoid mismatch");
  require_same_ring(v.ring(), w.ring(), "intertwiner_space");
  std::size_t n = v.monoid().order();
  std::size_t mv = v.dim(), mw = w.dim(), dim = mw * mv;
  ExactMatrix eye_w = ExactMatrix::identity(mw, v.ring());
  ExactMatrix eye_v = ExactMatrix::identity(mv, v.ring());
  ExactMatrix stacked(n * dim, dim, v.ring());
  for (std::size_t g = 0; g < n; ++g) {
    // vec(f rho_V(g)) = (I (x) rho_V(g)^T) vec f;  vec(rho_W(g) f) = (rho_W(g) (x) I) vec f
    ExactMatrix c = eye_w.kron(v.matrix(g).transpose()) - w.matrix(g).kron(eye_v);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked.set(g * dim + i, j, c.at(i, j));
  }
  return kernel(stacked);
}

/// The Reynolds projector on Hom(V, W) for a group: f -> sum_g c_g rho_W(g) f
/// rho_V(g^-1), as a matrix on the flattened space.  Its image is verified to
/// equal the independently solved intertwiner space.
struct HomProjector {
  ExactMatrix matrix;   // (m_W m_V) x (m_W m_V), idempotent
  Subspace hom_g;       // image = Hom_G(V, W) in flattened coordinates
  std::size_t rows, cols;  // shape of the Hom elements (m_W x m_V)

  ExactMatrix apply(const ExactMatrix& f) const {
    return ExactMatrix::unvec(matrix * f.vec(), rows, cols);
  }
};

inline HomProjector hom_reynolds(const Representation& v, const Representation& w,
                                 const DualElement& w_g) {
  if (!v.monoid().is_group())
    throw validation_error("hom_reynolds: the Hom action needs inverses (monoid is not a group)");
  require_invariant_integral(w_g, "hom_reynolds");
  std::size_t mv = v.dim(), mw = w.dim(), dim = mw * mv;
  ExactMatrix p(dim, dim, v.ring());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) {
    if (w_g.coeff(g).is_zero()) continue;
    std::size_t gi = v.monoid().inverse(g);
    p = p + w.matrix(g).kron(v.matrix(gi).transpose()).scaled(w_g.coeff(g));
  }
  if (p * p != p) throw theorem_violation("hom_reynolds: projector is not idempotent");
  Subspace direct = intertwiner_space(v, w);
  Subspace im = image(p);
  if (!im.equals(direct))
    throw theorem_violation("hom_reynolds: image != directly solved intertwiner space");
  return HomProjector{std::move(p), std::move(direct), mw, mv};
}

inline bool is_equivariant(const ExactMatrix& f, const Representation& v, const Representation& w) {
  for (std::size_t g = 0; g < v.monoid().order(); ++g)
    if (w.matrix(g) * f != f * v.matrix(g)) return false;
  return true;
}

/// Surjectivity of the map x -> A x.  Over Z this is more than full rank: all
/// invariant factors must be units.
inline bool is_surjective(const ExactMatrix& a) {
  if (a.ring().is_field()) return rank(a) == a.rows();
  SmithResult s = smith_normal_form(a);
  if (s.rank != a.rows()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!s.d.at(i, i).is_unit()) return false;
  return true;
}

/// Given an equivariant surjection pi: V -> W and any linear section s of it,
/// w_G . s is an equivariant section.
inline ExactMatrix equivariant_section(const ExactMatrix& pi, const ExactMatrix& s,
                                       const Representation& v, const Representation& w,
                                       const DualElement& w_g) {
  if (pi.rows() != w.dim() || pi.cols() != v.dim())
    throw dimension_error("equivariant_section: pi must be m_W x m_V");
  if (s.rows() != v.dim() || s.cols() != w.dim())
    throw dimension_error("equivariant_section: s must be m_V x m_W");
  if (!is_equivariant(pi, v, w)) throw validation_error("equivariant_section: pi is not equivariant");
  if (!is_surjective(pi)) throw validation_error("equivariant_section: pi is not surjective");
  if (pi * s != ExactMatrix::identity(w.dim(), w.ring()))
    throw validation_error("equivariant_section: s is not a section of pi");
  HomProjector hp = hom_reynolds(w, v, w_g);  // Hom(W, V)
  ExactMatrix s2 = hp.apply(s);
  if (pi * s2 != ExactMatrix::identity(w.dim(), w.ring()))
    throw theorem_violation("equivariant_section: averaged map is not a section");
  if (!is_equivariant(s2, w, v))
    throw theorem_violation("equivariant_section: averaged section is not equivariant");
  return s2;
}

inline bool is_stable_subspace(const Subspace& s, const Representation& v) {
  for (std::size_t g = 0; g < v.monoid().order(); ++g)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(v.matrix(g) * s.basis().column(j))) return false;
  return true;
}

/// Inverse over a field or over Z (where it requires unimodularity).
inline ExactMatrix matrix_inverse(const ExactMatrix& a) {
  if (a.ring().is_field()) return field_inverse(a);
  ExactMatrix inv(a.rows(), a.cols(), a.ring());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ExactMatrix e(a.rows(), 1, a.ring());
    e.set(j, 0, Scalar::one(a.ring()));
    SolveReport r = solve_linear(a, e);
    if (!r.feasible) throw validation_error("matrix_inverse: not invertible over Z");
    for (std::size_t i = 0; i < a.rows(); ++i) inv.set(i, j, r.particular->at(i, 0));
  }
  return inv;
}

/// A G-stable complement of a G-stable subspace W: the kernel of the
/// Reynolds-averaged projection onto W (complete reducibility step).
inline Subspace stable_complement(const Representation& v, const Subspace& w_sub,
                                  const DualElement& w_g) {
  if (!v.monoid().is_group()) throw validation_error("stable_complement: requires a group");
  require_invariant_integral(w_g, "stable_complement");
  if (w_sub.ambient_dim() != v.dim()) throw dimension_error("stable_complement: ambient mismatch");
  if (!is_stable_subspace(w_sub, v)) throw validation_error("stable_complement: W is not G-stable");

  std::size_t d = v.dim(), r = w_sub.dim();
  ExactMatrix t = w_sub.basis().hstack(complete_basis(w_sub));
  ExactMatrix t_inv = matrix_inverse(t);
  ExactMatrix diag(d, d, v.ring());
  for (std::size_t i = 0; i < r; ++i) diag.set(i, i, Scalar::one(v.ring()));
  ExactMatrix q = t * diag * t_inv;  // projection onto W along the completed coordinates

  ExactMatrix avg(d, d, v.ring());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) {
    if (w_g.coeff(g).is_zero()) continue;
    avg = avg + (v.matrix(g) * q * v.matrix(v.monoid().inverse(g))).scaled(w_g.coeff(g));
  }
  if (avg * avg != avg) throw theorem_violation("stable_complement: averaged projection not idempotent");
  Subspace u = kernel(avg);
  if (u.dim() + r != d || rank(w_sub.basis().hstack(u.basis())) != d)
    throw theorem_violation("stable_complement: W (+) U is not the whole space");
  if (!is_stable_subspace(u, v)) throw theorem_violation("stable_complement: U is not G-stable");
  return u;
}

struct SeparatedQuotientReport {
  Subspace n1;                 // {n : w_G . n = 0} = kernel of the Reynolds projector
  ExactMatrix quotient_basis;  // ambient x r, coordinates for N/N_1
  ExactMatrix iso;             // ambient x r: column i = P . quotient_basis_i, a basis of M^G
};

/// The maximal separated G-invariant quotient N/N_1 at finite dimension:
/// N_1 = ker P, and m -> P m induces an isomorphism N/N_1 -> M^G.  Verifies
/// that G acts trivially on the quotient and the dual-dimension bookkeeping
/// dim(N_1 annihilator) = dim of transpose-action invariants.
inline SeparatedQuotientReport separated_quotient(const Representation& v, const DualElement& w_g) {
  ExactMatrix p = reynolds_projector(v, w_g);
  Subspace n1 = kernel(p);
  ExactMatrix comp = complete_basis(n1);
  ExactMatrix iso = p * comp;
  std::size_t d = v.dim();

  if (n1.dim() + comp.cols() != d)
    throw theorem_violation("separated_quotient: completion has wrong dimension");
  Subspace fixed = fixed_space(v);
  Subspace iso_im = comp.cols() == 0 ? Subspace::zero(d, v.ring()) : image(iso);
  if (iso_im.dim() != comp.cols() || !iso_im.equals(fixed))
    throw theorem_violation("separated_quotient: induced map is not an isomorphism onto M^G");
  // trivial G-action on the quotient: rho(g) c - c lands in N_1, i.e. P rho(g) c = P c
  for (std::size_t g = 0; g < v.monoid().order(); ++g)
    if (p * v.matrix(g) * comp != iso)
      throw theorem_violation("separated_quotient: quotient action is not trivial");
  // (N/N_1)* = N*^G: annihilator dimension vs invariants of the transpose action
  ExactMatrix stacked(v.monoid().order() * d, d, v.ring());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) {
    ExactMatrix diff = v.matrix(g).transpose() - ExactMatrix::identity(d, v.ring());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.set(g * d + i, j, diff.at(i, j));
  }
  if (kernel(stacked).dim() != d - n1.dim())
    throw theorem_violation("separated_quotient: dual dimension bookkeeping failed");
  return SeparatedQuotientReport{std::move(n1), std::move(comp), std::move(iso)};
}

struct ExactnessWitnessReport {
  bool integral_exists = false;
  std::size_t trials_requested = 0;
  std::size_t trials_completed = 0;
  bool all_surjective_on_invariants = true;
  std::string counterexample;
  std::vector<std::string> notes;
};

/// Samples random equivariant surjections pi: V -> W inside the solved
/// intertwiner space and checks pi(V^G) = W^G.  V is built as a conjugated
/// direct sum containing W, so surjections always exist.  When no integral
/// exists (group over a field with char | order) the canonical counterexample
/// is emitted instead: regular -> trivial by coordinate sum.
inline ExactnessWitnessReport exactness_witness(
    const FiniteMonoid& m, const BaseRing& ring, std::size_t trials, std::uint64_t seed,
    const std::function<Representation(Rng&)>& block_sampler) {
  ExactnessWitnessReport rep;
  rep.trials_requested = trials;
  IntegralReport ir = invariant_integral(m, ring);
  rep.integral_exists = ir.exists;

  if (!ir.exists) {
    if (m.is_group() && ring.is_field()) {
      Representation reg = regular_representation(m, ring);
      Representation triv = trivial_representation(m, ring);
      ExactMatrix pi(1, m.order(), ring);
      for (std::size_t j = 0; j < m.order(); ++j) pi.set(0, j, Scalar::one(ring));
      Subspace fx = fixed_space(reg);
      ExactMatrix restricted = pi * fx.basis();
      bool zero_map = restricted.is_zero();
      bool target_one_dim = fixed_space(triv).dim() == 1;
      if (!zero_map || !target_one_dim)
        throw theorem_violation("exactness_witness: counterexample construction failed");
      rep.counterexample =
          "coordinate sum: regular representation -> trivial representation restricts to the "
          "zero map on invariants (target is 1-dimensional)";
      rep.notes.push_back("invariants of the regular representation have dimension " +
                          std::to_string(fx.dim()));
    } else {
      rep.counterexample = "no invariant integral over " + ring.name() +
                           "; no canonical counterexample for non-group monoids";
    }
    return rep;
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, t);
    Representation w = block_sampler(rng);
    Representation z = block_sampler(rng);
    Representation v0 = direct_sum(w, z);
    auto [s, s_inv] = random_basis_change(v0.dim(), ring, rng);
    Representation v = conjugate(v0, s, s_inv);

    Subspace homs = intertwiner_space(v, w);
    bool found = false;
    for (std::size_t attempt = 0; attempt < 100 && !found; ++attempt) {
      ExactMatrix coeffs(homs.dim(), 1, ring);
      for (std::size_t i = 0; i < homs.dim(); ++i) coeffs.set(i, 0, rng.scalar(ring, 3));
      ExactMatrix pi = ExactMatrix::unvec(homs.basis() * coeffs, w.dim(), v.dim());
      if (!is_surjective(pi)) continue;
      found = true;
      Subspace fx_v = fixed_space(v);
      Subspace fx_w = fixed_space(w);
      Subspace mapped = fx_v.dim() == 0 ? Subspace::zero(w.dim(), ring) : image(pi * fx_v.basis());
      if (!mapped.equals(fx_w)) {
        rep.all_surjective_on_invariants = false;
        rep.notes.push_back("trial " + std::to_string(t) + ": pi(V^G) != W^G");
      }
    }
    if (!found) {
      rep.all_surjective_on_invariants = false;
      rep.notes.push_back("trial " + std::to_string(t) +
                          ": no surjective intertwiner found in 100 attempts");
      continue;
    }
    ++rep.trials_completed;
  }
  return rep;
}

}  // namespace reynolds
