#pragma once

#include <vector>

#include "reynolds/repr.hpp"

namespace reynolds {

/// A finite-dimensional algebra B with a G-action by algebra endomorphisms.
/// structure_constants[i][j][k] is the coefficient of b_k in b_i * b_j.
class GAlgebra {
 public:
  static GAlgebra validate(std::vector<std::vector<std::vector<Scalar>>> structure_constants,
                           std::vector<Scalar> unit, Representation action) {
    std::size_t d = structure_constants.size();
    if (d == 0) throw validation_error("GAlgebra: dimension 0");
    const BaseRing& k = unit.at(0).ring();
    for (const auto& plane : structure_constants) {
      if (plane.size() != d) throw validation_error("GAlgebra: ragged structure constants");
      for (const auto& row : plane) {
        if (row.size() != d) throw validation_error("GAlgebra: ragged structure constants");
        for (const auto& s : row) require_same_ring(k, s.ring(), "GAlgebra");
      }
    }
    if (unit.size() != d) throw validation_error("GAlgebra: unit has wrong length");
    if (action.dim() != d) throw validation_error("GAlgebra: action dimension != algebra dimension");
    require_same_ring(k, action.ring(), "GAlgebra");

    GAlgebra b;
    b.c_ = std::move(structure_constants);
    b.unit_ = std::move(unit);
    b.action_.emplace(std::move(action));

    // associativity and unit laws on basis triples
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          std::vector<Scalar> lhs = b.multiply(b.basis_product(i, j), b.basis(l));
          std::vector<Scalar> rhs = b.multiply(b.basis(i), b.basis_product(j, l));
          if (lhs != rhs)
            throw validation_error("GAlgebra: associativity fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(l) + ")");
        }
    for (std::size_t j = 0; j < d; ++j) {
      if (b.multiply(b.unit_, b.basis(j)) != b.basis(j) ||
          b.multiply(b.basis(j), b.unit_) != b.basis(j))
        throw validation_error("GAlgebra: unit law fails at basis " + std::to_string(j));
    }
    // each rho_B(g) is an algebra endomorphism fixing the unit
    const Representation& act = *b.action_;
    for (std::size_t g = 0; g < act.monoid().order(); ++g) {
      if (b.apply(act.matrix(g), b.unit_) != b.unit_)
        throw validation_error("GAlgebra: action does not fix the unit at g=" + std::to_string(g));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<Scalar> lhs = b.apply(act.matrix(g), b.basis_product(i, j));
          std::vector<Scalar> rhs =
              b.multiply(b.apply(act.matrix(g), b.basis(i)), b.apply(act.matrix(g), b.basis(j)));
          if (lhs != rhs)
            throw validation_error("GAlgebra: rho_B(g) is not an algebra map at g=" +
                                   std::to_string(g));
        }
    }
    return b;
  }

  std::size_t dim() const { return c_.size(); }
  const BaseRing& ring() const { return unit_[0].ring(); }
  const Representation& action() const { return *action_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[i][j][k];
  }

  std::vector<Scalar> basis(std::size_t i) const {
    std::vector<Scalar> v(dim(), Scalar::zero(ring()));
    v[i] = Scalar::one(ring());
    return v;
  }
  std::vector<Scalar> basis_product(std::size_t i, std::size_t j) const { return c_[i][j]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::size_t d = dim();
    std::vector<Scalar> out(d, Scalar::zero(ring()));
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) out[k] = out[k] + x[i] * y[j] * c_[i][j][k];
      }
    }
    return out;
  }

  std::vector<Scalar> apply(const ExactMatrix& m, const std::vector<Scalar>& x) const {
    std::size_t d = dim();
    std::vector<Scalar> out(d, Scalar::zero(ring()));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i] = out[i] + m.at(i, j) * x[j];
    return out;
  }

 private:
  GAlgebra() = default;
  std::vector<std::vector<std::vector<Scalar>>> c_;
  std::vector<Scalar> unit_;
  std::optional<Representation> action_;
};

/// The one-dimensional algebra k with trivial G-action.
inline GAlgebra trivial_g_algebra(const FiniteMonoid& m, const BaseRing& k) {
  std::vector<std::vector<std::vector<Scalar>>> c(
      1, std::vector<std::vector<Scalar>>(1, std::vector<Scalar>(1, Scalar::one(k))));
  return GAlgebra::validate(std::move(c), {Scalar::one(k)}, trivial_representation(m, k, 1));
}

/// The function algebra A = Maps(G, k) with pointwise product and the
/// translation action g.b = rho_g(b), b(x) -> b(x g); a G-algebra.  (Right
/// translation is the monoid homomorphism of the two translation actions.)
inline GAlgebra function_g_algebra(const FiniteMonoid& m, const BaseRing& k) {
  std::size_t n = m.order();
  std::vector<std::vector<std::vector<Scalar>>> c(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(k))));
  for (std::size_t i = 0; i < n; ++i) c[i][i][i] = Scalar::one(k);
  std::vector<Scalar> unit(n, Scalar::one(k));
  // rho_g(delta_h) = sum over x with x g = h of delta_x
  std::vector<ExactMatrix> mats(n, ExactMatrix(n, n, k));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) mats[g].set(x, m.mul(x, g), Scalar::one(k));
  return GAlgebra::validate(std::move(c), std::move(unit),
                            Representation::validate(m, std::move(mats)));
}

/// A B-module with a compatible G-action: g(b . m) = g(b) . g(m).
/// b_action[i] is the matrix of b_i acting on M.
class BGModule {
 public:
  static BGModule validate(const GAlgebra& b, Representation underlying,
                           std::vector<ExactMatrix> b_action) {
    std::size_t d = b.dim(), md = underlying.dim();
    if (b_action.size() != d) throw validation_error("BGModule: need one matrix per algebra basis");
    for (const auto& mat : b_action) {
      if (mat.rows() != md || mat.cols() != md) throw validation_error("BGModule: b_action shape");
      require_same_ring(b.ring(), mat.ring(), "BGModule");
    }
    // unit acts as identity
    ExactMatrix unit_act(md, md, b.ring());
    for (std::size_t i = 0; i < d; ++i) unit_act = unit_act + b_action[i].scaled(b.unit()[i]);
    if (unit_act != ExactMatrix::identity(md, b.ring()))
      throw validation_error("BGModule: unit does not act as identity");
    // composition matches structure constants: beta(b_i) beta(b_j) = beta(b_i b_j)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        ExactMatrix rhs(md, md, b.ring());
        for (std::size_t k = 0; k < d; ++k)
          rhs = rhs + b_action[k].scaled(b.structure_constant(i, j, k));
        if (b_action[i] * b_action[j] != rhs)
          throw validation_error("BGModule: module law fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      }
    // compatibility: rho(g) beta(b_i) = sum_j [rho_B(g)]_{ji} beta(b_j) rho(g)
    const Representation& act = b.action();
    for (std::size_t g = 0; g < act.monoid().order(); ++g)
      for (std::size_t i = 0; i < d; ++i) {
        ExactMatrix rhs(md, md, b.ring());
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& c = act.matrix(g).at(j, i);
          if (c.is_zero()) continue;
          rhs = rhs + (b_action[j] * underlying.matrix(g)).scaled(c);
        }
        if (underlying.matrix(g) * b_action[i] != rhs)
          throw validation_error("BGModule: compatibility g(b.m) = g(b).g(m) fails at g=" +
                                 std::to_string(g) + ", basis " + std::to_string(i));
      }
    BGModule mod;
    mod.algebra_ = &b;
    mod.underlying_.emplace(std::move(underlying));
    mod.b_action_ = std::move(b_action);
    return mod;
  }

  const GAlgebra& algebra() const { return *algebra_; }
  const Representation& underlying() const { return *underlying_; }
  const ExactMatrix& b_matrix(std::size_t i) const { return b_action_[i]; }
  std::size_t dim() const { return underlying_->dim(); }

 private:
  BGModule() = default;
  const GAlgebra* algebra_ = nullptr;
  std::optional<Representation> underlying_;
  std::vector<ExactMatrix> b_action_;
};

/// B as a module over itself, with the G-action of the algebra.
inline BGModule regular_bg_module(const GAlgebra& b) {
  std::size_t d = b.dim();
  std::vector<ExactMatrix> ba;
  ba.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    ExactMatrix m(d, d, b.ring());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m.set(k, j, b.structure_constant(i, j, k));
    ba.push_back(std::move(m));
  }
  return BGModule::validate(b, b.action(), std::move(ba));
}

/// Hom_B(M, N) inside the flattened matrix space: the kernel of
/// L -> L1 - L2 with L1(b (x) m) = L(b.m) and L2(b (x) m) = b.L(m).
inline Subspace hom_b_space(const BGModule& m, const BGModule& n) {
  if (&m.algebra() != &n.algebra())
    throw validation_error("hom_b_space: modules over different algebras");
  const BaseRing& k = m.algebra().ring();
  std::size_t d = m.algebra().dim(), mm = m.dim(), mn = n.dim(), dim = mn * mm;
  ExactMatrix eye_n = ExactMatrix::identity(mn, k);
  ExactMatrix eye_m = ExactMatrix::identity(mm, k);
  ExactMatrix stacked(d * dim, dim, k);
  for (std::size_t i = 0; i < d; ++i) {
    // L beta_M(b_i) = beta_N(b_i) L  <=>  (I (x) beta_M^T - beta_N (x) I) vec L = 0
    ExactMatrix c = eye_n.kron(m.b_matrix(i).transpose()) - n.b_matrix(i).kron(eye_m);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s) stacked.set(i * dim + r, s, c.at(r, s));
  }
  return kernel(stacked);
}

/// Restrict a subspace of the flattened Hom(M, N) space to the equivariant
/// maps.
inline Subspace refine_with_equivariance(const Subspace& homs, const Representation& vm,
                                         const Representation& vn) {
  const BaseRing& k = vm.ring();
  std::size_t mm = vm.dim(), mn = vn.dim(), dim = mn * mm;
  ExactMatrix eye_n = ExactMatrix::identity(mn, k);
  ExactMatrix eye_m = ExactMatrix::identity(mm, k);
  ExactMatrix stacked(vm.monoid().order() * dim, dim, k);
  for (std::size_t g = 0; g < vm.monoid().order(); ++g) {
    ExactMatrix c = eye_n.kron(vm.matrix(g).transpose()) - vn.matrix(g).kron(eye_m);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s) stacked.set(g * dim + r, s, c.at(r, s));
  }
  return refine_kernel(homs, stacked);
}

/// Hom_B(M, N)^G = w_G . Hom_B(M, N): the image of the Hom-Reynolds operator
/// restricted to Hom_B, verified against the direct intersection of
/// B-linearity and equivariance.
inline Subspace hom_b_invariants(const BGModule& m, const BGModule& n, const DualElement& w_g) {
  const Representation& vm = m.underlying();
  const Representation& vn = n.underlying();
  if (!vm.monoid().is_group()) throw validation_error("hom_b_invariants: requires a group");
  require_invariant_integral(w_g, "hom_b_invariants");

  Subspace hom_b = hom_b_space(m, n);
  HomProjector hp = hom_reynolds(vm, vn, w_g);
  Subspace averaged = hom_b.dim() == 0 ? Subspace::zero(hom_b.ambient_dim(), vm.ring())
                                       : image(hp.matrix * hom_b.basis());

  // direct route: B-linear and equivariant simultaneously
  Subspace direct = refine_with_equivariance(hom_b, vm, vn);
  if (!averaged.equals(direct))
    throw theorem_violation("hom_b_invariants: w_G Hom_B(M,N) != Hom_B(M,N)^G");
  return averaged;
}

}  // namespace reynolds
