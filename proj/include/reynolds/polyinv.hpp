#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reynolds/polynomial.hpp"
#include "reynolds/repr.hpp"

namespace reynolds {

/// Linear action of a group element on polynomials: (g.f)(x) = f(rho(g^-1) x),
/// substituting variable x_j by the j-th coordinate of rho(g^-1) x.  A left
/// action; degree-preserving and multiplicative.
inline Polynomial poly_action(std::size_t g, const Polynomial& f, const Representation& v) {
  if (!v.monoid().is_group()) throw validation_error("poly_action: requires a group");
  if (v.dim() != f.nvars()) throw dimension_error("poly_action: nvars != representation dimension");
  const ExactMatrix& m = v.matrix(v.monoid().inverse(g));
  std::vector<Polynomial> forms;
  forms.reserve(f.nvars());
  for (std::size_t j = 0; j < f.nvars(); ++j) {
    Polynomial form(f.nvars(), f.ring());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      Exponents e(f.nvars(), 0);
      e[i] = 1;
      form.add_term(e, m.at(j, i));
    }
    forms.push_back(std::move(form));
  }
  return f.substitute(forms);
}

/// Matrix of the g-action on the degree-d monomial basis.
inline ExactMatrix degree_action_matrix(std::size_t g, const Representation& v,
                                        const std::vector<Exponents>& basis) {
  ExactMatrix out(basis.size(), basis.size(), v.ring());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Polynomial mono = Polynomial::monomial(v.dim(), basis[c], Scalar::one(v.ring()));
    ExactMatrix col = poly_coordinates(poly_action(g, mono, v), basis);
    for (std::size_t r = 0; r < basis.size(); ++r) out.set(r, c, col.at(r, 0));
  }
  return out;
}

struct GradedReynolds {
  unsigned degree;
  std::vector<Exponents> monomial_basis;
  ExactMatrix projector;
};

/// The Reynolds operator on the degree-d homogeneous component:
/// sum_g c_g (action of g on degree-d monomials).  Idempotent; its image is
/// the space of degree-d invariants.
inline GradedReynolds graded_reynolds(const Representation& v, const DualElement& w_g, unsigned d) {
  require_invariant_integral(w_g, "graded_reynolds");
  std::vector<Exponents> basis = monomials_of_degree(v.dim(), d);
  ExactMatrix p(basis.size(), basis.size(), v.ring());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) {
    if (w_g.coeff(g).is_zero()) continue;
    p = p + degree_action_matrix(g, v, basis).scaled(w_g.coeff(g));
  }
  if (p * p != p) throw theorem_violation("graded_reynolds: projector is not idempotent");
  return GradedReynolds{d, std::move(basis), std::move(p)};
}

/// Dimension of the degree-d invariants: the rank of the graded Reynolds
/// projector.  Cross-checked against the trace (equal to the rank as a ring
/// element, i.e. mod char in positive characteristic) and against the
/// directly solved fixed space of the degree-d action.
inline std::size_t invariant_dimension(const Representation& v, const DualElement& w_g, unsigned d) {
  GradedReynolds gr = graded_reynolds(v, w_g, d);
  std::size_t r = rank(gr.projector);
  Scalar tr = gr.projector.trace();
  if (tr != Scalar::from_int(v.ring(), static_cast<long long>(r)))
    throw theorem_violation("invariant_dimension: trace != rank of the Reynolds projector");
  // independent oracle: fixed space of the degree-d action
  std::size_t nb = gr.monomial_basis.size();
  ExactMatrix stacked(v.monoid().order() * nb, nb, v.ring());
  for (std::size_t g = 0; g < v.monoid().order(); ++g) {
    ExactMatrix diff =
        degree_action_matrix(g, v, gr.monomial_basis) - ExactMatrix::identity(nb, v.ring());
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) stacked.set(g * nb + i, j, diff.at(i, j));
  }
  if (kernel(stacked).dim() != r)
    throw theorem_violation("invariant_dimension: projector rank != solved fixed-space dimension");
  return r;
}

struct InvariantGenerators {
  std::vector<Polynomial> generators;      // discovery order
  std::vector<unsigned> degrees;           // degree of each generator
  std::vector<std::size_t> dims_by_degree; // invariant dimension at d = 0..D
};

/// Degree-by-degree generators of the invariant ring: at each degree d <= D,
/// complete the span of products of known generators inside the degree-d
/// invariants, appending new generators from the reduced-echelon basis.
/// Every invariant of degree <= D lies in the algebra generated by the
/// result; over Q with D = |G| (Noether bound) the set generates the whole
/// invariant ring.
inline InvariantGenerators invariant_ring_generators(const Representation& v,
                                                     const DualElement& w_g, unsigned max_degree) {
  if (!v.monoid().is_group()) throw validation_error("invariant_ring_generators: requires a group");
  if (!v.ring().is_field())
    throw validation_error("invariant_ring_generators: requires a field");
  if (max_degree < 1) throw validation_error("invariant_ring_generators: max degree must be >= 1");
  require_invariant_integral(w_g, "invariant_ring_generators");

  InvariantGenerators out;
  out.dims_by_degree.push_back(1);  // constants
  // products_by_degree[d]: all products of generators of total degree d,
  // as (polynomial, index of the largest generator used)
  std::map<unsigned, std::vector<std::pair<Polynomial, std::size_t>>> products;

  for (unsigned d = 1; d <= max_degree; ++d) {
    GradedReynolds gr = graded_reynolds(v, w_g, d);
    Subspace inv_d = image(gr.projector);
    out.dims_by_degree.push_back(inv_d.dim());

    // span of degree-d products of current generators
    std::vector<std::pair<Polynomial, std::size_t>> prods;
    for (std::size_t gi = 0; gi < out.generators.size(); ++gi) {
      unsigned dg = out.degrees[gi];
      if (dg > d) continue;
      if (dg == d) {
        prods.emplace_back(out.generators[gi], gi);
        continue;
      }
      auto it = products.find(d - dg);
      if (it == products.end()) continue;
      for (const auto& [p, last] : it->second)
        if (last <= gi) prods.emplace_back(p * out.generators[gi], gi);
    }

    std::size_t nb = gr.monomial_basis.size();
    ExactMatrix prod_cols(nb, prods.size(), v.ring());
    for (std::size_t c = 0; c < prods.size(); ++c) {
      ExactMatrix col = poly_coordinates(prods[c].first, gr.monomial_basis);
      for (std::size_t r = 0; r < nb; ++r) prod_cols.set(r, c, col.at(r, 0));
    }
    Subspace w_d = prods.empty() ? Subspace::zero(nb, v.ring()) : image(prod_cols);

    // extend a basis of W_d to the invariants V_d; new generators come from
    // the canonical (reduced-echelon) basis of V_d
    std::vector<std::size_t> new_idx;
    ExactMatrix current = w_d.basis();
    for (std::size_t j = 0; j < inv_d.dim(); ++j) {
      ExactMatrix cand = inv_d.basis().column(j);
      bool inside = current.cols() == 0 ? cand.is_zero()
                                        : solve_linear(current, cand).feasible;
      if (!inside) {
        current = current.hstack(cand);
        new_idx.push_back(j);
      }
    }
    for (std::size_t j : new_idx) {
      Polynomial gen = poly_from_coordinates(inv_d.basis().column(j), gr.monomial_basis, v.dim());
      out.generators.push_back(gen);
      out.degrees.push_back(d);
      prods.emplace_back(std::move(gen), out.generators.size() - 1);
    }
    if (!new_idx.empty() || !prods.empty()) products[d] = std::move(prods);

    // by construction every degree-d invariant is now a polynomial in S
    if (rank(current) != inv_d.dim())
      throw theorem_violation("invariant_ring_generators: span bookkeeping failed at degree " +
                              std::to_string(d));
  }
  return out;
}

}  // namespace reynolds
