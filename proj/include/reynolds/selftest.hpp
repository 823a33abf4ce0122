#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reynolds/bgmodule.hpp"
#include "reynolds/catalog.hpp"
#include "reynolds/integrals.hpp"
#include "reynolds/omega.hpp"
#include "reynolds/polyinv.hpp"
#include "reynolds/repr.hpp"

namespace reynolds::selftest {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;  // first failure, or empty
};

namespace detail {

struct Checker {
  bool ok = true;
  std::string first_failure;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

struct CatalogCase {
  std::string name;
  FiniteMonoid monoid;
  BaseRing ring;
};

/// Catalog of (monoid, ring) pairs on which the invariant integral exists.
inline std::vector<CatalogCase> integral_catalog() {
  std::vector<CatalogCase> cases;
  BaseRing q = BaseRing::rationals();
  for (std::size_t n = 1; n <= 6; ++n)
    cases.push_back({"c" + std::to_string(n) + "/Q", make_cyclic(n), q});
  cases.push_back({"s3/Q", make_symmetric_group(3), q});
  cases.push_back({"c3/F2", make_cyclic(3), BaseRing::prime_field(2)});
  cases.push_back({"c3/F7", make_cyclic(3), BaseRing::prime_field(7)});
  cases.push_back({"c2/F3", make_cyclic(2), BaseRing::prime_field(3)});
  cases.push_back({"m2(F2)/F2", make_full_matrix_monoid(2, 2), BaseRing::prime_field(2)});
  cases.push_back({"zero-monoid/Z", make_zero_monoid(), BaseRing::integers()});
  cases.push_back({"trivial/Z", make_cyclic(1), BaseRing::integers()});
  return cases;
}

inline std::string subspace_pair_mismatch(const Subspace& a, const Subspace& b) {
  std::ostringstream os;
  os << "dims " << a.dim() << " vs " << b.dim();
  return os.str();
}

// ---- criterion bodies ------------------------------------------------------

inline void criterion_integral_catalog(Checker& c, std::uint64_t) {
  BaseRing q = BaseRing::rationals();
  for (std::size_t n = 1; n <= 12; ++n) {
    FiniteMonoid cn = make_cyclic(n);
    IntegralReport r = invariant_integral(cn, q);
    c.require(r.exists, "C_" + std::to_string(n) + "/Q integral missing");
    if (!r.exists) continue;
    for (std::size_t g = 0; g < n; ++g)
      c.require(r.integral->coeff(g) == Scalar::rational(1, static_cast<long long>(n)),
                "C_" + std::to_string(n) + "/Q integral is not uniform");
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    FiniteMonoid cp = make_cyclic(p);
    c.require(!invariant_integral(cp, BaseRing::prime_field(p)).exists,
              "C_p over F_p should have no integral (p=" + std::to_string(p) + ")");
  }
  {
    FiniteMonoid c2 = make_cyclic(2);
    c.require(!invariant_integral(c2, BaseRing::integers()).exists, "C_2/Z should fail");
    c.require(invariant_integral(c2, q).exists, "C_2/Q should succeed");
  }
  {
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    BaseRing f2 = BaseRing::prime_field(2);
    IntegralReport r = invariant_integral(m2, f2);
    c.require(r.exists && *r.integral == DualElement::evaluation(m2, f2, *m2.zero()),
              "M_2(F_2) integral should be ev_0");
  }
  {
    FiniteMonoid t = make_cyclic(1);
    IntegralReport r = invariant_integral(t, q);
    c.require(r.exists && *r.integral == DualElement::evaluation(t, q, 0),
              "trivial monoid integral should be ev_e");
  }
}

inline void criterion_integral_laws(Checker& c, std::uint64_t) {
  for (auto& cs : integral_catalog()) {
    IntegralReport r = invariant_integral(cs.monoid, cs.ring);
    c.require(r.exists, cs.name + ": integral missing");
    if (!r.exists) continue;
    const DualElement& w = *r.integral;
    c.require(convolve(w, w) == w, cs.name + ": w_G not idempotent");
    c.require(is_left_invariant(w) && is_right_invariant(w), cs.name + ": not bilateral");
    c.require(augmentation_theta(w).is_one(), cs.name + ": Theta(w_G) != 1");
    if (cs.monoid.is_group())
      c.require(star_involution(w) == w, cs.name + ": *(w_G) != w_G");
    // uniqueness: the solution set of the bilateral normalized system is one
    // point (the solver throws otherwise); re-assert by perturbation
    ExactMatrix sys = reynolds::detail::invariance_rows(
        cs.monoid, cs.ring, std::vector<Scalar>(cs.monoid.order(), Scalar::one(cs.ring)));
    c.require(refine_kernel(Subspace::full(cs.monoid.order(), cs.ring), sys).dim() <= 1,
              cs.name + ": bilateral invariant space has dimension > 1");
  }
}

inline void criterion_decomposition(Checker& c, std::uint64_t) {
  for (auto& cs : integral_catalog()) {
    IntegralReport r = invariant_integral(cs.monoid, cs.ring);
    if (!r.exists) {
      c.require(false, cs.name + ": integral missing");
      continue;
    }
    try {
      DecompositionReport d = decompose_dual_algebra(cs.monoid, *r.integral);
      c.require(d.theta_is_first_projection, cs.name + ": Theta projection flag");
      c.require(d.complement_ideal_basis.size() == cs.monoid.order() - 1,
                cs.name + ": complement dimension");
    } catch (const std::exception& e) {
      c.require(false, cs.name + ": " + e.what());
    }
  }
}

inline void criterion_roundtrip(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  std::vector<FiniteMonoid> groups;
  for (std::size_t n = 1; n <= 12; ++n) groups.push_back(make_cyclic(n));
  groups.push_back(make_symmetric_group(3));
  for (int t = 0; t < 50; ++t) {
    Rng rng = Rng::substream(seed, 1000 + t);
    const FiniteMonoid& g = groups[rng.index(groups.size())];
    Representation v = random_representation(g, q, 5, rng);
    c.require(module_roundtrip(v) == v, "roundtrip is not the identity (trial " +
                                            std::to_string(t) + ")");
  }
  // the A*-action is an algebra map on 200 random convolution pairs
  FiniteMonoid s3 = make_symmetric_group(3);
  FiniteMonoid c6 = make_cyclic(6);
  for (int t = 0; t < 200; ++t) {
    Rng rng = Rng::substream(seed, 2000 + t);
    const FiniteMonoid& g = t % 2 == 0 ? s3 : c6;
    Representation v = random_representation(g, q, 4, rng);
    DualElement u = random_dual(g, q, rng);
    DualElement w = random_dual(g, q, rng);
    c.require(action_matrix(convolve(u, w), v) == action_matrix(u, v) * action_matrix(w, v),
              "A*-action is not an algebra map (pair " + std::to_string(t) + ")");
  }
}

inline void criterion_reynolds_laws(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  std::vector<CatalogCase> cases;
  for (std::size_t n = 2; n <= 6; ++n)
    cases.push_back({"c" + std::to_string(n), make_cyclic(n), q});
  cases.push_back({"s3", make_symmetric_group(3), q});
  cases.push_back({"c3/F7", make_cyclic(3), BaseRing::prime_field(7)});
  cases.push_back({"c3/F2", make_cyclic(3), BaseRing::prime_field(2)});

  for (int t = 0; t < 100; ++t) {
    Rng rng = Rng::substream(seed, 3000 + t);
    CatalogCase& cs = cases[rng.index(cases.size())];
    DualElement w_g = *invariant_integral(cs.monoid, cs.ring).integral;
    Representation v = random_representation(cs.monoid, cs.ring, 5, rng);
    ExactMatrix p = reynolds_projector(v, w_g);
    c.require(p * p == p, cs.name + ": P^2 != P");
    Subspace im = image(p);
    c.require(im.equals(fixed_space(v)), cs.name + ": im P != fixed space");
    Subspace ker_p = kernel(p);
    c.require(im.dim() + ker_p.dim() == v.dim() &&
                  rank(im.basis().hstack(ker_p.basis())) == v.dim(),
              cs.name + ": M != im P (+) ker P");
    c.require(is_stable_subspace(im, v) && is_stable_subspace(ker_p, v),
              cs.name + ": summands not G-stable");
  }
  // M_2(F_2) natural representation: P = 0 and fixed space = 0
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  BaseRing f2 = BaseRing::prime_field(2);
  DualElement w0 = *invariant_integral(m2, f2).integral;
  Representation nat = natural_matrix_representation(m2, 2, 2);
  c.require(reynolds_projector(nat, w0).is_zero(), "M_2(F_2): P != 0");
  c.require(fixed_space(nat).dim() == 0, "M_2(F_2): fixed space != 0");
}

inline void criterion_exactness(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  BaseRing f2 = BaseRing::prime_field(2);
  struct Case {
    std::string name;
    FiniteMonoid m;
    BaseRing k;
  };
  std::vector<Case> cases;
  cases.push_back({"s3/Q", make_symmetric_group(3), q});
  cases.push_back({"c4/Q", make_cyclic(4), q});
  cases.push_back({"m2(F2)/F2", make_full_matrix_monoid(2, 2), f2});
  for (auto& cs : cases) {
    auto sampler = [&](Rng& rng) { return random_representation(cs.m, cs.k, 3, rng); };
    ExactnessWitnessReport r = exactness_witness(cs.m, cs.k, 50, seed, sampler);
    c.require(r.integral_exists, cs.name + ": integral missing");
    c.require(r.trials_completed == 50, cs.name + ": only " +
                                            std::to_string(r.trials_completed) +
                                            "/50 trials found a surjection");
    c.require(r.all_surjective_on_invariants, cs.name + ": some pi(V^G) != W^G");
  }
  FiniteMonoid c3 = make_cyclic(3);
  BaseRing f3 = BaseRing::prime_field(3);
  auto sampler = [&](Rng& rng) { return random_representation(c3, f3, 3, rng); };
  ExactnessWitnessReport r = exactness_witness(c3, f3, 1, seed, sampler);
  c.require(!r.integral_exists, "C_3/F_3 unexpectedly invariant exact");
  c.require(r.counterexample.find("zero map") != std::string::npos,
            "C_3/F_3 counterexample not emitted");
}

inline void criterion_sections(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid s3 = make_symmetric_group(3);
  FiniteMonoid c4 = make_cyclic(4);
  for (int t = 0; t < 50; ++t) {
    Rng rng = Rng::substream(seed, 4000 + t);
    const FiniteMonoid& g = t % 2 == 0 ? s3 : c4;
    DualElement w_g = *invariant_integral(g, q).integral;
    Representation w = random_representation(g, q, 3, rng);
    Representation z = random_representation(g, q, 2, rng);
    Representation v0 = direct_sum(w, z);
    auto [s, s_inv] = random_basis_change(v0.dim(), q, rng);
    Representation v = conjugate(v0, s, s_inv);
    ExactMatrix proj(w.dim(), v.dim(), q);
    for (std::size_t i = 0; i < w.dim(); ++i) proj.set(i, i, Scalar::one(q));
    ExactMatrix pi = proj * s_inv;
    ExactMatrix sec0(v.dim(), w.dim(), q);
    for (std::size_t i = 0; i < w.dim(); ++i) sec0.set(i, i, Scalar::one(q));
    ExactMatrix sec = s * sec0;
    try {
      ExactMatrix s2 = equivariant_section(pi, sec, v, w, w_g);
      c.require(pi * s2 == ExactMatrix::identity(w.dim(), q), "averaged map is not a section");
      c.require(is_equivariant(s2, w, v), "averaged section is not equivariant");
    } catch (const std::exception& e) {
      c.require(false, std::string("equivariant_section threw: ") + e.what());
    }
    // stable complement of a random stable subspace (image of an intertwiner)
    Subspace homs = intertwiner_space(v, v);
    ExactMatrix coeffs(homs.dim(), 1, q);
    for (std::size_t i = 0; i < homs.dim(); ++i) coeffs.set(i, 0, rng.scalar(q, 3));
    ExactMatrix f = ExactMatrix::unvec(homs.basis() * coeffs, v.dim(), v.dim());
    Subspace w_sub = image(f);
    try {
      Subspace u = stable_complement(v, w_sub, w_g);
      c.require(u.dim() + w_sub.dim() == v.dim() &&
                    rank(w_sub.basis().hstack(u.basis())) == v.dim(),
                "W (+) U != whole space");
      c.require(is_stable_subspace(u, v), "complement is not G-stable");
    } catch (const std::exception& e) {
      c.require(false, std::string("stable_complement threw: ") + e.what());
    }
  }
  // C_2 over F_2: no w_G, the operation is refused
  FiniteMonoid c2 = make_cyclic(2);
  BaseRing f2 = BaseRing::prime_field(2);
  c.require(!invariant_integral(c2, f2).exists, "C_2/F_2 unexpectedly has an integral");
  Representation reg = regular_representation(c2, f2);
  Subspace diag(2, ExactMatrix::from_ints(f2, {{1}, {1}}));
  bool refused = false;
  try {
    stable_complement(reg, diag, DualElement::evaluation(c2, f2, 0));
  } catch (const validation_error&) {
    refused = true;
  }
  c.require(refused, "stable_complement not refused over F_2 with C_2");
}

inline void criterion_bg_modules(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  // regular-B example: functions on C_2, M = N = B, answer dimension 1
  {
    FiniteMonoid c2 = make_cyclic(2);
    DualElement w_g = *invariant_integral(c2, q).integral;
    GAlgebra b = function_g_algebra(c2, q);
    BGModule reg = regular_bg_module(b);
    Subspace inv = hom_b_invariants(reg, reg, w_g);
    c.require(inv.dim() == 1, "regular-B example: dimension != 1");
    c.require(inv.contains(ExactMatrix::identity(2, q).vec()),
              "regular-B example: identity not in the invariants");
  }
  for (int t = 0; t < 20; ++t) {
    Rng rng = Rng::substream(seed, 5000 + t);
    std::size_t order = 2 + rng.index(2);
    FiniteMonoid g = make_cyclic(order);
    DualElement w_g = *invariant_integral(g, q).integral;
    GAlgebra b = function_g_algebra(g, q);
    Representation v = order == 2
                           ? character_representation(g, sign_character_cyclic(g, q))
                           : trivial_representation(g, q, 1);
    Representation w = trivial_representation(g, q, 1);

    auto build = [&](const Representation& block, Rng& r2) {
      std::size_t d = b.dim(), vd = block.dim();
      std::vector<ExactMatrix> mats;
      for (std::size_t gg = 0; gg < g.order(); ++gg)
        mats.push_back(b.action().matrix(gg).kron(block.matrix(gg)));
      Representation underlying = Representation::validate(g, std::move(mats));
      std::vector<ExactMatrix> ba;
      ExactMatrix eye_v = ExactMatrix::identity(vd, q);
      for (std::size_t i = 0; i < d; ++i) {
        ExactMatrix mult(d, d, q);
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k2 = 0; k2 < d; ++k2) mult.set(k2, j, b.structure_constant(i, j, k2));
        ba.push_back(mult.kron(eye_v));
      }
      auto [s, s_inv] = random_basis_change(underlying.dim(), q, r2);
      std::vector<ExactMatrix> cm;
      for (std::size_t gg = 0; gg < g.order(); ++gg)
        cm.push_back(s * underlying.matrix(gg) * s_inv);
      std::vector<ExactMatrix> cba;
      for (auto& m : ba) cba.push_back(s * m * s_inv);
      return BGModule::validate(b, Representation::validate(g, std::move(cm)), std::move(cba));
    };
    BGModule m = build(rng.index(2) ? v : w, rng);
    BGModule n = build(rng.index(2) ? w : v, rng);
    try {
      Subspace inv = hom_b_invariants(m, n, w_g);  // internally checks the oracle
      c.require(inv.ambient_dim() == m.dim() * n.dim(), "hom space ambient mismatch");
    } catch (const std::exception& e) {
      c.require(false, std::string("hom_b_invariants failed: ") + e.what());
    }
  }
}

inline void criterion_separated_quotient(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  BaseRing f2 = BaseRing::prime_field(2);
  struct Item {
    std::string name;
    FiniteMonoid m;
    BaseRing k;
  };
  std::vector<Item> items;
  items.push_back({"c2", make_cyclic(2), q});
  items.push_back({"c3", make_cyclic(3), q});
  items.push_back({"c4", make_cyclic(4), q});
  items.push_back({"s3", make_symmetric_group(3), q});
  items.push_back({"m2(F2)", make_full_matrix_monoid(2, 2), f2});
  for (auto& it : items) {
    DualElement w_g = *invariant_integral(it.m, it.k).integral;
    for (int t = 0; t < 4; ++t) {
      Rng rng = Rng::substream(seed, 6000 + 10 * t);
      Representation v = t == 0 ? regular_representation(it.m, it.k)
                                : random_representation(it.m, it.k, 4, rng);
      if (v.dim() > 16) continue;
      try {
        SeparatedQuotientReport r = separated_quotient(v, w_g);
        c.require(r.iso.cols() == fixed_space(v).dim(),
                  it.name + ": dim(N/N_1) != dim M^G");
      } catch (const std::exception& e) {
        c.require(false, it.name + ": " + e.what());
      }
    }
  }
}

inline void criterion_invariant_rings(Checker& c, std::uint64_t) {
  BaseRing q = BaseRing::rationals();
  {
    FiniteMonoid c2 = make_cyclic(2);
    DualElement w_g = *invariant_integral(c2, q).integral;
    Representation sgn = character_representation(c2, sign_character_cyclic(c2, q));
    InvariantGenerators r = invariant_ring_generators(sgn, w_g, 2);
    c.require(r.degrees == std::vector<unsigned>{2}, "C_2 sign: generator degrees != {2}");
  }
  {
    FiniteMonoid s3 = make_symmetric_group(3);
    DualElement w_g = *invariant_integral(s3, q).integral;
    Representation perm = permutation_representation_symmetric(s3, 3, q);
    InvariantGenerators r = invariant_ring_generators(perm, w_g, 3);
    c.require(r.degrees == std::vector<unsigned>{1, 2, 3},
              "S_3 permutation: generator degrees != {1,2,3}");
    std::vector<std::size_t> dims;
    for (unsigned d = 0; d <= 3; ++d) dims.push_back(invariant_dimension(perm, w_g, d));
    c.require(dims == std::vector<std::size_t>{1, 1, 2, 3}, "S_3: dimension table mismatch");
    c.require(r.dims_by_degree == dims, "S_3: bookkeeping differs from the oracle");
  }
  {
    FiniteMonoid c4 = make_cyclic(4);
    DualElement w_g = *invariant_integral(c4, q).integral;
    Representation rot = rotation_representation_c4(c4, q);
    InvariantGenerators r = invariant_ring_generators(rot, w_g, 4);
    c.require(r.degrees == std::vector<unsigned>{2, 4, 4},
              "C_4 rotation: generator degrees != {2,4,4}");
    std::vector<std::size_t> dims;
    for (unsigned d = 0; d <= 4; ++d) dims.push_back(invariant_dimension(rot, w_g, d));
    c.require(dims == std::vector<std::size_t>{1, 0, 1, 0, 3}, "C_4: dimension table mismatch");
    c.require(r.dims_by_degree == dims, "C_4: bookkeeping differs from the oracle");
  }
}

inline void criterion_semi_invariants(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  {
    FiniteMonoid c2 = make_cyclic(2);
    Character sign = sign_character_cyclic(c2, q);
    IntegralReport r = semi_invariant_integral(c2, sign);
    c.require(r.exists && r.integral->coeff(0) == Scalar::rational(1, 2) &&
                  r.integral->coeff(1) == Scalar::rational(-1, 2),
              "C_2 sign integral != (1/2)(ev_e - ev_sigma)");
  }
  {
    BaseRing f7 = BaseRing::prime_field(7);
    FiniteMonoid c3 = make_cyclic(3);
    Character chi = power_character_cyclic(c3, Scalar::from_int(f7, 2));
    IntegralReport r = semi_invariant_integral(c3, chi);
    c.require(r.exists && r.integral->coeff(0) == Scalar::from_int(f7, 5) &&
                  r.integral->coeff(1) == Scalar::from_int(f7, 6) &&
                  r.integral->coeff(2) == Scalar::from_int(f7, 3),
              "C_3/F_7 semi-invariant integral != (5,6,3)");
  }
  // splitting M = M^chi (+) (1 - w_chi) M on 50 random representations
  FiniteMonoid c2 = make_cyclic(2);
  FiniteMonoid c6 = make_cyclic(6);
  Character s2 = sign_character_cyclic(c2, q);
  Character s6 = sign_character_cyclic(c6, q);
  DualElement w2 = *semi_invariant_integral(c2, s2).integral;
  DualElement w6 = *semi_invariant_integral(c6, s6).integral;
  for (int t = 0; t < 50; ++t) {
    Rng rng = Rng::substream(seed, 7000 + t);
    bool use2 = t % 2 == 0;
    const FiniteMonoid& g = use2 ? c2 : c6;
    const Character& chi = use2 ? s2 : s6;
    const DualElement& w_chi = use2 ? w2 : w6;
    Representation v = random_representation(g, q, 4, rng);
    ExactMatrix qm = action_matrix(w_chi, v);
    c.require(qm * qm == qm, "semi projector not idempotent");
    Subspace im = image(qm);
    Subspace ker_q = kernel(qm);
    c.require(im.equals(semi_invariant_space_direct(v, chi)), "w_chi M != M^chi");
    c.require(im.dim() + ker_q.dim() == v.dim() &&
                  rank(im.basis().hstack(ker_q.basis())) == v.dim(),
              "M != M^chi (+) (1-w_chi) M");
    c.require(is_stable_subspace(ker_q, v), "(1-w_chi) M is not G-stable");
  }
}

inline void criterion_omega(Checker& c, std::uint64_t seed) {
  BaseRing q = BaseRing::rationals();
  BaseRing f7 = BaseRing::prime_field(7);
  FiniteMonoid c2 = make_cyclic(2);
  FiniteMonoid c3 = make_cyclic(3);
  FiniteMonoid c4 = make_cyclic(4);
  FiniteMonoid c6 = make_cyclic(6);
  FiniteMonoid s3 = make_symmetric_group(3);
  struct P {
    std::string name;
    const FiniteMonoid* m;
    Character chi;
  };
  std::vector<P> pairs;
  pairs.push_back({"c2-sign/Q", &c2, sign_character_cyclic(c2, q)});
  pairs.push_back({"c4-sign/Q", &c4, sign_character_cyclic(c4, q)});
  pairs.push_back({"c6-sign/Q", &c6, sign_character_cyclic(c6, q)});
  pairs.push_back({"s3-sign/Q", &s3, sign_character_symmetric(s3, 3, q)});
  pairs.push_back({"s3-trivial/Q", &s3, Character::trivial(s3, q)});
  pairs.push_back({"c3-chi2/F7", &c3, power_character_cyclic(c3, Scalar::from_int(f7, 2))});

  for (auto& p : pairs) {
    OmegaOperator omega = canonical_omega(*p.m, p.chi);
    c.require(verify_omega(omega, p.chi).valid, p.name + ": canonical Omega fails the axioms");
    DualElement w_g = *invariant_integral(*p.m, p.chi.ring()).integral;
    try {
      DualElement w_chi = integral_from_omega(omega, p.chi, w_g);
      IntegralReport direct = semi_invariant_integral(*p.m, p.chi);
      c.require(direct.exists && *direct.integral == w_chi,
                p.name + ": w_G o Omega != solved w_chi");
    } catch (const std::exception& e) {
      c.require(false, p.name + ": " + e.what());
    }
  }
  // identity composite: z = ev_e
  {
    OmegaOperator id(s3, ExactMatrix::identity(6, q));
    Character theta = Character::trivial(s3, q);
    c.require(central_element(id, theta) == DualElement::evaluation(s3, q, 0),
              "central element of the identity composite != ev_e");
    OmegaOperator omega = canonical_omega(c3, power_character_cyclic(c3, Scalar::from_int(f7, 2)));
    c.require(central_element(omega, power_character_cyclic(c3, Scalar::from_int(f7, 2))) ==
                  DualElement::evaluation(c3, f7, 0),
              "central element of chi^-1 composite != ev_e");
  }
  // chi-Reynolds through Omega on 20 random representations
  {
    Character s6 = sign_character_cyclic(c6, q);
    OmegaOperator omega = canonical_omega(c6, s6);
    DualElement w_chi = *semi_invariant_integral(c6, s6).integral;
    for (int t = 0; t < 20; ++t) {
      Rng rng = Rng::substream(seed, 8000 + t);
      Representation v = random_representation(c6, q, 4, rng);
      try {
        ExactMatrix m = chi_reynolds_via_omega(v, omega, s6);
        c.require(m == action_matrix(w_chi, v), "chi-Reynolds via Omega mismatch");
      } catch (const std::exception& e) {
        c.require(false, std::string("chi_reynolds_via_omega threw: ") + e.what());
      }
    }
  }
  // find_omega returns only verified operators
  {
    Character s4 = sign_character_cyclic(c4, q);
    OmegaSolution sol = find_omega(c4, s4, true);
    c.require(!sol.basis.empty(), "find_omega: empty basis on C_4 sign");
    for (const auto& b : sol.basis)
      c.require(verify_omega(b, s4).valid, "find_omega: basis element fails verify_omega");
    c.require(sol.normalized.has_value(), "find_omega: normalization infeasible on C_4 sign");
    Character chi = power_character_cyclic(c3, Scalar::from_int(f7, 2));
    OmegaSolution sol2 = find_omega(c3, chi, true);
    for (const auto& b : sol2.basis)
      c.require(verify_omega(b, chi).valid, "find_omega: basis element fails verify_omega (F_7)");
  }
}

}  // namespace detail

struct Criterion {
  int index;
  std::string name;
  double budget_ms;  // 0 = no budget
  std::function<void(detail::Checker&, std::uint64_t)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "integral catalog (C_n/Q uniform; C_p/F_p, C_2/Z nonexistent; M_2(F_2) = ev_0)", 5000,
       detail::criterion_integral_catalog},
      {2, "integral laws (idempotence, bilateral invariance, uniqueness, Theta, star)", 0,
       detail::criterion_integral_laws},
      {3, "decomposition A* = k x B* (centrality, Theta-vanishing, dimension n-1)", 0,
       detail::criterion_decomposition},
      {4, "equivalence roundtrip and A*-action algebra map", 10000, detail::criterion_roundtrip},
      {5, "Reynolds laws on random representations; M_2(F_2) natural has P = 0", 30000,
       detail::criterion_reynolds_laws},
      {6, "exactness: random equivariant surjections; C_3/F_3 counterexample", 30000,
       detail::criterion_exactness},
      {7, "equivariant sections and stable complements; refusal without w_G", 0,
       detail::criterion_sections},
      {8, "BG-modules: Hom_B invariants equal the brute-force intersection", 0,
       detail::criterion_bg_modules},
      {9, "separated quotient: dim(N/N_1) = dim M^G, trivial quotient action, duals", 0,
       detail::criterion_separated_quotient},
      {10, "invariant rings: generator degrees and dimension oracles", 10000,
       detail::criterion_invariant_rings},
      {11, "semi-invariants: frozen integrals and the chi-splitting", 0,
       detail::criterion_semi_invariants},
      {12, "Omega-processes: axioms, central element, integrals, chi-Reynolds", 10000,
       detail::criterion_omega},
  };
  return list;
}

inline std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  for (const Criterion& cr : criteria()) {
    CriterionResult res;
    res.index = cr.index;
    res.name = cr.name;
    detail::Checker checker;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(checker, seed);
    } catch (const std::exception& e) {
      checker.require(false, std::string("unhandled exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (cr.budget_ms > 0 && res.millis > cr.budget_ms)
      checker.require(false, "runtime budget exceeded (" + std::to_string(res.millis) + " ms > " +
                                 std::to_string(cr.budget_ms) + " ms)");
    res.pass = checker.ok;
    res.detail = checker.first_failure;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace reynolds::selftest
