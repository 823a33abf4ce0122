#include <catch_amalgamated.hpp>

#include "reynolds/catalog.hpp"
#include "reynolds/integrals.hpp"
#include "reynolds/repr.hpp"

using namespace reynolds;

namespace {
const BaseRing Q = BaseRing::rationals();
}

TEST_CASE("action_matrix basics") {
  FiniteMonoid c2 = make_cyclic(2);
  Representation reg = regular_representation(c2, Q);
  for (std::size_t g = 0; g < 2; ++g)
    CHECK(action_matrix(DualElement::evaluation(c2, Q, g), reg) == reg.matrix(g));

  DualElement w_g = *invariant_integral(c2, Q).integral;
  ExactMatrix p = action_matrix(w_g, reg);
  ExactMatrix expected(2, 2, Q);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) expected.set(i, j, Scalar::rational(1, 2));
  CHECK(p == expected);

  Character sign = sign_character_cyclic(c2, Q);
  Representation sgn = character_representation(c2, sign);
  CHECK(action_matrix(w_g, sgn).is_zero());  // (1 + (-1))/2 = 0
}

TEST_CASE("action is an algebra map for convolution") {
  FiniteMonoid s3 = make_symmetric_group(3);
  Rng rng(101);
  Representation v = random_representation(s3, Q, 4, rng);
  CHECK(action_matrix(DualElement::evaluation(s3, Q, 0), v) ==
        ExactMatrix::identity(v.dim(), Q));
  for (int t = 0; t < 20; ++t) {
    DualElement u = random_dual(s3, Q, rng);
    DualElement w = random_dual(s3, Q, rng);
    CHECK(action_matrix(convolve(u, w), v) == action_matrix(u, v) * action_matrix(w, v));
  }
}

TEST_CASE("module roundtrip is the identity") {
  FiniteMonoid c4 = make_cyclic(4);
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  Rng rng(7);
  Representation r1 = random_representation(c4, Q, 3, rng);
  CHECK(module_roundtrip(r1) == r1);
  Representation r2 = trivial_representation(c4, Q, 2);
  CHECK(module_roundtrip(r2) == r2);
  Representation nat = natural_matrix_representation(m2, 2, 2);
  CHECK(module_roundtrip(nat) == nat);
}

TEST_CASE("fixed spaces") {
  FiniteMonoid c2 = make_cyclic(2);
  Representation triv2 = trivial_representation(c2, Q, 2);
  CHECK(fixed_space(triv2).dim() == 2);

  Representation sgn = character_representation(c2, sign_character_cyclic(c2, Q));
  CHECK(fixed_space(sgn).dim() == 0);

  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  Representation nat = natural_matrix_representation(m2, 2, 2);
  CHECK(fixed_space(nat).dim() == 0);  // only v with A v = v for all A, incl. 0
}

TEST_CASE("Reynolds projector laws (frozen examples)") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;

  Representation triv = trivial_representation(c2, Q, 3);
  CHECK(reynolds_projector(triv, w_g) == ExactMatrix::identity(3, Q));

  Representation reg = regular_representation(c2, Q);
  ExactMatrix p = reynolds_projector(reg, w_g);
  CHECK(rank(p) == 1);
  Subspace im = image(p);
  CHECK(im.equals(fixed_space(reg)));
  CHECK(im.contains(ExactMatrix::from_ints(Q, {{1}, {1}})));

  BaseRing f2 = BaseRing::prime_field(2);
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  DualElement w0 = *invariant_integral(m2, f2).integral;
  Representation nat = natural_matrix_representation(m2, 2, 2);
  CHECK(reynolds_projector(nat, w0).is_zero());  // rho(0) = 0
}

TEST_CASE("Reynolds projector laws (randomized)") {
  FiniteMonoid s3 = make_symmetric_group(3);
  FiniteMonoid c6 = make_cyclic(6);
  BaseRing f7 = BaseRing::prime_field(7);
  struct Case { const FiniteMonoid* m; BaseRing k; };
  std::vector<Case> cases{{&s3, Q}, {&c6, Q}, {&s3, f7}};
  Rng rng(55);
  for (auto& cs : cases) {
    DualElement w_g = *invariant_integral(*cs.m, cs.k).integral;
    for (int t = 0; t < 8; ++t) {
      Representation v = random_representation(*cs.m, cs.k, 5, rng);
      ExactMatrix p = reynolds_projector(v, w_g);
      CHECK(p * p == p);
      Subspace im = image(p);
      CHECK(im.equals(fixed_space(v)));
      for (std::size_t g = 0; g < cs.m->order(); ++g) {
        CHECK(v.matrix(g) * p == p);
        CHECK(p * v.matrix(g) == p);
      }
      auto [inv, comp] = split_invariants(v, w_g);
      CHECK(inv.dim() + comp.dim() == v.dim());
      CHECK(rank(inv.basis().hstack(comp.basis())) == v.dim());
      CHECK(is_stable_subspace(inv, v));
      CHECK(is_stable_subspace(comp, v));
    }
  }
}

TEST_CASE("split_invariants: frozen examples") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;

  Representation sgn = character_representation(c2, sign_character_cyclic(c2, Q));
  auto [i1, k1] = split_invariants(sgn, w_g);
  CHECK(i1.dim() == 0);
  CHECK(k1.dim() == 1);

  Representation reg = regular_representation(c2, Q);
  auto [i2, k2] = split_invariants(reg, w_g);
  CHECK(i2.contains(ExactMatrix::from_ints(Q, {{1}, {1}})));
  CHECK(k2.contains(ExactMatrix::from_ints(Q, {{1}, {-1}})));

  FiniteMonoid c3 = make_cyclic(3);
  DualElement w3 = *invariant_integral(c3, Q).integral;
  Representation reg3 = regular_representation(c3, Q);
  auto [i3, k3] = split_invariants(reg3, w3);
  CHECK(i3.dim() == 1);
  CHECK(k3.dim() == 2);
}

TEST_CASE("uniqueness of the stable splitting (brute force over F_2)") {
  // C_3 over F_2: regular representation; enumerate all G-stable complements
  BaseRing f2 = BaseRing::prime_field(2);
  FiniteMonoid c3 = make_cyclic(3);
  DualElement w_g = *invariant_integral(c3, f2).integral;
  Representation reg = regular_representation(c3, f2);
  ExactMatrix p = reynolds_projector(reg, w_g);
  Subspace inv = image(p);
  Subspace comp = kernel(p);
  REQUIRE(inv.dim() == 1);
  REQUIRE(comp.dim() == 2);

  // all 2-dimensional subspaces of F_2^3: spans of pairs of distinct nonzero vectors
  std::vector<ExactMatrix> vectors;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (a + b + c > 0) vectors.push_back(ExactMatrix::from_ints(f2, {{a}, {b}, {c}}));
  std::vector<Subspace> planes;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      ExactMatrix basis = vectors[i].hstack(vectors[j]);
      if (rank(basis) != 2) continue;
      Subspace s(3, basis);
      bool seen = false;
      for (const auto& t : planes) seen = seen || t.equals(s);
      if (!seen) planes.push_back(std::move(s));
    }
  REQUIRE(planes.size() == 7);

  std::size_t stable_complements = 0;
  for (const auto& s : planes) {
    bool complement = rank(s.basis().hstack(inv.basis())) == 3;
    if (complement && is_stable_subspace(s, reg)) {
      ++stable_complements;
      CHECK(s.equals(comp));
    }
  }
  CHECK(stable_complements == 1);
}

TEST_CASE("semi-invariant spaces") {
  FiniteMonoid c2 = make_cyclic(2);
  Character sign = sign_character_cyclic(c2, Q);
  Character theta = Character::trivial(c2, Q);
  DualElement w_chi = *semi_invariant_integral(c2, sign).integral;
  DualElement w_g = *invariant_integral(c2, Q).integral;

  Representation reg = regular_representation(c2, Q);
  Subspace s = semi_invariant_space(reg, sign, w_chi);
  REQUIRE(s.dim() == 1);
  CHECK(s.contains(ExactMatrix::from_ints(Q, {{1}, {-1}})));

  // chi = Theta reduces to the fixed space
  Subspace f = semi_invariant_space(reg, theta, w_g);
  CHECK(f.equals(fixed_space(reg)));

  Representation sgn = character_representation(c2, sign);
  CHECK(semi_invariant_space(sgn, sign, w_chi).dim() == 1);

  // projector laws: Q^2 = Q and rho(g) Q = chi(g) Q = Q rho(g)
  ExactMatrix qm = action_matrix(w_chi, reg);
  CHECK(qm * qm == qm);
  for (std::size_t g = 0; g < 2; ++g) {
    CHECK(reg.matrix(g) * qm == qm.scaled(sign.value(g)));
    CHECK(qm * reg.matrix(g) == qm.scaled(sign.value(g)));
  }
}

TEST_CASE("hom_reynolds: frozen examples") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;

  Representation triv = trivial_representation(c2, Q, 2);
  HomProjector hp = hom_reynolds(triv, triv, w_g);
  CHECK(hp.matrix == ExactMatrix::identity(4, Q));

  Representation sgn = character_representation(c2, sign_character_cyclic(c2, Q));
  HomProjector hs = hom_reynolds(sgn, sgn, w_g);
  CHECK(hs.matrix == ExactMatrix::identity(1, Q));

  Representation reg = regular_representation(c2, Q);
  Representation triv1 = trivial_representation(c2, Q, 1);
  HomProjector hr = hom_reynolds(reg, triv1, w_g);
  REQUIRE(hr.hom_g.dim() == 1);
  // image = span of the row vector (1, 1), flattened
  CHECK(hr.hom_g.contains(ExactMatrix::from_ints(Q, {{1}, {1}})));

  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  BaseRing f2 = BaseRing::prime_field(2);
  Representation nat = natural_matrix_representation(m2, 2, 2);
  DualElement w0 = *invariant_integral(m2, f2).integral;
  CHECK_THROWS_AS(hom_reynolds(nat, nat, w0), validation_error);  // not a group
}

TEST_CASE("equivariant sections") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;
  Representation reg = regular_representation(c2, Q);
  Representation triv = trivial_representation(c2, Q, 1);

  SECTION("identity maps") {
    ExactMatrix eye = ExactMatrix::identity(2, Q);
    CHECK(equivariant_section(eye, eye, reg, reg, w_g) == eye);
  }
  SECTION("coordinate sum with naive section averages to (1/2, 1/2)") {
    ExactMatrix pi = ExactMatrix::from_ints(Q, {{1, 1}});
    ExactMatrix s = ExactMatrix::from_ints(Q, {{1}, {0}});
    ExactMatrix s2 = equivariant_section(pi, s, reg, triv, w_g);
    CHECK(s2.at(0, 0) == Scalar::rational(1, 2));
    CHECK(s2.at(1, 0) == Scalar::rational(1, 2));
  }
  SECTION("already equivariant sections are fixed") {
    ExactMatrix pi = ExactMatrix::from_ints(Q, {{1, 1}});
    ExactMatrix s(2, 1, Q);
    s.set(0, 0, Scalar::rational(1, 2));
    s.set(1, 0, Scalar::rational(1, 2));
    CHECK(equivariant_section(pi, s, reg, triv, w_g) == s);
  }
  SECTION("input validation") {
    ExactMatrix not_equiv = ExactMatrix::from_ints(Q, {{1, 0}});
    ExactMatrix s = ExactMatrix::from_ints(Q, {{1}, {0}});
    CHECK_THROWS_AS(equivariant_section(not_equiv, s, reg, triv, w_g), validation_error);
    ExactMatrix pi = ExactMatrix::from_ints(Q, {{1, 1}});
    ExactMatrix bad_s = ExactMatrix::from_ints(Q, {{1}, {1}});  // pi * s = 2 != 1
    CHECK_THROWS_AS(equivariant_section(pi, bad_s, reg, triv, w_g), validation_error);
  }
}

TEST_CASE("random equivariant sections (seeded)") {
  FiniteMonoid s3 = make_symmetric_group(3);
  DualElement w_g = *invariant_integral(s3, Q).integral;
  Rng master(4242);
  int done = 0;
  for (int t = 0; t < 25; ++t) {
    Rng rng = Rng::substream(4242, t);
    Representation w = random_representation(s3, Q, 3, rng);
    Representation z = random_representation(s3, Q, 2, rng);
    Representation v0 = direct_sum(w, z);
    auto [s, s_inv] = random_basis_change(v0.dim(), Q, rng);
    Representation v = conjugate(v0, s, s_inv);
    // pi: project onto the first block in the new coordinates
    ExactMatrix proj(w.dim(), v.dim(), Q);
    for (std::size_t i = 0; i < w.dim(); ++i) proj.set(i, i, Scalar::one(Q));
    ExactMatrix pi = proj * s_inv;
    REQUIRE(is_equivariant(pi, v, w));
    // a linear (generally non-equivariant) section: s maps into the first block
    ExactMatrix sec0(v.dim(), w.dim(), Q);
    for (std::size_t i = 0; i < w.dim(); ++i) sec0.set(i, i, Scalar::one(Q));
    ExactMatrix sec = s * sec0;
    // perturb the section by something in the kernel of pi composed with anything
    REQUIRE(pi * sec == ExactMatrix::identity(w.dim(), Q));
    ExactMatrix s2 = equivariant_section(pi, sec, v, w, w_g);
    CHECK(pi * s2 == ExactMatrix::identity(w.dim(), Q));
    CHECK(is_equivariant(s2, w, v));
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("stable complements") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;
  Representation reg = regular_representation(c2, Q);

  SECTION("frozen cases") {
    Subspace full = Subspace::full(2, Q);
    CHECK(stable_complement(reg, full, w_g).dim() == 0);
    Subspace zero = Subspace::zero(2, Q);
    CHECK(stable_complement(reg, zero, w_g).dim() == 2);
    Subspace diag(2, ExactMatrix::from_ints(Q, {{1}, {1}}));
    Subspace u = stable_complement(reg, diag, w_g);
    REQUIRE(u.dim() == 1);
    CHECK(u.contains(ExactMatrix::from_ints(Q, {{1}, {-1}})));
  }
  SECTION("non-stable subspaces are rejected") {
    Subspace skew(2, ExactMatrix::from_ints(Q, {{1}, {0}}));
    CHECK_THROWS_AS(stable_complement(reg, skew, w_g), validation_error);
  }
  SECTION("refused when w_G does not exist (C_2 over F_2)") {
    BaseRing f2 = BaseRing::prime_field(2);
    REQUIRE_FALSE(invariant_integral(c2, f2).exists);
    Representation reg2 = regular_representation(c2, f2);
    Subspace diag(2, ExactMatrix::from_ints(f2, {{1}, {1}}));
    // any candidate integral fails the bilateral-invariance validation
    DualElement not_integral = DualElement::evaluation(c2, f2, 0);
    CHECK_THROWS_AS(stable_complement(reg2, diag, not_integral), validation_error);
  }
}

TEST_CASE("random stable complements via intertwiner images") {
  FiniteMonoid c4 = make_cyclic(4);
  DualElement w_g = *invariant_integral(c4, Q).integral;
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    Representation v = random_representation(c4, Q, 4, rng);
    Subspace homs = intertwiner_space(v, v);
    ExactMatrix coeffs(homs.dim(), 1, Q);
    for (std::size_t i = 0; i < homs.dim(); ++i) coeffs.set(i, 0, rng.scalar(Q, 3));
    ExactMatrix f = ExactMatrix::unvec(homs.basis() * coeffs, v.dim(), v.dim());
    Subspace w_sub = image(f);  // image of an intertwiner is G-stable
    REQUIRE(is_stable_subspace(w_sub, v));
    Subspace u = stable_complement(v, w_sub, w_g);
    CHECK(u.dim() + w_sub.dim() == v.dim());
    CHECK(is_stable_subspace(u, v));
    CHECK(rank(w_sub.basis().hstack(u.basis())) == v.dim());
  }
}

TEST_CASE("separated quotient") {
  FiniteMonoid c2 = make_cyclic(2);
  DualElement w_g = *invariant_integral(c2, Q).integral;

  SECTION("trivial representation: N_1 = 0") {
    Representation triv = trivial_representation(c2, Q, 3);
    SeparatedQuotientReport r = separated_quotient(triv, w_g);
    CHECK(r.n1.dim() == 0);
    CHECK(r.iso.cols() == 3);
  }
  SECTION("sign representation: N_1 is everything") {
    Representation sgn = character_representation(c2, sign_character_cyclic(c2, Q));
    SeparatedQuotientReport r = separated_quotient(sgn, w_g);
    CHECK(r.n1.dim() == 1);
    CHECK(r.iso.cols() == 0);
  }
  SECTION("regular representation of C_3 over Q: dims (2, 1)") {
    FiniteMonoid c3 = make_cyclic(3);
    DualElement w3 = *invariant_integral(c3, Q).integral;
    Representation reg = regular_representation(c3, Q);
    SeparatedQuotientReport r = separated_quotient(reg, w3);
    CHECK(r.n1.dim() == 2);
    CHECK(r.iso.cols() == 1);
    Subspace iso_image = image(r.iso);
    CHECK(iso_image.equals(fixed_space(reg)));
  }
  SECTION("catalog sweep (internal assertions)") {
    FiniteMonoid s3 = make_symmetric_group(3);
    DualElement ws = *invariant_integral(s3, Q).integral;
    Rng rng(303);
    for (int t = 0; t < 6; ++t) {
      Representation v = random_representation(s3, Q, 5, rng);
      CHECK_NOTHROW(separated_quotient(v, ws));
    }
    BaseRing f2 = BaseRing::prime_field(2);
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    DualElement w0 = *invariant_integral(m2, f2).integral;
    Representation nat = natural_matrix_representation(m2, 2, 2);
    SeparatedQuotientReport r = separated_quotient(nat, w0);
    CHECK(r.n1.dim() == 2);  // P = 0
    CHECK(r.iso.cols() == 0);
  }
}

TEST_CASE("exactness witness") {
  SECTION("S_3 over Q: seeded trials all surject on invariants") {
    FiniteMonoid s3 = make_symmetric_group(3);
    auto sampler = [&](Rng& rng) { return random_representation(s3, Q, 3, rng); };
    ExactnessWitnessReport r = exactness_witness(s3, Q, 10, 42, sampler);
    CHECK(r.integral_exists);
    CHECK(r.trials_completed == 10);
    CHECK(r.all_surjective_on_invariants);
  }
  SECTION("M_2(F_2): monoid case works through intertwiner sampling") {
    BaseRing f2 = BaseRing::prime_field(2);
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    auto sampler = [&](Rng& rng) { return random_representation(m2, f2, 3, rng); };
    ExactnessWitnessReport r = exactness_witness(m2, f2, 5, 42, sampler);
    CHECK(r.integral_exists);
    CHECK(r.trials_completed == 5);
    CHECK(r.all_surjective_on_invariants);
  }
  SECTION("C_3 over F_3: canonical counterexample") {
    BaseRing f3 = BaseRing::prime_field(3);
    FiniteMonoid c3 = make_cyclic(3);
    auto sampler = [&](Rng& rng) { return random_representation(c3, f3, 3, rng); };
    ExactnessWitnessReport r = exactness_witness(c3, f3, 5, 42, sampler);
    CHECK_FALSE(r.integral_exists);
    CHECK_THAT(r.counterexample, Catch::Matchers::ContainsSubstring("zero map"));
  }
  SECTION("trivial monoid: vacuously exact") {
    FiniteMonoid t = make_cyclic(1);
    auto sampler = [&](Rng& rng) { return random_representation(t, Q, 2, rng); };
    ExactnessWitnessReport r = exactness_witness(t, Q, 3, 1, sampler);
    CHECK(r.integral_exists);
    CHECK(r.trials_completed == 3);
    CHECK(r.all_surjective_on_invariants);
  }
  SECTION("deterministic given the seed") {
    FiniteMonoid c4 = make_cyclic(4);
    auto sampler = [&](Rng& rng) { return random_representation(c4, Q, 3, rng); };
    ExactnessWitnessReport a = exactness_witness(c4, Q, 5, 9, sampler);
    ExactnessWitnessReport b = exactness_witness(c4, Q, 5, 9, sampler);
    CHECK(a.trials_completed == b.trials_completed);
    CHECK(a.all_surjective_on_invariants == b.all_surjective_on_invariants);
    CHECK(a.notes == b.notes);
  }
}
