#include <catch_amalgamated.hpp>

#include "reynolds/bialgebra.hpp"
#include "reynolds/catalog.hpp"
#include "reynolds/rng.hpp"

using namespace reynolds;

TEST_CASE("convolution unit and basis rule") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c2 = make_cyclic(2);
  Rng rng(5);
  DualElement w = random_dual(c2, q, rng);
  DualElement ev_e = DualElement::evaluation(c2, q, 0);
  CHECK(convolve(ev_e, w) == w);
  CHECK(convolve(w, ev_e) == w);
  // sigma^2 = e
  DualElement ev_s = DualElement::evaluation(c2, q, 1);
  CHECK(convolve(ev_s, ev_s) == ev_e);
}

TEST_CASE("zero element absorbs evaluations (M_2(F_2))") {
  BaseRing f2 = BaseRing::prime_field(2);
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  DualElement ev_0 = DualElement::evaluation(m2, f2, *m2.zero());
  for (std::size_t g = 0; g < m2.order(); ++g) {
    DualElement ev_g = DualElement::evaluation(m2, f2, g);
    CHECK(convolve(ev_g, ev_0) == ev_0);
    CHECK(convolve(ev_0, ev_g) == ev_0);
  }
}

TEST_CASE("convolution associativity and unitality on basis triples (order <= 8)") {
  BaseRing f3 = BaseRing::prime_field(3);
  for (auto&& m : {make_cyclic(4), make_cyclic(8), make_zero_monoid(), make_symmetric_group(3)}) {
    std::size_t n = m.order();
    DualElement unit = DualElement::evaluation(m, f3, m.identity());
    for (std::size_t i = 0; i < n; ++i) {
      DualElement a = DualElement::evaluation(m, f3, i);
      CHECK(convolve(unit, a) == a);
      CHECK(convolve(a, unit) == a);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          DualElement b = DualElement::evaluation(m, f3, j);
          DualElement c = DualElement::evaluation(m, f3, k);
          CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
        }
    }
  }
}

TEST_CASE("convolution associativity randomized beyond order 8") {
  BaseRing f2 = BaseRing::prime_field(2);
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    DualElement a = random_dual(m2, f2, rng);
    DualElement b = random_dual(m2, f2, rng);
    DualElement c = random_dual(m2, f2, rng);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
}

TEST_CASE("pairing examples") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c2 = make_cyclic(2);
  FunctionElement one = FunctionElement::constant_one(c2, q);
  CHECK(pair(DualElement::evaluation(c2, q, 0), one).is_one());
  DualElement w(c2, {Scalar::rational(1, 2), Scalar::rational(1, 2)});
  FunctionElement a(c2, {Scalar::from_int(q, 3), Scalar::from_int(q, 5)});
  CHECK(pair(w, a) == Scalar::from_int(q, 4));
  CHECK(pair(w, one) == augmentation_theta(w));
}

TEST_CASE("duality of product and comultiplication") {
  // pair(u * w, a) = sum over (x, y) of u[x] w[y] a(xy), exhaustive on C_3 and S_3
  BaseRing q = BaseRing::rationals();
  for (auto&& m : {make_cyclic(3), make_symmetric_group(3)}) {
    Rng rng(21);
    for (int t = 0; t < 6; ++t) {
      DualElement u = random_dual(m, q, rng);
      DualElement w = random_dual(m, q, rng);
      FunctionElement a = random_function(m, q, rng);
      Scalar lhs = pair(convolve(u, w), a);
      Scalar rhs = Scalar::zero(q);
      for (std::size_t x = 0; x < m.order(); ++x)
        for (std::size_t y = 0; y < m.order(); ++y)
          rhs = rhs + u.coeff(x) * w.coeff(y) * a.value(m.mul(x, y));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("translations: identities and actions") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c3 = make_cyclic(3);
  FunctionElement a(c3, {Scalar::from_int(q, 2), Scalar::from_int(q, 5), Scalar::from_int(q, 11)});
  CHECK(translate(Side::left, 0, a) == a);
  // C_2: lambda_sigma swaps the two values
  FiniteMonoid c2 = make_cyclic(2);
  FunctionElement b(c2, {Scalar::from_int(q, 1), Scalar::from_int(q, 7)});
  FunctionElement swapped = translate(Side::left, 1, b);
  CHECK(swapped.value(0) == Scalar::from_int(q, 7));
  CHECK(swapped.value(1) == Scalar::from_int(q, 1));
  // C_3: rho_g shifts (a(e), a(g), a(g^2)) -> (a(g), a(g^2), a(e))
  FunctionElement shifted = translate(Side::right, 1, a);
  CHECK(shifted.value(0) == Scalar::from_int(q, 5));
  CHECK(shifted.value(1) == Scalar::from_int(q, 11));
  CHECK(shifted.value(2) == Scalar::from_int(q, 2));
}

TEST_CASE("translations compose as commuting actions") {
  BaseRing f5 = BaseRing::prime_field(5);
  FiniteMonoid s3 = make_symmetric_group(3);
  Rng rng(3);
  FunctionElement a = random_function(s3, f5, rng);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      // lambda_g lambda_h = lambda_{hg}, rho_g rho_h = rho_{gh}, and they commute
      CHECK(translate(Side::left, g, translate(Side::left, h, a)) ==
            translate(Side::left, s3.mul(h, g), a));
      CHECK(translate(Side::right, g, translate(Side::right, h, a)) ==
            translate(Side::right, s3.mul(g, h), a));
      CHECK(translate(Side::left, g, translate(Side::right, h, a)) ==
            translate(Side::right, h, translate(Side::left, g, a)));
    }
}

TEST_CASE("augmentation is an algebra homomorphism to k") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid s3 = make_symmetric_group(3);
  for (std::size_t g = 0; g < 6; ++g)
    CHECK(augmentation_theta(DualElement::evaluation(s3, q, g)).is_one());
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    DualElement u = random_dual(s3, q, rng);
    DualElement w = random_dual(s3, q, rng);
    CHECK(augmentation_theta(convolve(u, w)) == augmentation_theta(u) * augmentation_theta(w));
  }
  FiniteMonoid c2 = make_cyclic(2);
  DualElement half(c2, {Scalar::rational(1, 2), Scalar::rational(1, 2)});
  CHECK(augmentation_theta(half).is_one());
}

TEST_CASE("star involution") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c3 = make_cyclic(3);
  DualElement ev_g = DualElement::evaluation(c3, q, 1);
  CHECK(star_involution(ev_g) == DualElement::evaluation(c3, q, 2));  // g^-1 = g^2
  CHECK(star_involution(DualElement::evaluation(c3, q, 0)) == DualElement::evaluation(c3, q, 0));

  FiniteMonoid c2 = make_cyclic(2);
  DualElement half(c2, {Scalar::rational(1, 2), Scalar::rational(1, 2)});
  CHECK(star_involution(half) == half);

  // involutive anti-homomorphism on S_3
  FiniteMonoid s3 = make_symmetric_group(3);
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    DualElement u = random_dual(s3, q, rng);
    DualElement w = random_dual(s3, q, rng);
    CHECK(star_involution(star_involution(u)) == u);
    CHECK(star_involution(convolve(u, w)) == convolve(star_involution(w), star_involution(u)));
  }

  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  DualElement z = DualElement::zero(m2, BaseRing::prime_field(2));
  CHECK_THROWS_AS(star_involution(z), validation_error);
}

TEST_CASE("left-invariance: convolution form is equivalent to translation-pairing form") {
  BaseRing q = BaseRing::rationals();
  for (auto&& m : {make_cyclic(3), make_symmetric_group(3), make_zero_monoid()}) {
    std::size_t n = m.order();
    Rng rng(17);
    for (int t = 0; t < 12; ++t) {
      DualElement w = random_dual(m, q, rng);
      bool conv_invariant = is_left_invariant(w);
      bool pairing_invariant = true;
      for (std::size_t g = 0; g < n && pairing_invariant; ++g)
        for (std::size_t d = 0; d < n && pairing_invariant; ++d) {
          FunctionElement delta = FunctionElement::delta(m, q, d);
          pairing_invariant = pair(w, translate(Side::left, g, delta)) == pair(w, delta);
        }
      CHECK(conv_invariant == pairing_invariant);
    }
    // and the uniform element is genuinely left invariant
    std::vector<Scalar> c(n, Scalar::one(q));
    DualElement uniform(m, std::move(c));
    if (m.is_group()) CHECK(is_left_invariant(uniform));
  }
}

TEST_CASE("monoid mismatch is rejected") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c2 = make_cyclic(2);
  FiniteMonoid c2b = FiniteMonoid::validate({{0, 1}, {1, 0}}, 0);  // equal table: compatible
  FiniteMonoid other = make_zero_monoid();
  DualElement a = DualElement::evaluation(c2, q, 0);
  DualElement b = DualElement::evaluation(c2b, q, 1);
  CHECK_NOTHROW(convolve(a, b));
  DualElement c = DualElement::evaluation(other, q, 0);
  CHECK_THROWS_AS(convolve(a, c), validation_error);
}
