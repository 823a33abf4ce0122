#include <catch_amalgamated.hpp>

#include "reynolds/catalog.hpp"
#include "reynolds/monoid.hpp"

using namespace reynolds;

TEST_CASE("validate_monoid: trivial and C_2") {
  FiniteMonoid t = FiniteMonoid::validate({{0}}, 0);
  CHECK(t.order() == 1);
  CHECK(t.is_group());

  FiniteMonoid c2 = FiniteMonoid::validate({{0, 1}, {1, 0}}, 0);
  CHECK(c2.is_group());
  CHECK(c2.inverse(0) == 0);
  CHECK(c2.inverse(1) == 1);
}

TEST_CASE("validate_monoid: absorbing element, not a group") {
  FiniteMonoid m = FiniteMonoid::validate({{0, 1}, {1, 1}}, 0, 1);
  CHECK_FALSE(m.is_group());
  CHECK(m.zero() == 1);
}

TEST_CASE("validate_monoid: diagnostics name the violated axiom") {
  CHECK_THROWS_WITH(FiniteMonoid::validate({{0, 0}, {1, 1}}, 0),
                    Catch::Matchers::ContainsSubstring("identity law"));
  CHECK_THROWS_WITH(FiniteMonoid::validate({{0, 1}, {1, 2}}, 0),
                    Catch::Matchers::ContainsSubstring("out of range"));
}

TEST_CASE("C_3 is valid; tampered C_3 is flagged with a witness") {
  std::vector<std::vector<std::size_t>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK_NOTHROW(FiniteMonoid::validate(t, 0));
  t[1][1] = 0;  // now g*g = e, breaking associativity
  CHECK_THROWS_WITH(FiniteMonoid::validate(t, 0),
                    Catch::Matchers::ContainsSubstring("associativity"));
}

TEST_CASE("zero law is checked when declared") {
  CHECK_THROWS_WITH(FiniteMonoid::validate({{0, 1}, {1, 0}}, 0, 1),
                    Catch::Matchers::ContainsSubstring("zero law"));
}

TEST_CASE("make_cyclic") {
  CHECK(make_cyclic(1).order() == 1);
  FiniteMonoid c3 = make_cyclic(3);
  CHECK(c3.table()[1] == std::vector<std::size_t>{1, 2, 0});
  FiniteMonoid c4 = make_cyclic(4);
  CHECK(c4.mul(2, 2) == 0);  // element 2 has order 2
  CHECK(c4.is_group());
}

TEST_CASE("idempotent validation: re-validating a built table is the identity") {
  for (std::size_t n : {1u, 2u, 5u}) {
    FiniteMonoid m = make_cyclic(n);
    FiniteMonoid again = FiniteMonoid::validate(m.table(), m.identity(), m.zero(), m.labels());
    CHECK(again == m);
    CHECK(again.is_group() == m.is_group());
  }
  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  FiniteMonoid again = FiniteMonoid::validate(m2.table(), m2.identity(), m2.zero(), m2.labels());
  CHECK(again == m2);
}

TEST_CASE("full matrix monoids") {
  SECTION("d=1, q=2: multiplicative monoid {0,1}") {
    FiniteMonoid m = make_full_matrix_monoid(1, 2);
    CHECK(m.order() == 2);
    CHECK(m.zero() == 0);
    CHECK(m.identity() == 1);
    CHECK_FALSE(m.is_group());
  }
  SECTION("d=1, q=3: units form C_2") {
    FiniteMonoid m = make_full_matrix_monoid(1, 3);
    CHECK(m.order() == 3);
    // units are {1, 2}; 2*2 = 4 = 1 mod 3
    CHECK(m.mul(2, 2) == 1);
    CHECK(m.mul(2, 1) == 2);
  }
  SECTION("d=2, q=2: order 16 with zero, not a group, |GL_2(F_2)| = 6") {
    FiniteMonoid m = make_full_matrix_monoid(2, 2);
    CHECK(m.order() == 16);
    REQUIRE(m.zero().has_value());
    CHECK(*m.zero() == 0);
    CHECK_FALSE(m.is_group());
    // count invertible elements
    std::size_t units = 0;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        if (m.mul(i, j) == m.identity() && m.mul(j, i) == m.identity()) {
          ++units;
          break;
        }
    CHECK(units == 6);
  }
  SECTION("size cap") {
    CHECK_THROWS_AS(make_full_matrix_monoid(2, 11), validation_error);  // 11^4 > 4096
    CHECK_THROWS_AS(make_full_matrix_monoid(2, 4), validation_error);   // q not prime
  }
}

TEST_CASE("characters: trivial, sign, determinant") {
  BaseRing q = BaseRing::rationals();
  FiniteMonoid c2 = make_cyclic(2);
  CHECK(Character::trivial(c2, q).is_trivial());

  Character sign = Character::validate(
      c2, {Scalar::from_int(q, 1), Scalar::from_int(q, -1)});
  CHECK(sign.value(1).to_string() == "-1");

  // chi(e) must be 1
  CHECK_THROWS_WITH(Character::validate(c2, {Scalar::from_int(q, -1), Scalar::from_int(q, 1)}),
                    Catch::Matchers::ContainsSubstring("chi(e)"));
  // multiplicativity witness
  FiniteMonoid c3 = make_cyclic(3);
  CHECK_THROWS_WITH(
      Character::validate(c3, {Scalar::from_int(q, 1), Scalar::from_int(q, -1), Scalar::from_int(q, 1)}),
      Catch::Matchers::ContainsSubstring("multiplicativity"));

  FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
  Character det = det_character_matrix_monoid(m2, 2, 2);
  CHECK(det.value(0).is_zero());          // det(0) = 0
  CHECK(det.value(m2.identity()).is_one());
}

TEST_CASE("characters on groups take invertible values") {
  BaseRing f7 = BaseRing::prime_field(7);
  FiniteMonoid c3 = make_cyclic(3);
  Character chi = power_character_cyclic(c3, Scalar::from_int(f7, 2));  // 2^3 = 8 = 1 mod 7
  for (std::size_t g = 0; g < 3; ++g) {
    CHECK((chi.value(g) * chi.value(c3.inverse(g))).is_one());
  }
  FiniteMonoid s3 = make_symmetric_group(3);
  Character sgn = sign_character_symmetric(s3, 3, BaseRing::rationals());
  for (std::size_t g = 0; g < 6; ++g)
    CHECK((sgn.value(g) * sgn.value(s3.inverse(g))).is_one());
}

TEST_CASE("symmetric group S_3") {
  FiniteMonoid s3 = make_symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.is_group());
  CHECK(s3.identity() == 0);
  // it is nonabelian
  bool abelian = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) abelian = abelian && s3.mul(i, j) == s3.mul(j, i);
  CHECK_FALSE(abelian);
}
