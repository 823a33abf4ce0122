#include <catch_amalgamated.hpp>

#include "reynolds/scalar.hpp"

using namespace reynolds;

TEST_CASE("base ring construction and primality") {
  CHECK(BaseRing::rationals().is_field());
  CHECK(BaseRing::integers().kind() == RingKind::integers);
  CHECK_FALSE(BaseRing::integers().is_field());
  CHECK(BaseRing::prime_field(7).characteristic() == 7);
  CHECK_THROWS_AS(BaseRing::prime_field(1), validation_error);
  CHECK_THROWS_AS(BaseRing::prime_field(15), validation_error);
  CHECK(BaseRing::prime_field(2147483647).characteristic() == 2147483647);  // 2^31 - 1
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Scalar a = Scalar::rational(BigInt(4), BigInt(-6));
  CHECK(a.to_string() == "-2/3");
  CHECK(a.numerator() == -2);
  CHECK(a.denominator() == 3);
  Scalar b = Scalar::rational(BigInt(1), BigInt(3));
  CHECK((a + b).to_string() == "-1/3");
  CHECK((a * b).to_string() == "-2/9");
  CHECK((a - a).is_zero());
  CHECK(a.inverse().to_string() == "-3/2");
}

TEST_CASE("prime field canonical representatives") {
  BaseRing f7 = BaseRing::prime_field(7);
  Scalar x = Scalar::from_int(f7, -1);
  CHECK(x.to_string() == "6");
  CHECK((x * x).to_string() == "1");
  Scalar five = Scalar::from_int(f7, 5);
  CHECK(five.inverse().to_string() == "3");
  CHECK((five * five.inverse()).is_one());
  CHECK(Scalar::from_int(f7, 14).is_zero());
}

TEST_CASE("integers are exact and only units invert") {
  BaseRing z = BaseRing::integers();
  Scalar big = Scalar::parse(z, "123456789012345678901234567890");
  CHECK((big * big).to_string() == "15241578753238836750495351562536198787501905199875019052100");
  CHECK(Scalar::from_int(z, -1).inverse() == Scalar::from_int(z, -1));
  CHECK_THROWS_AS(Scalar::from_int(z, 2).inverse(), validation_error);
  CHECK(Scalar::from_int(z, 1).is_unit());
  CHECK_FALSE(Scalar::from_int(z, 2).is_unit());
}

TEST_CASE("text encoding round trips") {
  BaseRing q = BaseRing::rationals();
  for (const char* s : {"3", "-7", "22/7", "-5/9", "0"}) {
    Scalar v = Scalar::parse(q, s);
    CHECK(Scalar::parse(q, v.to_string()) == v);
  }
  BaseRing f5 = BaseRing::prime_field(5);
  CHECK(Scalar::parse(f5, "-1").to_string() == "4");
  CHECK_THROWS_AS(Scalar::parse(f5, "1/2"), validation_error);
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), validation_error);
}

TEST_CASE("mixed base rings are rejected") {
  Scalar a = Scalar::from_int(BaseRing::rationals(), 1);
  Scalar b = Scalar::from_int(BaseRing::prime_field(3), 1);
  CHECK_THROWS_AS(a + b, ring_mismatch_error);
  CHECK_THROWS_AS(a * b, ring_mismatch_error);
  CHECK_THROWS_AS(a == b, ring_mismatch_error);
}
