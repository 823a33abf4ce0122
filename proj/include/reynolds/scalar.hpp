#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace reynolds {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Two values from different base rings met in one operation.
struct ring_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Shape disagreement between matrices/vectors.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An axiom check failed at construction; what() names the axiom and a witness.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A statement that is a theorem failed to verify numerically.  Always an
/// upstream bug, never a user error; the CLI maps this to exit code 3.
struct theorem_violation : std::logic_error {
  using std::logic_error::logic_error;
};

enum class RingKind { rationals, prime_field, integers };

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// One of Q, F_p (p prime, p < 2^31) or Z.  Cheap to copy; every Scalar
/// carries its ring so mixed-ring arithmetic can be rejected.
class BaseRing {
 public:
  static BaseRing rationals() { return BaseRing(RingKind::rationals, 0); }
  static BaseRing integers() { return BaseRing(RingKind::integers, 0); }
  static BaseRing prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
      throw validation_error("prime_field: p must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
      throw validation_error("prime_field: " + std::to_string(p) + " is not prime");
    return BaseRing(RingKind::prime_field, p);
  }

  RingKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == RingKind::prime_field ? p_ : 0; }
  bool is_field() const { return kind_ != RingKind::integers; }

  bool operator==(const BaseRing& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const BaseRing& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind_) {
      case RingKind::rationals: return "Q";
      case RingKind::integers: return "Z";
      case RingKind::prime_field: return "F" + std::to_string(p_);
    }
    return "?";
  }

 private:
  BaseRing(RingKind k, std::uint32_t p) : kind_(k), p_(p) {}
  RingKind kind_;
  std::uint32_t p_;
};

inline void require_same_ring(const BaseRing& a, const BaseRing& b, const char* where) {
  if (a != b)
    throw ring_mismatch_error(std::string(where) + ": mixed base rings " + a.name() + " vs " + b.name());
}

/// Exact element of a BaseRing.  Rationals are kept in lowest terms with
/// positive denominator (cpp_rational maintains this), prime-field values as
/// the canonical representative 0..p-1, integers as arbitrary-precision ints.
class Scalar {
 public:
  Scalar() : ring_(BaseRing::rationals()), v_(BigRat(0)) {}

  static Scalar zero(const BaseRing& r) { return from_int(r, 0); }
  static Scalar one(const BaseRing& r) { return from_int(r, 1); }

  static Scalar from_int(const BaseRing& r, long long n) { return from_bigint(r, BigInt(n)); }

  static Scalar from_bigint(const BaseRing& r, const BigInt& n) {
    switch (r.kind()) {
      case RingKind::rationals: return Scalar(r, BigRat(n));
      case RingKind::integers: return Scalar(r, n);
      case RingKind::prime_field: {
        std::int64_t p = r.characteristic();
        BigInt m = n % p;
        if (m < 0) m += p;
        return Scalar(r, static_cast<std::int64_t>(m));
      }
    }
    throw std::logic_error("unreachable");
  }

  static Scalar rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw validation_error("rational: zero denominator");
    // cpp_rational reduces by gcd but requires a positive denominator
    if (den < 0) return Scalar(BaseRing::rationals(), BigRat(-num, -den));
    return Scalar(BaseRing::rationals(), BigRat(num, den));
  }

  const BaseRing& ring() const { return ring_; }

  bool is_zero() const {
    switch (ring_.kind()) {
      case RingKind::rationals: return rat() == 0;
      case RingKind::integers: return intval() == 0;
      case RingKind::prime_field: return fp() == 0;
    }
    return false;
  }
  bool is_one() const { return *this == Scalar::one(ring_); }

  bool operator==(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar==");
    return v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar+");
    switch (ring_.kind()) {
      case RingKind::rationals: return Scalar(ring_, BigRat(rat() + o.rat()));
      case RingKind::integers: return Scalar(ring_, BigInt(intval() + o.intval()));
      case RingKind::prime_field: return Scalar(ring_, modp(fp() + o.fp()));
    }
    throw std::logic_error("unreachable");
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator-() const {
    switch (ring_.kind()) {
      case RingKind::rationals: return Scalar(ring_, BigRat(-rat()));
      case RingKind::integers: return Scalar(ring_, BigInt(-intval()));
      case RingKind::prime_field: return Scalar(ring_, modp(-fp()));
    }
    throw std::logic_error("unreachable");
  }
  Scalar operator*(const Scalar& o) const {
    require_same_ring(ring_, o.ring_, "Scalar*");
    switch (ring_.kind()) {
      case RingKind::rationals: return Scalar(ring_, BigRat(rat() * o.rat()));
      case RingKind::integers: return Scalar(ring_, BigInt(intval() * o.intval()));
      case RingKind::prime_field: return Scalar(ring_, modp(fp() * o.fp()));
    }
    throw std::logic_error("unreachable");
  }

  /// Multiplicative inverse; fields only.
  Scalar inverse() const {
    if (is_zero()) throw validation_error("Scalar::inverse of zero");
    switch (ring_.kind()) {
      case RingKind::rationals: return Scalar(ring_, BigRat(1 / rat()));
      case RingKind::prime_field: return Scalar(ring_, fp_inverse(fp(), ring_.characteristic()));
      case RingKind::integers: {
        if (intval() == 1 || intval() == -1) return *this;
        throw validation_error("Scalar::inverse: " + to_string() + " is not a unit in Z");
      }
    }
    throw std::logic_error("unreachable");
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool is_unit() const {
    if (is_zero()) return false;
    if (ring_.kind() == RingKind::integers) return intval() == 1 || intval() == -1;
    return true;
  }

  /// Exact text form: "n" or "p/q" for Q, decimal for Z and F_p.
  std::string to_string() const {
    switch (ring_.kind()) {
      case RingKind::rationals: {
        const BigRat& q = rat();
        if (boost::multiprecision::denominator(q) == 1)
          return boost::multiprecision::numerator(q).str();
        return boost::multiprecision::numerator(q).str() + "/" +
               boost::multiprecision::denominator(q).str();
      }
      case RingKind::integers: return intval().str();
      case RingKind::prime_field: return std::to_string(fp());
    }
    return "?";
  }

  /// Parses the text form; accepts any integer (reduced canonically in F_p)
  /// and "a/b" over Q.
  static Scalar parse(const BaseRing& r, const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      if (r.kind() != RingKind::rationals)
        throw validation_error("Scalar::parse: fraction '" + s + "' only valid over Q");
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw validation_error("Scalar::parse: zero denominator in '" + s + "'");
      return rational(num, den);
    }
    return from_bigint(r, BigInt(s));
  }

  // Representation accessors (checked by variant).
  const BigRat& rat() const { return std::get<BigRat>(v_); }
  const BigInt& intval() const { return std::get<BigInt>(v_); }
  std::int64_t fp() const { return std::get<std::int64_t>(v_); }

  /// Numerator/denominator over Q; over Z denominator is 1.
  BigInt numerator() const {
    if (ring_.kind() == RingKind::rationals) return boost::multiprecision::numerator(rat());
    if (ring_.kind() == RingKind::integers) return intval();
    return BigInt(fp());
  }
  BigInt denominator() const {
    if (ring_.kind() == RingKind::rationals) return boost::multiprecision::denominator(rat());
    return BigInt(1);
  }

 private:
  Scalar(const BaseRing& r, BigRat q) : ring_(r), v_(std::move(q)) {}
  Scalar(const BaseRing& r, BigInt n) : ring_(r), v_(std::move(n)) {}
  Scalar(const BaseRing& r, std::int64_t n) : ring_(r), v_(n) {}

  std::int64_t modp(std::int64_t x) const {
    std::int64_t p = ring_.characteristic();
    std::int64_t m = x % p;
    return m < 0 ? m + p : m;
  }

  static std::int64_t fp_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw validation_error("fp_inverse: not invertible");
    return t < 0 ? t + p : t;
  }

  BaseRing ring_;
  std::variant<BigRat, BigInt, std::int64_t> v_;
};

}  // namespace reynolds
