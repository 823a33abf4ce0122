#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reynolds/scalar.hpp"

namespace reynolds {

/// A finite monoid given by its full multiplication table.  Elements are
/// opaque indices 0..n-1; labels are metadata only.  Associativity, the
/// identity law and (when declared) the zero law are checked exhaustively at
/// construction; the inverse table is populated iff every element has a
/// two-sided inverse, i.e. iff the monoid is a group.
class FiniteMonoid {
 public:
  static constexpr std::size_t kDefaultSizeCap = 4096;

  static FiniteMonoid validate(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                               std::optional<std::size_t> zero = std::nullopt,
                               std::vector<std::string> labels = {},
                               std::size_t size_cap = kDefaultSizeCap) {
    std::size_t n = table.size();
    if (n == 0) throw validation_error("monoid: empty table");
    if (n > size_cap)
      throw validation_error("monoid: order " + std::to_string(n) + " exceeds size cap " +
                             std::to_string(size_cap));
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw validation_error("monoid: table is not square at row " + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j)
        if (table[i][j] >= n)
          throw validation_error("monoid: entry out of range at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
    if (identity >= n) throw validation_error("monoid: identity index out of range");
    for (std::size_t i = 0; i < n; ++i)
      if (table[identity][i] != i || table[i][identity] != i)
        throw validation_error("monoid: identity law fails at element " + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            throw validation_error("monoid: associativity fails at (i,j,k)=(" + std::to_string(i) +
                                   "," + std::to_string(j) + "," + std::to_string(k) + ")");
    if (zero) {
      if (*zero >= n) throw validation_error("monoid: zero index out of range");
      for (std::size_t i = 0; i < n; ++i)
        if (table[*zero][i] != *zero || table[i][*zero] != *zero)
          throw validation_error("monoid: zero law fails at element " + std::to_string(i));
    }
    // inverses present iff every element has a two-sided inverse
    std::vector<std::size_t> inv(n, n);
    bool group = true;
    for (std::size_t i = 0; i < n && group; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n; ++j)
        if (table[i][j] == identity && table[j][i] == identity) {
          inv[i] = j;
          found = true;
          break;
        }
      group = found;
    }
    if (!labels.empty() && labels.size() != n)
      throw validation_error("monoid: label count does not match order");
    FiniteMonoid m;
    m.table_ = std::move(table);
    m.identity_ = identity;
    m.zero_ = zero;
    if (group) m.inverses_ = std::move(inv);
    m.labels_ = std::move(labels);
    return m;
  }

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t identity() const { return identity_; }
  std::optional<std::size_t> zero() const { return zero_; }
  bool is_group() const { return inverses_.has_value(); }
  std::size_t inverse(std::size_t i) const {
    if (!inverses_) throw validation_error("monoid: not a group, no inverses");
    return (*inverses_)[i];
  }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::string label(std::size_t i) const {
    return labels_.empty() ? "g" + std::to_string(i) : labels_[i];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const FiniteMonoid& o) const {
    return table_ == o.table_ && identity_ == o.identity_ && zero_ == o.zero_;
  }

 private:
  FiniteMonoid() = default;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::optional<std::size_t> zero_;
  std::optional<std::vector<std::size_t>> inverses_;
  std::vector<std::string> labels_;
};

/// Cyclic group C_n with table[i][j] = (i+j) mod n.
inline FiniteMonoid make_cyclic(std::size_t n) {
  if (n < 1) throw validation_error("make_cyclic: n must be >= 1");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i == 0 ? "e" : "g^" + std::to_string(i);
  return FiniteMonoid::validate(std::move(t), 0, std::nullopt, std::move(labels));
}

/// The multiplicative monoid of all d x d matrices over F_q (q prime),
/// order q^(d^2).  Element index encodes the matrix entries as base-q digits
/// in row-major order, so index 0 is the zero matrix.
inline FiniteMonoid make_full_matrix_monoid(std::size_t d, std::uint32_t q,
                                            std::size_t size_cap = FiniteMonoid::kDefaultSizeCap) {
  if (d < 1) throw validation_error("make_full_matrix_monoid: d must be >= 1");
  if (!is_prime_u32(q)) throw validation_error("make_full_matrix_monoid: q must be prime");
  std::size_t cells = d * d;
  std::size_t n = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (n > size_cap / q + 1) throw validation_error("make_full_matrix_monoid: order exceeds size cap");
    n *= q;
  }
  if (n > size_cap) throw validation_error("make_full_matrix_monoid: order exceeds size cap");

  auto decode = [&](std::size_t idx) {
    std::vector<std::uint32_t> m(cells);
    for (std::size_t c = cells; c-- > 0;) {
      m[c] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
    return m;
  };
  auto encode = [&](const std::vector<std::uint32_t>& m) {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < cells; ++c) idx = idx * q + m[c];
    return idx;
  };

  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::uint32_t>> mats(n);
  for (std::size_t i = 0; i < n; ++i) mats[i] = decode(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> prod(cells, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
          std::uint64_t a = mats[i][r * d + k];
          if (a == 0) continue;
          for (std::size_t c = 0; c < d; ++c)
            prod[r * d + c] =
                static_cast<std::uint32_t>((prod[r * d + c] + a * mats[j][k * d + c]) % q);
        }
      t[i][j] = encode(prod);
    }

  std::vector<std::uint32_t> id(cells, 0);
  for (std::size_t r = 0; r < d; ++r) id[r * d + r] = 1;
  std::size_t e = encode(id);

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "[";
    for (std::size_t r = 0; r < d; ++r) {
      s += r == 0 ? "[" : ",[";
      for (std::size_t c = 0; c < d; ++c) s += (c == 0 ? "" : ",") + std::to_string(mats[i][r * d + c]);
      s += "]";
    }
    labels[i] = s + "]";
  }
  return FiniteMonoid::validate(std::move(t), e, /*zero=*/0, std::move(labels), size_cap);
}

/// Multiplicative character chi: G -> k, stored as its value vector (an
/// element of the function algebra A).
class Character {
 public:
  static Character validate(const FiniteMonoid& m, std::vector<Scalar> values) {
    std::size_t n = m.order();
    if (values.size() != n) throw validation_error("character: value count != monoid order");
    const BaseRing& k = values[0].ring();
    for (const auto& v : values) require_same_ring(k, v.ring(), "character");
    if (!values[m.identity()].is_one())
      throw validation_error("character: chi(e) != 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (values[m.mul(i, j)] != values[i] * values[j])
          throw validation_error("character: multiplicativity fails at (i,j)=(" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
    Character c;
    c.values_ = std::move(values);
    return c;
  }

  static Character trivial(const FiniteMonoid& m, const BaseRing& k) {
    return validate(m, std::vector<Scalar>(m.order(), Scalar::one(k)));
  }

  std::size_t size() const { return values_.size(); }
  const Scalar& value(std::size_t i) const { return values_[i]; }
  const std::vector<Scalar>& values() const { return values_; }
  const BaseRing& ring() const { return values_[0].ring(); }

  bool is_trivial() const {
    for (const auto& v : values_)
      if (!v.is_one()) return false;
    return true;
  }

  bool operator==(const Character& o) const { return values_ == o.values_; }

 private:
  Character() = default;
  std::vector<Scalar> values_;
};

}  // namespace reynolds
