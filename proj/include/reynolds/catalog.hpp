#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "reynolds/bialgebra.hpp"
#include "reynolds/repr.hpp"

namespace reynolds {

/// Symmetric group S_n on {0..n-1}, permutations in lexicographic order
/// (index 0 is the identity), multiplication (s t)(x) = s(t(x)).
inline FiniteMonoid make_symmetric_group(std::size_t n,
                                         std::size_t size_cap = FiniteMonoid::kDefaultSizeCap) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t order = perms.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < order; ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      std::vector<std::size_t> comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index[comp];
    }
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::string s = "(";
    for (std::size_t x = 0; x < n; ++x) s += (x ? " " : "") + std::to_string(perms[i][x]);
    labels[i] = s + ")";
  }
  return FiniteMonoid::validate(std::move(table), 0, std::nullopt, std::move(labels), size_cap);
}

/// The two-element monoid {e, z} with absorbing z.
inline FiniteMonoid make_zero_monoid() {
  return FiniteMonoid::validate({{0, 1}, {1, 1}}, 0, 1, {"e", "z"});
}

inline std::vector<std::size_t> permutation_of_index(std::size_t n, std::size_t idx) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t k = 0; k < idx; ++k) std::next_permutation(p.begin(), p.end());
  return p;
}

/// Sign character of S_n (parity of the permutation at each index).
inline Character sign_character_symmetric(const FiniteMonoid& sn, std::size_t n, const BaseRing& k) {
  std::vector<Scalar> values;
  values.reserve(sn.order());
  for (std::size_t i = 0; i < sn.order(); ++i) {
    std::vector<std::size_t> p = permutation_of_index(n, i);
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (p[a] > p[b]) ++inversions;
    values.push_back(Scalar::from_int(k, inversions % 2 == 0 ? 1 : -1));
  }
  return Character::validate(sn, std::move(values));
}

/// Sign character of C_n (n even): chi(g^k) = (-1)^k.
inline Character sign_character_cyclic(const FiniteMonoid& cn, const BaseRing& k) {
  std::size_t n = cn.order();
  if (n % 2 != 0) throw validation_error("sign_character_cyclic: order must be even");
  std::vector<Scalar> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(Scalar::from_int(k, i % 2 == 0 ? 1 : -1));
  return Character::validate(cn, std::move(values));
}

/// chi(g^k) = a^k on C_n; a must satisfy a^n = 1.
inline Character power_character_cyclic(const FiniteMonoid& cn, const Scalar& a) {
  std::vector<Scalar> values;
  values.reserve(cn.order());
  Scalar v = Scalar::one(a.ring());
  for (std::size_t i = 0; i < cn.order(); ++i) {
    values.push_back(v);
    v = v * a;
  }
  return Character::validate(cn, std::move(values));
}

/// Determinant character on the full matrix monoid M_d(F_q) over F_q.
inline Character det_character_matrix_monoid(const FiniteMonoid& m, std::size_t d, std::uint32_t q) {
  BaseRing k = BaseRing::prime_field(q);
  std::size_t cells = d * d;
  std::vector<Scalar> values;
  values.reserve(m.order());
  for (std::size_t idx = 0; idx < m.order(); ++idx) {
    // decode base-q digits, row-major
    std::vector<std::int64_t> e(cells);
    std::size_t t = idx;
    for (std::size_t c = cells; c-- > 0;) {
      e[c] = static_cast<std::int64_t>(t % q);
      t /= q;
    }
    ExactMatrix mat(d, d, k);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) mat.set(r, c, Scalar::from_int(k, e[r * d + c]));
    // cofactor expansion is fine at d <= 3
    std::function<Scalar(const ExactMatrix&)> det = [&](const ExactMatrix& a) -> Scalar {
      std::size_t s = a.rows();
      if (s == 1) return a.at(0, 0);
      Scalar acc = Scalar::zero(k);
      for (std::size_t c = 0; c < s; ++c) {
        ExactMatrix sub(s - 1, s - 1, k);
        for (std::size_t i = 1; i < s; ++i) {
          std::size_t jj = 0;
          for (std::size_t j = 0; j < s; ++j) {
            if (j == c) continue;
            sub.set(i - 1, jj++, a.at(i, j));
          }
        }
        Scalar term = a.at(0, c) * det(sub);
        acc = c % 2 == 0 ? acc + term : acc - term;
      }
      return acc;
    };
    values.push_back(det(mat));
  }
  return Character::validate(m, std::move(values));
}

/// Natural d-dimensional representation of M_d(F_q): each element acts as its
/// own matrix.
inline Representation natural_matrix_representation(const FiniteMonoid& m, std::size_t d,
                                                    std::uint32_t q) {
  BaseRing k = BaseRing::prime_field(q);
  std::size_t cells = d * d;
  std::vector<ExactMatrix> mats;
  mats.reserve(m.order());
  for (std::size_t idx = 0; idx < m.order(); ++idx) {
    std::size_t t = idx;
    std::vector<std::int64_t> e(cells);
    for (std::size_t c = cells; c-- > 0;) {
      e[c] = static_cast<std::int64_t>(t % q);
      t /= q;
    }
    ExactMatrix mat(d, d, k);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) mat.set(r, c, Scalar::from_int(k, e[r * d + c]));
    mats.push_back(std::move(mat));
  }
  return Representation::validate(m, std::move(mats));
}

/// Cyclic shift representation of C_n on d coordinates, d | n.
inline Representation shift_representation_cyclic(const FiniteMonoid& cn, const BaseRing& k,
                                                  std::size_t d) {
  std::size_t n = cn.order();
  if (d == 0 || n % d != 0) throw validation_error("shift_representation_cyclic: d must divide n");
  std::vector<ExactMatrix> mats;
  mats.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    ExactMatrix m(d, d, k);
    for (std::size_t c = 0; c < d; ++c) m.set((c + g) % d, c, Scalar::one(k));
    mats.push_back(std::move(m));
  }
  return Representation::validate(cn, std::move(mats));
}

/// Rotation representation of C_4: the generator acts by [[0,-1],[1,0]].
inline Representation rotation_representation_c4(const FiniteMonoid& c4, const BaseRing& k) {
  if (c4.order() != 4) throw validation_error("rotation_representation_c4: order must be 4");
  ExactMatrix r = ExactMatrix::from_ints(k, {{0, -1}, {1, 0}});
  std::vector<ExactMatrix> mats{ExactMatrix::identity(2, k), r, r * r, r * r * r};
  return Representation::validate(c4, std::move(mats));
}

/// Permutation representation of S_n on n coordinates.
inline Representation permutation_representation_symmetric(const FiniteMonoid& sn, std::size_t n,
                                                           const BaseRing& k) {
  std::vector<ExactMatrix> mats;
  mats.reserve(sn.order());
  for (std::size_t i = 0; i < sn.order(); ++i) {
    std::vector<std::size_t> p = permutation_of_index(n, i);
    ExactMatrix m(n, n, k);
    for (std::size_t c = 0; c < n; ++c) m.set(p[c], c, Scalar::one(k));
    mats.push_back(std::move(m));
  }
  return Representation::validate(sn, std::move(mats));
}

/// Small representation blocks used to assemble random representations.
/// Recognizes the catalog monoids by their tables; any other monoid falls
/// back to trivial (+ regular, when small).
inline std::vector<Representation> stock_blocks(const FiniteMonoid& m, const BaseRing& k) {
  std::vector<Representation> blocks;
  blocks.push_back(trivial_representation(m, k, 1));
  std::size_t n = m.order();

  bool cyclic = true;
  for (std::size_t i = 0; i < n && cyclic; ++i)
    for (std::size_t j = 0; j < n && cyclic; ++j)
      if (m.mul(i, j) != (i + j) % n) cyclic = false;
  if (cyclic) {
    for (std::size_t d = 2; d <= n && d <= 4; ++d)
      if (n % d == 0) blocks.push_back(shift_representation_cyclic(m, k, d));
    if (n % 2 == 0)
      blocks.push_back(character_representation(m, sign_character_cyclic(m, k)));
    if (n == 4) blocks.push_back(rotation_representation_c4(m, k));
    return blocks;
  }
  if (n == 6 && m.is_group()) {  // S_3 from the catalog
    FiniteMonoid s3 = make_symmetric_group(3);
    if (s3.table() == m.table()) {
      blocks.push_back(character_representation(m, sign_character_symmetric(m, 3, k)));
      blocks.push_back(permutation_representation_symmetric(m, 3, k));
      return blocks;
    }
  }
  if (n == 16 && m.zero() && k.characteristic() == 2) {  // M_2(F_2)
    FiniteMonoid m2 = make_full_matrix_monoid(2, 2);
    if (m2.table() == m.table()) {
      blocks.push_back(character_representation(m, det_character_matrix_monoid(m, 2, 2)));
      blocks.push_back(natural_matrix_representation(m, 2, 2));
      return blocks;
    }
  }
  if (n <= 4) blocks.push_back(regular_representation(m, k));
  return blocks;
}

/// A random valid representation: a direct sum of stock blocks conjugated by
/// a random unimodular change of basis.
inline Representation random_representation(const FiniteMonoid& m, const BaseRing& k,
                                            std::size_t max_dim, Rng& rng) {
  std::vector<Representation> blocks = stock_blocks(m, k);
  Representation v = blocks[rng.index(blocks.size())];
  for (int extra = 0; extra < 2; ++extra) {
    const Representation& b = blocks[rng.index(blocks.size())];
    if (v.dim() + b.dim() > max_dim) break;
    v = direct_sum(v, b);
  }
  if (v.dim() > max_dim) v = trivial_representation(m, k, 1);
  auto [s, s_inv] = random_basis_change(v.dim(), k, rng);
  return conjugate(v, s, s_inv);
}

inline DualElement random_dual(const FiniteMonoid& m, const BaseRing& k, Rng& rng,
                               std::int64_t bound = 5) {
  std::vector<Scalar> c;
  c.reserve(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) c.push_back(rng.scalar(k, bound));
  return DualElement(m, std::move(c));
}

inline FunctionElement random_function(const FiniteMonoid& m, const BaseRing& k, Rng& rng,
                                       std::int64_t bound = 5) {
  std::vector<Scalar> v;
  v.reserve(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) v.push_back(rng.scalar(k, bound));
  return FunctionElement(m, std::move(v));
}

}  // namespace reynolds
