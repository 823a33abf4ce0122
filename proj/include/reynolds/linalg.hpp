#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/matrix.hpp"

namespace reynolds {

namespace detail {

using Grid = std::vector<std::vector<BigInt>>;

/// Clears denominators row by row (solution set of a linear system is
/// unchanged by row scaling).
inline Grid to_integer_grid(const ExactMatrix& a) {
  Grid g(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt d = a.at(i, j).denominator();
      l = boost::multiprecision::lcm(l, d);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      g[i][j] = s.numerator() * (l / s.denominator());
    }
  }
  return g;
}

/// Fraction-free forward elimination (Bareiss).  Returns pivot columns; the
/// grid is left in row echelon form with exact integer entries.
inline std::vector<std::size_t> bareiss_forward(Grid& g) {
  std::size_t m = g.size();
  std::size_t n = m == 0 ? 0 : g[0].size();
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // deterministic pivot: first nonzero in column order
    std::size_t p = r;
    while (p < m && g[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(g[r], g[p]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        g[i][j] = (g[r][c] * g[i][j] - g[i][c] * g[r][j]) / prev;
      g[i][c] = 0;
    }
    prev = g[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank;
};

/// Reduced row echelon form over a field.  Over Q the forward pass is
/// fraction-free (Bareiss) to control coefficient blow-up; over F_p plain
/// Gauss-Jordan.  Pivoting is deterministic (first nonzero row per column).
inline RrefResult rref(const ExactMatrix& a) {
  const BaseRing& k = a.ring();
  if (!k.is_field()) throw validation_error("rref: requires a field");
  std::size_t m = a.rows(), n = a.cols();

  if (k.kind() == RingKind::rationals) {
    detail::Grid g = detail::to_integer_grid(a);
    std::vector<std::size_t> pivots = detail::bareiss_forward(g);
    ExactMatrix r(m, n, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g[i][j] != 0) r.set(i, j, Scalar::rational(g[i][j], 1));
    // normalize pivots to 1 and eliminate above
    for (std::size_t pi = pivots.size(); pi-- > 0;) {
      std::size_t c = pivots[pi];
      Scalar inv = r.at(pi, c).inverse();
      for (std::size_t j = c; j < n; ++j) r.set(pi, j, r.at(pi, j) * inv);
      for (std::size_t i = 0; i < pi; ++i) {
        Scalar f = r.at(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < n; ++j) r.set(i, j, r.at(i, j) - f * r.at(pi, j));
      }
    }
    return RrefResult{std::move(r), pivots, pivots.size()};
  }

  // prime field: Gauss-Jordan
  ExactMatrix r = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && r.at(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = r.at(row, j);
        r.set(row, j, r.at(p, j));
        r.set(p, j, t);
      }
    Scalar inv = r.at(row, c).inverse();
    for (std::size_t j = 0; j < n; ++j) r.set(row, j, r.at(row, j) * inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      Scalar f = r.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r.set(i, j, r.at(i, j) - f * r.at(row, j));
    }
    pivots.push_back(c);
    ++row;
  }
  return RrefResult{std::move(r), pivots, pivots.size()};
}

struct SmithResult {
  ExactMatrix u, d, v;          // u*a*v = d
  ExactMatrix u_inv, v_inv;     // tracked during reduction
  std::size_t rank;             // number of nonzero diagonal entries
};

/// Smith normal form of an integer matrix: U*A*V = D diagonal with the
/// divisibility chain d_i | d_{i+1}; U and V unimodular.
inline SmithResult smith_normal_form(const ExactMatrix& a) {
  if (a.ring().kind() != RingKind::integers)
    throw validation_error("smith_normal_form: requires integer entries");
  std::size_t m = a.rows(), n = a.cols();
  detail::Grid d(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a.at(i, j).intval();

  detail::Grid u(m, std::vector<BigInt>(m, 0)), uinv(m, std::vector<BigInt>(m, 0));
  detail::Grid v(n, std::vector<BigInt>(n, 0)), vinv(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = uinv[i][i] = 1;
  for (std::size_t j = 0; j < n; ++j) v[j][j] = vinv[j][j] = 1;

  auto row_sub = [&](std::size_t i, std::size_t t, const BigInt& q) {
    // row_i -= q*row_t on D and U; inverse op on U_inv columns
    for (std::size_t j = 0; j < n; ++j) d[i][j] -= q * d[t][j];
    for (std::size_t j = 0; j < m; ++j) u[i][j] -= q * u[t][j];
    for (std::size_t j = 0; j < m; ++j) uinv[j][t] += q * uinv[j][i];
  };
  auto col_sub = [&](std::size_t j, std::size_t t, const BigInt& q) {
    for (std::size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][t];
    for (std::size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][t];
    for (std::size_t i = 0; i < n; ++i) vinv[t][i] += q * vinv[j][i];
  };
  auto row_swap = [&](std::size_t i, std::size_t t) {
    std::swap(d[i], d[t]);
    std::swap(u[i], u[t]);
    for (std::size_t j = 0; j < m; ++j) std::swap(uinv[j][i], uinv[j][t]);
  };
  auto col_swap = [&](std::size_t j, std::size_t t) {
    for (std::size_t i = 0; i < m; ++i) std::swap(d[i][j], d[i][t]);
    for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j], v[i][t]);
    std::swap(vinv[j], vinv[t]);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = -d[i][j];
    for (std::size_t j = 0; j < m; ++j) u[i][j] = -u[i][j];
    for (std::size_t j = 0; j < m; ++j) uinv[j][i] = -uinv[j][i];
  };

  std::size_t k = std::min(m, n);
  std::size_t t = 0;
  while (t < k) {
    // find first nonzero entry of the trailing submatrix, column-major scan
    bool found = false;
    for (std::size_t j = t; j < n && !found; ++j)
      for (std::size_t i = t; i < m && !found; ++i)
        if (d[i][j] != 0) {
          if (i != t) row_swap(i, t);
          if (j != t) col_swap(j, t);
          found = true;
        }
    if (!found) break;

    // gcd elimination until pivot divides and clears its row and column
    bool stable = false;
    while (!stable) {
      stable = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q = d[i][t] / d[t][t];
        row_sub(i, t, q);
        if (d[i][t] != 0) {  // remainder becomes the smaller pivot
          row_swap(i, t);
          stable = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q = d[t][j] / d[t][t];
        col_sub(j, t, q);
        if (d[t][j] != 0) {
          col_swap(j, t);
          stable = false;
        }
      }
    }
    ++t;
  }
  std::size_t rank = t;

  // enforce the divisibility chain d_i | d_{i+1}
  bool chain = false;
  while (!chain) {
    chain = true;
    for (std::size_t i = 0; i + 1 < rank; ++i) {
      if (d[i + 1][i + 1] % d[i][i] != 0) {
        chain = false;
        // fold d_{i+1} into position (i+1, i) and redo the 2x2 block
        col_sub(i, i + 1, BigInt(-1));  // col_i += col_{i+1}
        bool stable = false;
        while (!stable) {
          stable = true;
          if (d[i + 1][i] != 0) {
            BigInt q = d[i + 1][i] / d[i][i];
            row_sub(i + 1, i, q);
            if (d[i + 1][i] != 0) {
              row_swap(i + 1, i);
              stable = false;
            }
          }
          if (d[i][i + 1] != 0) {
            BigInt q = d[i][i + 1] / d[i][i];
            col_sub(i + 1, i, q);
            if (d[i][i + 1] != 0) {
              col_swap(i + 1, i);
              stable = false;
            }
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < rank; ++i)
    if (d[i][i] < 0) row_negate(i);

  BaseRing z = BaseRing::integers();
  auto pack = [&](const detail::Grid& g, std::size_t r, std::size_t c) {
    ExactMatrix x(r, c, z);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) x.set(i, j, Scalar::from_bigint(z, g[i][j]));
    return x;
  };
  return SmithResult{pack(u, m, m), pack(d, m, n), pack(v, n, n),
                     pack(uinv, m, m), pack(vinv, n, n), rank};
}

/// Determinant of a square integer matrix (fraction-free elimination).
inline BigInt integer_determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw dimension_error("integer_determinant: not square");
  detail::Grid g(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a.at(i, j).intval();
  std::size_t n = g.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && g[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(g[p], g[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        g[i][j] = (g[c][c] * g[i][j] - g[i][c] * g[c][j]) / prev;
      g[i][c] = 0;
    }
    prev = g[c][c];
  }
  return sign > 0 ? g[n - 1][n - 1] : -g[n - 1][n - 1];
}

inline std::size_t rank(const ExactMatrix& a) {
  if (a.ring().is_field()) return rref(a).rank;
  return smith_normal_form(a).rank;
}

/// A linear subspace (over a field) or sublattice (over Z) of k^ambient,
/// stored as independent basis columns.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, ExactMatrix basis_columns)
      : ambient_(ambient_dim), basis_(std::move(basis_columns)) {
    if (basis_.rows() != ambient_) throw dimension_error("Subspace: basis rows != ambient dim");
    if (basis_.cols() > 0 && rank(basis_) != basis_.cols())
      throw validation_error("Subspace: basis vectors are linearly dependent");
  }

  static Subspace zero(std::size_t ambient_dim, const BaseRing& ring) {
    return Subspace(ambient_dim, ExactMatrix(ambient_dim, 0, ring));
  }
  static Subspace full(std::size_t ambient_dim, const BaseRing& ring) {
    return Subspace(ambient_dim, ExactMatrix::identity(ambient_dim, ring));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const ExactMatrix& basis() const { return basis_; }
  const BaseRing& ring() const { return basis_.ring(); }

  bool contains(const ExactMatrix& v) const;
  bool contains(const Subspace& other) const {
    for (std::size_t j = 0; j < other.dim(); ++j)
      if (!contains(other.basis().column(j))) return false;
    return true;
  }
  /// Equality of spans (lattices over Z): mutual containment.
  bool equals(const Subspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && contains(other) && other.contains(*this);
  }

 private:
  std::size_t ambient_;
  ExactMatrix basis_;
};

struct SolveReport {
  bool feasible = false;
  std::optional<ExactMatrix> particular;  // column vector, present iff feasible
  std::optional<Subspace> kernel;         // null space of A (always computed)
  std::string certificate;                // human-readable infeasibility witness
  BigInt obstruction = 0;                 // Z case: the violated invariant factor
};

/// Null space of A: over a field from the RREF free columns, over Z a basis
/// of the integer kernel lattice from Smith normal form.
inline Subspace kernel(const ExactMatrix& a) {
  std::size_t n = a.cols();
  const BaseRing& k = a.ring();
  if (k.is_field()) {
    RrefResult r = rref(a);
    std::vector<std::size_t> free_cols;
    {
      std::size_t pi = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
          ++pi;
        else
          free_cols.push_back(c);
      }
    }
    ExactMatrix basis(n, free_cols.size(), k);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      std::size_t c = free_cols[f];
      basis.set(c, f, Scalar::one(k));
      for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
        basis.set(r.pivot_cols[pi], f, -r.reduced.at(pi, c));
    }
    return Subspace(n, std::move(basis));
  }
  SmithResult s = smith_normal_form(a);
  ExactMatrix basis(n, n - s.rank, k);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.set(i, j - s.rank, s.v.at(i, j));
  return Subspace(n, std::move(basis));
}

/// One particular solution of A x = b plus the kernel, or an infeasibility
/// certificate.  Over Z the solve goes through Smith normal form and the
/// kernel is a lattice basis.
inline SolveReport solve_linear(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "solve_linear");
  if (b.cols() != 1 || b.rows() != a.rows())
    throw dimension_error("solve_linear: b must be a column with rows(A) entries");
  const BaseRing& k = a.ring();
  std::size_t n = a.cols();
  SolveReport rep;

  if (k.is_field()) {
    RrefResult r = rref(a.hstack(b));
    bool feasible = true;
    std::size_t bad_row = 0;
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      if (r.pivot_cols[pi] == n) {
        feasible = false;
        bad_row = pi;
      }
    rep.kernel = kernel(a);
    if (!feasible) {
      rep.feasible = false;
      rep.certificate = "inconsistent row " + std::to_string(bad_row) +
                        " after elimination (0 = nonzero)";
      return rep;
    }
    ExactMatrix x(n, 1, k);
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      x.set(r.pivot_cols[pi], 0, r.reduced.at(pi, n));
    rep.feasible = true;
    rep.particular = std::move(x);
    return rep;
  }

  SmithResult s = smith_normal_form(a);
  ExactMatrix c = s.u * b;
  ExactMatrix y(n, 1, k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt ci = c.at(i, 0).intval();
    if (i < s.rank) {
      BigInt di = s.d.at(i, i).intval();
      if (ci % di != 0) {
        rep.feasible = false;
        rep.obstruction = di;
        rep.certificate = "invariant factor " + di.str() + " does not divide " + ci.str() +
                          " (diagonal position " + std::to_string(i) + ")";
        rep.kernel = kernel(a);
        return rep;
      }
      if (i < n) y.set(i, 0, Scalar::from_bigint(k, ci / di));
    } else if (ci != 0) {
      rep.feasible = false;
      rep.obstruction = 0;
      rep.certificate = "zero row " + std::to_string(i) + " maps to nonzero " + ci.str();
      rep.kernel = kernel(a);
      return rep;
    }
  }
  rep.feasible = true;
  rep.particular = s.v * y;
  rep.kernel = kernel(a);
  return rep;
}

inline bool Subspace::contains(const ExactMatrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw dimension_error("Subspace::contains: bad vector");
  if (dim() == 0) return v.is_zero();
  return solve_linear(basis_, v).feasible;
}

/// Column space of A.  Over a field the basis is canonical (RREF of the row
/// space of A^T); over Z a lattice basis of the image, from Smith form.
inline Subspace image(const ExactMatrix& a) {
  const BaseRing& k = a.ring();
  if (k.is_field()) {
    RrefResult r = rref(a.transpose());
    ExactMatrix basis(a.rows(), r.rank, k);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) basis.set(j, i, r.reduced.at(i, j));
    return Subspace(a.rows(), std::move(basis));
  }
  SmithResult s = smith_normal_form(a);
  // A = U^-1 D V^-1, so im A is spanned by d_i * (column i of U^-1)
  ExactMatrix basis(a.rows(), s.rank, k);
  for (std::size_t i = 0; i < s.rank; ++i) {
    Scalar di = s.d.at(i, i);
    for (std::size_t j = 0; j < a.rows(); ++j) basis.set(j, i, s.u_inv.at(j, i) * di);
  }
  return Subspace(a.rows(), std::move(basis));
}

/// Restrict a subspace to the kernel of M: a basis of {x in S : M x = 0}.
inline Subspace refine_kernel(const Subspace& s, const ExactMatrix& m) {
  if (m.cols() != s.ambient_dim()) throw dimension_error("refine_kernel: shape mismatch");
  if (s.dim() == 0) return s;
  Subspace inner = kernel(m * s.basis());
  return Subspace(s.ambient_dim(), s.basis() * inner.basis());
}

/// Columns extending the subspace basis to a basis of the full ambient space.
/// Over a field: greedily chosen standard basis vectors.  Over Z: requires the
/// lattice to be a direct summand (all invariant factors 1).
inline ExactMatrix complete_basis(const Subspace& s) {
  const BaseRing& k = s.ring();
  std::size_t n = s.ambient_dim();
  if (k.is_field()) {
    ExactMatrix stacked = s.basis().hstack(ExactMatrix::identity(n, k));
    RrefResult r = rref(stacked);
    std::vector<std::size_t> extra;
    for (std::size_t c : r.pivot_cols)
      if (c >= s.dim()) extra.push_back(c - s.dim());
    ExactMatrix out(n, extra.size(), k);
    for (std::size_t j = 0; j < extra.size(); ++j) out.set(extra[j], j, Scalar::one(k));
    return out;
  }
  if (s.dim() == 0) return ExactMatrix::identity(n, k);
  SmithResult sm = smith_normal_form(s.basis());
  for (std::size_t i = 0; i < sm.rank; ++i)
    if (sm.d.at(i, i) != Scalar::one(k))
      throw validation_error("complete_basis: lattice is not a direct summand of Z^n");
  ExactMatrix out(n, n - s.dim(), k);
  for (std::size_t j = s.dim(); j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.set(i, j - s.dim(), sm.u_inv.at(i, j));
  return out;
}

/// Inverse of a square matrix over a field.
inline ExactMatrix field_inverse(const ExactMatrix& a) {
  if (!a.ring().is_field()) throw validation_error("field_inverse: requires a field");
  if (a.rows() != a.cols()) throw dimension_error("field_inverse: not square");
  std::size_t n = a.rows();
  RrefResult r = rref(a.hstack(ExactMatrix::identity(n, a.ring())));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
    throw validation_error("field_inverse: matrix is singular");
  ExactMatrix inv(n, n, a.ring());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.reduced.at(i, n + j));
  return inv;
}

}  // namespace reynolds
