#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "reynolds/scalar.hpp"

namespace reynolds {

/// Dense row-major matrix of Scalars, all from one BaseRing.  Immutable in
/// spirit: operations return new matrices; in-place mutation is limited to
/// set() during construction-style code.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const BaseRing& ring)
      : rows_(rows), cols_(cols), ring_(ring), entries_(rows * cols, Scalar::zero(ring)) {}

  static ExactMatrix identity(std::size_t n, const BaseRing& ring) {
    ExactMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
    return m;
  }

  static ExactMatrix zero(std::size_t rows, std::size_t cols, const BaseRing& ring) {
    return ExactMatrix(rows, cols, ring);
  }

  /// Build from integer literals, mapped into the ring.
  static ExactMatrix from_ints(const BaseRing& ring,
                               std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(r, c, ring);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw dimension_error("from_ints: ragged rows");
      std::size_t j = 0;
      for (long long v : row) m.set(i, j++, Scalar::from_int(ring, v));
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BaseRing& ring() const { return ring_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) {
    require_same_ring(ring_, v.ring(), "ExactMatrix::set");
    entries_[i * cols_ + j] = v;
  }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && entries_ == o.entries_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    check_same_shape(o, "ExactMatrix+");
    ExactMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
  }

  ExactMatrix operator-(const ExactMatrix& o) const {
    check_same_shape(o, "ExactMatrix-");
    ExactMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_, "ExactMatrix*");
    if (cols_ != o.rows_) throw dimension_error("ExactMatrix*: inner dimension mismatch");
    ExactMatrix r(rows_, o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.entries_[i * o.cols_ + j] = r.entries_[i * o.cols_ + j] + aik * o.at(k, j);
      }
    return r;
  }

  ExactMatrix scaled(const Scalar& c) const {
    require_same_ring(ring_, c.ring(), "ExactMatrix::scaled");
    ExactMatrix r(rows_, cols_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
    return r;
  }

  ExactMatrix transpose() const {
    ExactMatrix r(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw dimension_error("trace: not square");
    Scalar t = Scalar::zero(ring_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
  }

  ExactMatrix column(std::size_t j) const {
    ExactMatrix c(rows_, 1, ring_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, 0, at(i, j));
    return c;
  }

  ExactMatrix row(std::size_t i) const {
    ExactMatrix r(1, cols_, ring_);
    for (std::size_t j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
    return r;
  }

  /// Horizontal concatenation [this | o].
  ExactMatrix hstack(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_, "hstack");
    if (rows_ != o.rows_) throw dimension_error("hstack: row count mismatch");
    ExactMatrix r(rows_, cols_ + o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
      for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
  }

  /// Vertical concatenation [this; o].
  ExactMatrix vstack(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_, "vstack");
    if (cols_ != o.cols_) throw dimension_error("vstack: column count mismatch");
    ExactMatrix r(rows_ + o.rows_, cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
  }

  /// Kronecker product (row-major block layout).
  ExactMatrix kron(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_, "kron");
    ExactMatrix r(rows_ * o.rows_, cols_ * o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& a = at(i, j);
        if (a.is_zero()) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l)
            r.set(i * o.rows_ + k, j * o.cols_ + l, a * o.at(k, l));
      }
    return r;
  }

  /// Row-major flattening into a column vector of length rows*cols.
  ExactMatrix vec() const {
    ExactMatrix v(rows_ * cols_, 1, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) v.set(i * cols_ + j, 0, at(i, j));
    return v;
  }

  /// Inverse of vec(): reshape a column vector into rows x cols.
  static ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw dimension_error("unvec: bad shape");
    ExactMatrix m(rows, cols, v.ring());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v.at(i * cols + j, 0));
    return m;
  }

 private:
  void check_same_shape(const ExactMatrix& o, const char* where) const {
    require_same_ring(ring_, o.ring_, where);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error(std::string(where) + ": shape mismatch");
  }

  std::size_t rows_, cols_;
  BaseRing ring_;
  std::vector<Scalar> entries_;
};

}  // namespace reynolds
