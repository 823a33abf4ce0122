#pragma once

#include <vector>

#include "reynolds/matrix.hpp"
#include "reynolds/monoid.hpp"

namespace reynolds {

/// Element of the function algebra A = Maps(G, k), stored as its value
/// vector a(g_0), ..., a(g_{n-1}) in the delta basis.
class FunctionElement {
 public:
  FunctionElement(const FiniteMonoid& m, std::vector<Scalar> values) : monoid_(&m), values_(std::move(values)) {
    if (values_.size() != m.order()) throw dimension_error("FunctionElement: length != monoid order");
    for (const auto& v : values_) require_same_ring(values_[0].ring(), v.ring(), "FunctionElement");
  }

  // objects keep a reference to the monoid: temporaries are rejected
  FunctionElement(FiniteMonoid&&, std::vector<Scalar>) = delete;

  static FunctionElement constant_one(const FiniteMonoid& m, const BaseRing& k) {
    return FunctionElement(m, std::vector<Scalar>(m.order(), Scalar::one(k)));
  }
  static FunctionElement delta(const FiniteMonoid& m, const BaseRing& k, std::size_t g) {
    std::vector<Scalar> v(m.order(), Scalar::zero(k));
    v.at(g) = Scalar::one(k);
    return FunctionElement(m, std::move(v));
  }
  static FunctionElement from_character(const FiniteMonoid& m, const Character& chi) {
    return FunctionElement(m, chi.values());
  }

  const FiniteMonoid& monoid() const { return *monoid_; }
  const BaseRing& ring() const { return values_[0].ring(); }
  std::size_t size() const { return values_.size(); }
  const Scalar& value(std::size_t g) const { return values_[g]; }
  const std::vector<Scalar>& values() const { return values_; }

  FunctionElement pointwise_mul(const FunctionElement& o) const {
    check_compatible(o, "FunctionElement::pointwise_mul");
    std::vector<Scalar> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * o.values_[i];
    return FunctionElement(*monoid_, std::move(v));
  }
  FunctionElement operator+(const FunctionElement& o) const {
    check_compatible(o, "FunctionElement+");
    std::vector<Scalar> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + o.values_[i];
    return FunctionElement(*monoid_, std::move(v));
  }
  FunctionElement scaled(const Scalar& c) const {
    std::vector<Scalar> v(values_);
    for (auto& x : v) x = x * c;
    return FunctionElement(*monoid_, std::move(v));
  }

  bool operator==(const FunctionElement& o) const {
    return monoid_->order() == o.monoid_->order() && values_ == o.values_;
  }
  bool operator!=(const FunctionElement& o) const { return !(*this == o); }

  void check_compatible(const FunctionElement& o, const char* where) const {
    if (monoid_->order() != o.monoid_->order() || !(*monoid_ == *o.monoid_))
      throw validation_error(std::string(where) + ": monoid mismatch");
    require_same_ring(ring(), o.ring(), where);
  }

 private:
  const FiniteMonoid* monoid_;
  std::vector<Scalar> values_;
};

/// Element of the dual algebra A* in the evaluation basis:
/// w = sum_i coeffs[i] * ev_{g_i}, with <ev_g, a> = a(g).
class DualElement {
 public:
  DualElement(const FiniteMonoid& m, std::vector<Scalar> coeffs) : monoid_(&m), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != m.order()) throw dimension_error("DualElement: length != monoid order");
    for (const auto& c : coeffs_) require_same_ring(coeffs_[0].ring(), c.ring(), "DualElement");
  }

  DualElement(FiniteMonoid&&, std::vector<Scalar>) = delete;

  static DualElement evaluation(const FiniteMonoid& m, const BaseRing& k, std::size_t g) {
    std::vector<Scalar> c(m.order(), Scalar::zero(k));
    c.at(g) = Scalar::one(k);
    return DualElement(m, std::move(c));
  }
  static DualElement zero(const FiniteMonoid& m, const BaseRing& k) {
    return DualElement(m, std::vector<Scalar>(m.order(), Scalar::zero(k)));
  }

  const FiniteMonoid& monoid() const { return *monoid_; }
  const BaseRing& ring() const { return coeffs_[0].ring(); }
  std::size_t size() const { return coeffs_.size(); }
  const Scalar& coeff(std::size_t g) const { return coeffs_[g]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  DualElement operator+(const DualElement& o) const {
    check_compatible(o, "DualElement+");
    std::vector<Scalar> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return DualElement(*monoid_, std::move(c));
  }
  DualElement operator-(const DualElement& o) const {
    check_compatible(o, "DualElement-");
    std::vector<Scalar> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - o.coeffs_[i];
    return DualElement(*monoid_, std::move(c));
  }
  DualElement scaled(const Scalar& c) const {
    std::vector<Scalar> v(coeffs_);
    for (auto& x : v) x = x * c;
    return DualElement(*monoid_, std::move(v));
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool operator==(const DualElement& o) const {
    return monoid_->order() == o.monoid_->order() && coeffs_ == o.coeffs_;
  }
  bool operator!=(const DualElement& o) const { return !(*this == o); }

  ExactMatrix as_column() const {
    ExactMatrix c(coeffs_.size(), 1, ring());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c.set(i, 0, coeffs_[i]);
    return c;
  }
  static DualElement from_column(const FiniteMonoid& m, const ExactMatrix& col) {
    if (col.cols() != 1 || col.rows() != m.order()) throw dimension_error("DualElement::from_column");
    std::vector<Scalar> c;
    c.reserve(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) c.push_back(col.at(i, 0));
    return DualElement(m, std::move(c));
  }

  void check_compatible(const DualElement& o, const char* where) const {
    if (monoid_->order() != o.monoid_->order() || !(*monoid_ == *o.monoid_))
      throw validation_error(std::string(where) + ": monoid mismatch");
    require_same_ring(ring(), o.ring(), where);
  }

 private:
  const FiniteMonoid* monoid_;
  std::vector<Scalar> coeffs_;
};

/// Convolution product on A*, the bilinear extension of ev_x * ev_y = ev_{xy}.
/// Associative with unit ev_e; dual to the comultiplication a(xy).
inline DualElement convolve(const DualElement& u, const DualElement& w) {
  u.check_compatible(w, "convolve");
  const FiniteMonoid& m = u.monoid();
  std::size_t n = m.order();
  std::vector<Scalar> out(n, Scalar::zero(u.ring()));
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (w.coeff(j).is_zero()) continue;
      std::size_t k = m.mul(i, j);
      out[k] = out[k] + u.coeff(i) * w.coeff(j);
    }
  }
  return DualElement(m, std::move(out));
}

/// The pairing w(a) = sum_i coeffs[i] * a(g_i).
inline Scalar pair(const DualElement& w, const FunctionElement& a) {
  if (w.size() != a.size()) throw dimension_error("pair: size mismatch");
  require_same_ring(w.ring(), a.ring(), "pair");
  Scalar s = Scalar::zero(w.ring());
  for (std::size_t i = 0; i < w.size(); ++i) s = s + w.coeff(i) * a.value(i);
  return s;
}

enum class Side { left, right };

/// Translation operators on A: left lambda_g(a)(x) = a(g*x) and right
/// rho_g(a)(x) = a(x*g).  These are commuting monoid actions with
/// lambda_g lambda_h = lambda_{hg} and rho_g rho_h = rho_{gh}.
inline FunctionElement translate(Side side, std::size_t g, const FunctionElement& a) {
  const FiniteMonoid& m = a.monoid();
  if (g >= m.order()) throw validation_error("translate: element index out of range");
  std::vector<Scalar> v;
  v.reserve(m.order());
  for (std::size_t x = 0; x < m.order(); ++x)
    v.push_back(side == Side::left ? a.value(m.mul(g, x)) : a.value(m.mul(x, g)));
  return FunctionElement(m, std::move(v));
}

/// The trivial representation Theta: A* -> k, w -> w(1_A) = sum of
/// coefficients.  An algebra homomorphism for convolution.
inline Scalar augmentation_theta(const DualElement& w) {
  Scalar s = Scalar::zero(w.ring());
  for (std::size_t i = 0; i < w.size(); ++i) s = s + w.coeff(i);
  return s;
}

/// The involution induced on A* by g -> g^-1 (groups only): coefficients are
/// permuted by inversion.  An anti-homomorphism for convolution.
inline DualElement star_involution(const DualElement& w) {
  const FiniteMonoid& m = w.monoid();
  if (!m.is_group()) throw validation_error("star_involution: monoid is not a group");
  std::vector<Scalar> c(m.order(), Scalar::zero(w.ring()));
  for (std::size_t i = 0; i < m.order(); ++i) c[i] = w.coeff(m.inverse(i));
  return DualElement(m, std::move(c));
}

/// w is left invariant iff ev_g * w = w for all g; right iff w * ev_g = w.
inline bool is_left_invariant(const DualElement& w) {
  const FiniteMonoid& m = w.monoid();
  for (std::size_t g = 0; g < m.order(); ++g)
    if (convolve(DualElement::evaluation(m, w.ring(), g), w) != w) return false;
  return true;
}
inline bool is_right_invariant(const DualElement& w) {
  const FiniteMonoid& m = w.monoid();
  for (std::size_t g = 0; g < m.order(); ++g)
    if (convolve(w, DualElement::evaluation(m, w.ring(), g)) != w) return false;
  return true;
}

/// chi-twisted invariance: ev_g * w = chi(g) w (left), w * ev_g = chi(g) w (right).
inline bool is_left_semi_invariant(const DualElement& w, const Character& chi) {
  const FiniteMonoid& m = w.monoid();
  for (std::size_t g = 0; g < m.order(); ++g)
    if (convolve(DualElement::evaluation(m, w.ring(), g), w) != w.scaled(chi.value(g))) return false;
  return true;
}
inline bool is_right_semi_invariant(const DualElement& w, const Character& chi) {
  const FiniteMonoid& m = w.monoid();
  for (std::size_t g = 0; g < m.order(); ++g)
    if (convolve(w, DualElement::evaluation(m, w.ring(), g)) != w.scaled(chi.value(g))) return false;
  return true;
}

}  // namespace reynolds
