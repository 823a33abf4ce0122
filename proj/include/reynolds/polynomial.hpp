#pragma once

#include <map>
#include <string>
#include <vector>

#include "reynolds/matrix.hpp"

namespace reynolds {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
class Polynomial {
 public:
  Polynomial(std::size_t nvars, const BaseRing& ring) : nvars_(nvars), ring_(ring) {}

  static Polynomial zero(std::size_t nvars, const BaseRing& ring) { return Polynomial(nvars, ring); }
  static Polynomial constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars, c.ring());
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t j, const BaseRing& ring) {
    Polynomial p(nvars, ring);
    Exponents e(nvars, 0);
    e.at(j) = 1;
    p.add_term(e, Scalar::one(ring));
    return p;
  }
  static Polynomial monomial(std::size_t nvars, const Exponents& e, const Scalar& c) {
    Polynomial p(nvars, c.ring());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const BaseRing& ring() const { return ring_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != nvars_) throw dimension_error("Polynomial: exponent vector length");
    require_same_ring(ring_, c.ring(), "Polynomial::add_term");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      Scalar s = it->second + c;
      if (s.is_zero())
        terms_.erase(it);
      else
        it->second = s;
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check(o);
    Polynomial r(nvars_, ring_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  Polynomial scaled(const Scalar& c) const {
    Polynomial r(nvars_, ring_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      if (t > d) d = t;
    }
    return d;
  }

  bool is_homogeneous(unsigned d) const {
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      if (t != d) return false;
    }
    return true;
  }

  /// Substitute variable j by the linear form forms[j] (each a polynomial).
  Polynomial substitute(const std::vector<Polynomial>& forms) const {
    if (forms.size() != nvars_) throw dimension_error("substitute: one form per variable");
    Polynomial out(forms.empty() ? nvars_ : forms[0].nvars(), ring_);
    for (const auto& [e, c] : terms_) {
      Polynomial term = Polynomial::constant(out.nvars(), c);
      for (std::size_t j = 0; j < nvars_; ++j)
        for (unsigned k = 0; k < e[j]; ++k) term = term * forms[j];
      out = out + term;
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string();
      bool negative = !cs.empty() && cs[0] == '-';
      if (!first)
        s += negative ? " - " : " + ";
      else if (negative)
        s += "-";
      first = false;
      if (negative) cs = cs.substr(1);
      std::string mono;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (e[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(j);
        if (e[j] > 1) mono += "^" + std::to_string(e[j]);
      }
      if (mono.empty())
        s += cs;
      else if (cs == "1")
        s += mono;
      else
        s += cs + "*" + mono;
    }
    return s;
  }

 private:
  void check(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw dimension_error("Polynomial: nvars mismatch");
    require_same_ring(ring_, o.ring_, "Polynomial");
  }
  std::size_t nvars_;
  BaseRing ring_;
  std::map<Exponents, Scalar> terms_;
};

/// All exponent vectors of total degree d, in lexicographic-descending order
/// (x0^d first).  The deterministic monomial basis used everywhere.
inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned rem) -> void {
    if (var + 1 == nvars) {
      cur[var] = rem;
      out.push_back(cur);
      return;
    }
    for (unsigned e = rem + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// Coordinates of a homogeneous degree-d polynomial in the monomial basis.
inline ExactMatrix poly_coordinates(const Polynomial& p, const std::vector<Exponents>& basis) {
  ExactMatrix v(basis.size(), 1, p.ring());
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw dimension_error("poly_coordinates: term outside basis");
    v.set(it->second, 0, c);
  }
  return v;
}

inline Polynomial poly_from_coordinates(const ExactMatrix& v, const std::vector<Exponents>& basis,
                                        std::size_t nvars) {
  Polynomial p(nvars, v.ring());
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v.at(i, 0));
  return p;
}

}  // namespace reynolds
