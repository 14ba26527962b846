#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

// Dense univariate polynomial over the rationals, coefficients stored in
// ascending powers with no trailing zeros.  The zero polynomial has an empty
// coefficient vector and no degree: degree() is nullopt ("minus infinity"),
// deliberately not -1, so degree arithmetic can never silently use it.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
  explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
  explicit Polynomial(Rational constant) : c_{std::move(constant)} { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  // c * z^k
  static Polynomial monomial(const Rational& c, int k) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of z^k; zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational leading_coeff() const {
    if (c_.empty()) fail(errc::not_applicable, "leading coefficient of the zero polynomial");
    return c_.back();
  }

  Rational eval(const Rational& x) const {  // Horner
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    Polynomial r(p);
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Multiply by z^k, k >= 0.
  Polynomial shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(c_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + static_cast<std::size_t>(k)] = c_[i];
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
  }

  struct DivMod;
  // Exact Euclidean division; divisor must be nonzero.
  DivMod divmod(const Polynomial& d) const;

  // Human-readable form, for diagnostics only ("1 - 2*z + z^3").
  std::string pretty(const char* var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational a = c_[i];
      if (!out.empty()) {
        out += a.sign() < 0 ? " - " : " + ";
        a = a.abs();
      }
      bool unit = a == Rational(1) && i != 0;
      if (!unit) out += a.str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline Polynomial::DivMod Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) fail(errc::non_invertible, "polynomial division by zero");
  Polynomial r(*this);
  std::vector<Rational> q;
  int dd = *d.degree();
  Rational lead = d.leading_coeff();
  while (!r.is_zero() && *r.degree() >= dd) {
    int k = *r.degree() - dd;
    Rational f = r.leading_coeff() / lead;
    if (static_cast<std::size_t>(k) >= q.size()) q.resize(static_cast<std::size_t>(k) + 1);
    q[static_cast<std::size_t>(k)] = f;
    r = r - Polynomial::monomial(f, k) * d;
  }
  return {Polynomial(std::move(q)), std::move(r)};
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.pretty();
}

// Monic greatest common divisor (gcd of anything with 0 is the other input
// made monic; gcd(0,0) = 0).
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.leading_coeff().reciprocal() * a;
}

// Negative index kappa_-(P) of a real polynomial regarded as a generalized
// Nevanlinna function: floor((deg+1)/2) when the leading coefficient is
// negative and the degree odd, floor(deg/2) otherwise; 0 for the zero
// polynomial.  Depends only on degree and leading sign.
inline int poly_negative_index(const Polynomial& p) {
  if (p.is_zero()) return 0;
  int nu = *p.degree();
  if (p.leading_coeff().sign() < 0 && nu % 2 == 1) return (nu + 1) / 2;
  return nu / 2;
}

}  // namespace stieltjes
