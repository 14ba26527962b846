#pragma once

#include <utility>
#include <variant>

#include "stieltjes/polynomial.hpp"

namespace stieltjes {

// Quotient of polynomials, kept normalized: gcd(num, den) = 1 and den monic.
// The zero function is 0/1.  A zero denominator is rejected at construction.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}
  explicit RationalFunction(const Rational& c)
      : num_(Polynomial(c)), den_(Polynomial::one()) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction reciprocal() const {
    if (is_zero()) fail(errc::non_invertible, "reciprocal of the zero function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(errc::non_invertible, "division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical forms compare directly
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string pretty(const char* var = "z") const {
    if (den_ == Polynomial::one()) return num_.pretty(var);
    return "(" + num_.pretty(var) + ") / (" + den_.pretty(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero())
      fail(errc::malformed_input, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::one();
      return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant() || g.coeff(0) != Rational(1)) {
      num_ = num_.divmod(g).quotient;
      den_ = den_.divmod(g).quotient;
    }
    Rational lead = den_.leading_coeff();
    if (lead != Rational(1)) {
      Rational inv = lead.reciprocal();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

// Parameter slot of a linear-fractional description: a rational function or
// the point at infinity (which selects the first column of the matrix).
struct Infinity {};
using Parameter = std::variant<RationalFunction, Infinity>;

inline bool is_infinity(const Parameter& p) { return std::holds_alternative<Infinity>(p); }

}  // namespace stieltjes
