#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "stieltjes/errors.hpp"

namespace stieltjes {

// Exact rational number.  Always in lowest terms with positive denominator
// (mpq_class maintains canonical form through arithmetic; construction
// canonicalizes explicitly).  No implicit conversion to or from floating
// point anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) fail(errc::malformed_input, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with decimal digits, optional leading '-' on p,
  // q > 0.  This is also the serialization format, so parse(str()) round
  // trips exactly.
  static Rational parse(std::string_view text) {
    auto bad = [&]() -> Rational {
      fail(errc::malformed_input, "malformed rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return bad();
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    auto digits_ok = [](std::string_view t, bool allow_sign) {
      if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) return bad();
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) return bad();
    Rational r;
    r.v_ = mpq_class(p) / mpq_class(q);
    return r;
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::non_invertible, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational reciprocal() const {
    if (is_zero()) fail(errc::non_invertible, "reciprocal of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Integer power, n >= 0 (negative n inverts, erroring on zero base).
  Rational pow(long n) const {
    if (n < 0) return reciprocal().pow(-n);
    Rational acc(1), base(*this);
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace stieltjes
