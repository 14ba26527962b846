#pragma once

#include "stieltjes/rational_function.hpp"

namespace stieltjes {

// 2x2 matrix of polynomials, the carrier of linear-fractional descriptions
//   T_W[tau] = (w11*tau + w12) / (w21*tau + w22).
struct PolyMatrix2 {
  Polynomial w11, w12, w21, w22;

  static PolyMatrix2 identity() {
    return {Polynomial::one(), Polynomial::zero(), Polynomial::zero(), Polynomial::one()};
  }

  Polynomial det() const { return w11 * w22 - w12 * w21; }

  friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
    return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
            a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22};
  }

  friend bool operator==(const PolyMatrix2& a, const PolyMatrix2& b) {
    return a.w11 == b.w11 && a.w12 == b.w12 && a.w21 == b.w21 && a.w22 == b.w22;
  }
  friend bool operator!=(const PolyMatrix2& a, const PolyMatrix2& b) { return !(a == b); }
};

// Left factor of one Schur step:  M(z) = [[1, 0], [-z*m(z), 1]].
inline PolyMatrix2 m_factor(const Polynomial& m) {
  return {Polynomial::one(), Polynomial::zero(), -m.shifted_up(1), Polynomial::one()};
}

// Right factor of one Schur step:  L(z) = [[1, l(z)], [0, 1]].
inline PolyMatrix2 l_factor(const Polynomial& l) {
  return {Polynomial::one(), l, Polynomial::zero(), Polynomial::one()};
}

// T_W[tau].  tau = infinity selects the first column, w11/w21.  Errors when
// the denominator vanishes identically (only possible for inadmissible tau).
inline RationalFunction lft_apply(const PolyMatrix2& w, const Parameter& tau) {
  Polynomial num, den;
  if (is_infinity(tau)) {
    num = w.w11;
    den = w.w21;
  } else {
    const RationalFunction& t = std::get<RationalFunction>(tau);
    num = w.w11 * t.num() + w.w12 * t.den();
    den = w.w21 * t.num() + w.w22 * t.den();
  }
  if (den.is_zero())
    fail(errc::degenerate_parameter,
         "parameter sends the description's denominator to zero identically");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace stieltjes
