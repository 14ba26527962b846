#pragma once

#include <vector>

#include "stieltjes/rational_function.hpp"

namespace stieltjes {

// Truncated Laurent expansion at infinity: coefficients of z^k for
// k = top_power() down to cutoff(), exact.  Powers above top_power() are
// genuinely zero and may be queried; powers below cutoff() were never
// computed and querying them is an error, never a silent zero.
class LaurentTail {
 public:
  LaurentTail(int top_power, int cutoff, std::vector<Rational> descending)
      : top_(top_power), cutoff_(cutoff), c_(std::move(descending)) {
    check_internal(static_cast<int>(c_.size()) == top_ - cutoff_ + 1,
                   "LaurentTail window size mismatch");
  }

  int top_power() const { return top_; }
  int cutoff() const { return cutoff_; }

  Rational coeff(int k) const {
    if (k > top_) return Rational(0);
    if (k < cutoff_)
      fail(errc::not_applicable,
           "Laurent coefficient of z^" + std::to_string(k) +
               " requested below the computed cutoff z^" + std::to_string(cutoff_));
    return c_[static_cast<std::size_t>(top_ - k)];
  }

 private:
  int top_;
  int cutoff_;
  std::vector<Rational> c_;  // c_[i] is the coefficient of z^(top_ - i)
};

// Expansion of f at z = infinity, exact through z^cutoff.  For nonzero f the
// top stored power is deg(num) - deg(den) with a nonzero coefficient there;
// if f is o(z^cutoff) (including f = 0) the whole window is zero.
inline LaurentTail laurent_expand_at_infinity(const RationalFunction& f, int cutoff) {
  int top = cutoff;
  if (!f.is_zero()) top = std::max(cutoff, *f.num().degree() - *f.den().degree());
  std::vector<Rational> out(static_cast<std::size_t>(top - cutoff) + 1);
  if (!f.is_zero() && *f.num().degree() - *f.den().degree() >= cutoff) {
    int dn = *f.num().degree();
    int dd = *f.den().degree();
    // In w = 1/z:  f(z) = z^(dn-dd) * A(w)/B(w) with A, B the reversed
    // coefficient lists; B(0) = lc(den) != 0, so A/B is a power series.
    auto a = [&](int i) { return f.num().coeff(dn - i); };
    auto b = [&](int i) { return f.den().coeff(dd - i); };
    Rational b0_inv = f.den().leading_coeff().reciprocal();
    int terms = top - cutoff + 1;
    for (int k = 0; k < terms; ++k) {
      Rational acc = a(k);
      for (int i = 1; i <= k; ++i) acc -= b(i) * out[static_cast<std::size_t>(k - i)];
      out[static_cast<std::size_t>(k)] = acc * b0_inv;
    }
  }
  return LaurentTail(top, cutoff, std::move(out));
}

// True when f's expansion is -s_0/z - s_1/z^2 - ... - s_ell/z^(ell+1) + o(z^-(ell+1)):
// everything at nonnegative powers vanishes and the listed moments match.
inline bool tail_matches_moments(const LaurentTail& tail, const std::vector<Rational>& s) {
  if (tail.cutoff() > -static_cast<int>(s.size()))
    fail(errc::not_applicable, "Laurent window too short for the moment comparison");
  for (int k = tail.top_power(); k >= 0; --k)
    if (!tail.coeff(k).is_zero()) return false;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (tail.coeff(-1 - static_cast<int>(j)) != -s[j]) return false;
  return true;
}

// The moments determined by a tail of moment type; requires the window to
// reach z^-(ell+1) and all nonnegative powers to vanish.
inline std::vector<Rational> moments_from_tail(const LaurentTail& tail, int ell) {
  if (tail.cutoff() > -(ell + 1))
    fail(errc::insufficient_moments,
         "Laurent window reaches z^" + std::to_string(tail.cutoff()) +
             ", need z^" + std::to_string(-(ell + 1)),
         ell);
  for (int k = tail.top_power(); k >= 0; --k)
    if (!tail.coeff(k).is_zero())
      fail(errc::not_applicable, "function is not o(1) at infinity; no moment expansion");
  std::vector<Rational> s(static_cast<std::size_t>(ell) + 1);
  for (int j = 0; j <= ell; ++j) s[static_cast<std::size_t>(j)] = -tail.coeff(-1 - j);
  return s;
}

}  // namespace stieltjes
