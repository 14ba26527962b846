#pragma once

#include <optional>
#include <vector>

#include "stieltjes/matrix.hpp"
#include "stieltjes/normal_indices.hpp"
#include "stieltjes/polynomial.hpp"

namespace stieltjes {

// Upper-triangular Toeplitz matrix T(c_0,...,c_n): entry (i,j) = c_{j-i}.
inline Matrix toeplitz_matrix(const std::vector<Rational>& c) {
  int n = static_cast<int>(c.size());
  Matrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) t.at(i, j) = c[static_cast<std::size_t>(j - i)];
  return t;
}

// The unique d with T(c) T(d) = I: the truncated power-series reciprocal of
// c, by forward substitution.  Requires c_0 != 0.  Applying it twice gives
// back c (the test suites lean on this involution).
inline std::vector<Rational> toeplitz_reciprocal(const std::vector<Rational>& c) {
  if (c.empty()) fail(errc::malformed_input, "empty Toeplitz symbol");
  if (c[0].is_zero())
    fail(errc::non_invertible, "Toeplitz symbol with zero constant term has no reciprocal");
  std::vector<Rational> d(c.size());
  Rational inv = c[0].reciprocal();
  d[0] = inv;
  for (std::size_t k = 1; k < c.size(); ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += c[i] * d[k - i];
    d[k] = -(acc * inv);
  }
  return d;
}

// The sequence produced by one m-type step-down, indexed from -1:
// frak_s(-1), frak_s(0), ..., frak_s(max_index()).  Empty when the step had
// no room for any entry (boundary odd case).
class FrakSequence {
 public:
  FrakSequence() = default;
  explicit FrakSequence(std::vector<Rational> from_minus_one) : v_(std::move(from_minus_one)) {}

  bool empty() const { return v_.empty(); }
  int max_index() const { return static_cast<int>(v_.size()) - 2; }  // -2 when empty

  const Rational& at(int i) const {
    if (i < -1 || i > max_index())
      fail(errc::insufficient_moments,
           "frak_s entry " + std::to_string(i) + " outside the computed range", i);
    return v_[static_cast<std::size_t>(i + 1)];
  }

  // frak_s(0).. as a plain list (may be empty).
  std::vector<Rational> inner() const {
    if (v_.size() <= 1) return {};
    return std::vector<Rational>(v_.begin() + 1, v_.end());
  }

  const std::vector<Rational>& raw() const { return v_; }

 private:
  std::vector<Rational> v_;
};

// Result of peeling one m-factor off a sequence in basic form
// (s_0 = ... = s_{nu-2} = 0, s_{nu-1} != 0):
//   a: monic polynomial of degree nu, a = b z m + a(0)
//   b: s_{nu-1}
//   m: degree nu-1, leading coefficient 1/s_{nu-1}
//   frak: the stepped sequence; empty in the boundary case ell = 2nu-2,
//         where the free tail s_{2nu-1} (default 0) completes only a(0).
struct StepDownResult {
  Polynomial a;
  Rational b;
  Polynomial m;
  FrakSequence frak;
  std::optional<Rational> free_tail_used;
};

inline StepDownResult step_down_m(const MomentSequence& s, int nu,
                                  std::optional<Rational> free_tail = std::nullopt) {
  if (nu < 1) fail(errc::malformed_input, "step-down order must be positive");
  for (int j = 0; j + 1 < nu; ++j)
    if (!s.at(j).is_zero())
      fail(errc::not_basic_form,
           "sequence is not in basic form: s_" + std::to_string(j) + " != 0 below nu");
  if (s.at(nu - 1).is_zero())
    fail(errc::not_basic_form, "sequence is not in basic form: s_" + std::to_string(nu - 1) + " = 0");
  if (s.ell() < 2 * nu - 2)
    fail(errc::insufficient_moments,
         "step-down of order " + std::to_string(nu) + " needs moments through s_" +
             std::to_string(2 * nu - 2),
         2 * nu - 2);

  StepDownResult out;
  out.b = s.at(nu - 1);
  bool boundary = s.ell() == 2 * nu - 2;
  std::vector<Rational> c(s.values().begin() + (nu - 1), s.values().end());
  if (boundary) {
    out.free_tail_used = free_tail.value_or(Rational(0));
    c.push_back(*out.free_tail_used);
  } else if (free_tail) {
    fail(errc::malformed_input, "free tail supplied but s_" + std::to_string(2 * nu - 1) +
                                    " is already part of the data");
  }

  // T(m_{nu-1},...,m_0, -frak(-1), ..., -frak(ell-2nu)) T(s_{nu-1},...,s_ell) = I
  std::vector<Rational> r = toeplitz_reciprocal(c);
  std::vector<Rational> mc(static_cast<std::size_t>(nu));
  for (int i = 0; i < nu; ++i) mc[static_cast<std::size_t>(nu - 1 - i)] = r[static_cast<std::size_t>(i)];
  out.m = Polynomial(std::move(mc));
  if (!boundary) {
    std::vector<Rational> fr;
    fr.reserve(r.size() - static_cast<std::size_t>(nu));
    for (std::size_t i = static_cast<std::size_t>(nu); i < r.size(); ++i) fr.push_back(-r[i]);
    out.frak = FrakSequence(std::move(fr));
  }
  // a = b z m + a(0), a(0)/b = r_nu = -frak(-1)
  out.a = out.b * out.m.shifted_up(1) + Polynomial(out.b * r[static_cast<std::size_t>(nu)]);

  check_internal(out.m.degree() == std::optional<int>(nu - 1), "m has wrong degree");
  check_internal(out.m.leading_coeff() * out.b == Rational(1),
                 "leading coefficient of m is not 1/s_{nu-1}");
  check_internal(out.a.leading_coeff() == Rational(1), "a is not monic");
  return out;
}

// One constant l-factor: l = 1/frak(-1) and the next moment sequence, from
// T(frak(-1),...,frak(L)) T(l, -s'_0, ..., -s'_L) = I.  The next sequence is
// empty exactly when the frak data carried only its (-1) entry.
struct StepDownLResult {
  Rational l;
  std::vector<Rational> next;
};

inline StepDownLResult step_down_l(const FrakSequence& frak) {
  if (frak.empty())
    fail(errc::insufficient_moments, "empty frak sequence has no l-factor", -1);
  if (frak.at(-1).is_zero())
    fail(errc::requires_polynomial_l, "frak_s(-1) = 0: the l-factor is not a constant");
  std::vector<Rational> r = toeplitz_reciprocal(frak.raw());
  StepDownLResult out;
  out.l = r[0];
  out.next.reserve(r.size() - 1);
  for (std::size_t i = 1; i < r.size(); ++i) out.next.push_back(-r[i]);
  return out;
}

// Polynomial l-factor, used when frak(-1) = 0 (the mu_1 > nu_1 branch of an
// even basic problem).  delta is the first normal index of the inner
// sequence; l has degree delta with leading coefficient 1/frak(delta-1).
struct StepDownLPolyResult {
  Polynomial l;
  std::vector<Rational> next;
  int delta = 0;
};

inline StepDownLPolyResult step_down_l_poly(const FrakSequence& frak) {
  if (frak.empty())
    fail(errc::insufficient_moments, "empty frak sequence has no l-factor", -1);
  if (!frak.at(-1).is_zero())
    fail(errc::not_applicable, "frak_s(-1) != 0: the l-factor is the constant 1/frak_s(-1)");
  std::vector<Rational> inner = frak.inner();
  int z = 0;
  while (z < static_cast<int>(inner.size()) && inner[static_cast<std::size_t>(z)].is_zero()) ++z;
  if (z == static_cast<int>(inner.size()))
    fail(errc::no_normal_index, "stepped sequence vanishes identically; no l-factor of any degree");
  int delta = z + 1;
  int L = frak.max_index();
  if (L < 2 * delta - 1)
    fail(errc::insufficient_moments,
         "polynomial l-factor of degree " + std::to_string(delta) + " needs frak entries through " +
             std::to_string(2 * delta - 1),
         2 * delta - 1);

  std::vector<Rational> c(inner.begin() + (delta - 1), inner.end());
  std::vector<Rational> r = toeplitz_reciprocal(c);
  StepDownLPolyResult out;
  out.delta = delta;
  std::vector<Rational> lc(static_cast<std::size_t>(delta) + 1);
  for (int j = 0; j <= delta; ++j) lc[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(delta - j)];
  out.l = Polynomial(std::move(lc));
  out.next.reserve(r.size() - static_cast<std::size_t>(delta + 1));
  for (std::size_t i = static_cast<std::size_t>(delta + 1); i < r.size(); ++i)
    out.next.push_back(-r[i]);
  check_internal(out.l.degree() == std::optional<int>(delta), "polynomial l has wrong degree");
  return out;
}

// Independent evaluation of the stepped sequence by closed determinant
// formulas; exists purely as a cross-check oracle for step_down_m, computing
// through bordered Hankel and Hessenberg determinants instead of forward
// substitution.  Requires ell >= 2nu-1.
inline FrakSequence explicit_frak_s(const MomentSequence& s, int nu) {
  for (int j = 0; j + 1 < nu; ++j)
    if (!s.at(j).is_zero()) fail(errc::not_basic_form, "sequence is not in basic form");
  const Rational& b = s.at(nu - 1);
  if (b.is_zero()) fail(errc::not_basic_form, "sequence is not in basic form");
  if (s.ell() < 2 * nu - 1)
    fail(errc::insufficient_moments, "explicit frak_s needs moments through s_" +
                                         std::to_string(2 * nu - 1),
         2 * nu - 1);

  std::vector<Rational> v;
  // frak(-1) = (-1)^(nu+1) det S+_nu / (s_{nu-1} det S_nu)
  Rational d = hankel_det(s, nu, 0);
  Rational dp = hankel_det(s, nu, +1);
  Rational sm1 = dp / (b * d);
  if (nu % 2 == 0) sm1 = -sm1;
  v.push_back(sm1);

  // frak(i) = (-1)^(nu+i) det H_{nu+i+1} / s_{nu-1}^(nu+i+2), where H_k is
  // the k x k Hessenberg slice with entry (p,q) = s_{nu+p-q} (zero when the
  // index drops below nu-1); the superdiagonal carries s_{nu-1}.
  for (int i = 0; i <= s.ell() - 2 * nu; ++i) {
    int k = nu + i + 1;
    Matrix h(k, k);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        int idx = nu + p - q;  // c_{p-q+1} with c_j = s_{nu-1+j}
        h.at(p, q) = idx >= nu - 1 ? s.at(idx) : Rational(0);
      }
    Rational val = determinant(h) / b.pow(nu + i + 2);
    if ((nu + i) % 2 == 1) val = -val;
    v.push_back(val);
  }
  return FrakSequence(std::move(v));
}

}  // namespace stieltjes
