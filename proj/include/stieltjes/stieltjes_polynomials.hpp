#pragma once

#include <vector>

#include "stieltjes/schur.hpp"

namespace stieltjes {

namespace detail {

// Monic orthogonal polynomial of degree n as a bordered Hankel determinant:
// rows (vals_i, ..., vals_{i+n}) for i < n, then the power row
// (1, lambda, ..., lambda^n), all over det S_n.
inline Polynomial orth_poly_determinant(const std::vector<Rational>& vals, int n) {
  if (n == 0) return Polynomial::one();
  check_internal(static_cast<int>(vals.size()) >= 2 * n, "orthogonal polynomial needs 2n values");
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = vals[static_cast<std::size_t>(i + j)];
  Rational dn = determinant(s);
  check_internal(!dn.is_zero(), "orthogonal polynomial at a non-normal index");

  std::vector<Rational> coef(static_cast<std::size_t>(n) + 1);
  for (int q = 0; q <= n; ++q) {
    Matrix minor(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        minor.at(i, c) = vals[static_cast<std::size_t>(i + (c < q ? c : c + 1))];
    Rational v = determinant(minor) / dn;
    if ((n + q) % 2 == 1) v = -v;
    coef[static_cast<std::size_t>(q)] = v;
  }
  return Polynomial(std::move(coef));
}

// Second-kind companion: Q(lambda) = sum_i lambda^i sum_{k>i} p_k vals_{k-1-i}.
inline Polynomial second_kind_from(const Polynomial& p, const std::vector<Rational>& vals) {
  if (p.is_constant()) return Polynomial::zero();
  int n = *p.degree();
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k <= n; ++k)
      c[static_cast<std::size_t>(i)] += p.coeff(k) * vals[static_cast<std::size_t>(k - 1 - i)];
  return Polynomial(std::move(c));
}

}  // namespace detail

// The first/second kind polynomials along the chain of normal indices,
// together with the partial quotients of the continued fraction they
// satisfy: y_{n_{j+1}} = a_j y_{n_j} - b_j y_{n_{j-1}}.
struct OrthogonalSystem {
  std::vector<int> n;            // n[0] = 0, then the normal indices
  std::vector<Polynomial> p, q;  // p[j] = P_{n[j]}, q[j] = Q_{n[j]}
  std::vector<Polynomial> a;     // partial quotients a_0 .. a_{N-1}
  std::vector<Rational> b;       // b_0 .. b_{N-1}
  bool last_a_derived = false;   // odd problems: a_{N-1} has no factor formula
};

// Builds P/Q by bordered determinants, the a/b coefficients from the m/l
// factors (d_j = lc m_j, b_0 = 1/d_1, b_j = 1/(l_j^2 d_j d_{j+1}),
// a_j = (z m_{j+1} - 1/l_j - 1/l_{j+1}) / d_{j+1}), then verifies that the
// two constructions satisfy one and the same three-term recurrence.
inline OrthogonalSystem orthogonal_system(const SchurExpansion& e) {
  OrthogonalSystem os;
  int N = e.step_count();

  std::vector<Rational> vals = e.input.values();
  if (e.parity == Parity::odd) vals.push_back(*e.free_tail_used);  // corner of the top block

  os.n.push_back(0);
  os.p.push_back(Polynomial::one());
  os.q.push_back(Polynomial::zero());
  for (const auto& st : e.steps) {
    os.n.push_back(st.n);
    os.p.push_back(detail::orth_poly_determinant(vals, st.n));
    os.q.push_back(detail::second_kind_from(os.p.back(), vals));
  }

  auto d = [&](int j) { return e.steps[static_cast<std::size_t>(j - 1)].m.leading_coeff(); };
  auto l = [&](int j) { return *e.steps[static_cast<std::size_t>(j - 1)].l; };
  auto has_l = [&](int j) { return e.steps[static_cast<std::size_t>(j - 1)].l.has_value(); };

  os.b.push_back(d(1).reciprocal());
  check_internal(os.b[0] == e.steps[0].b, "b_0 != s_{n_1 - 1}");
  for (int j = 1; j < N; ++j) os.b.push_back((l(j) * l(j) * d(j) * d(j + 1)).reciprocal());

  for (int t = 0; t < N; ++t) {
    if (has_l(t + 1)) {
      Rational shift = l(t + 1).reciprocal();
      if (t >= 1) shift += l(t).reciprocal();
      os.a.push_back((e.steps[static_cast<std::size_t>(t)].m.shifted_up(1) - Polynomial(shift)) *
                     d(t + 1).reciprocal());
    } else {
      // odd terminal: recover a_{N-1} from the recurrence itself
      Polynomial rhs = os.p[static_cast<std::size_t>(t + 1)];
      if (t >= 1) rhs = rhs + os.b[static_cast<std::size_t>(t)] * os.p[static_cast<std::size_t>(t - 1)];
      auto dm = rhs.divmod(os.p[static_cast<std::size_t>(t)]);
      check_internal(dm.remainder.is_zero(), "P_{n_N} is not reachable by a three-term step");
      os.a.push_back(dm.quotient);
      os.last_a_derived = true;
    }
  }

  for (int t = 0; t < N; ++t) {
    const Polynomial& at = os.a[static_cast<std::size_t>(t)];
    check_internal(at.degree() == std::optional<int>(os.n[static_cast<std::size_t>(t + 1)] -
                                                     os.n[static_cast<std::size_t>(t)]) &&
                       at.leading_coeff() == Rational(1),
                   "partial quotient is not monic of the step degree");
    Polynomial pprev = t == 0 ? Polynomial::zero() : os.p[static_cast<std::size_t>(t - 1)];
    Polynomial qprev = t == 0 ? -Polynomial::one() : os.q[static_cast<std::size_t>(t - 1)];
    check_internal(os.p[static_cast<std::size_t>(t + 1)] ==
                       at * os.p[static_cast<std::size_t>(t)] - os.b[static_cast<std::size_t>(t)] * pprev,
                   "first kind polynomials break the three-term recurrence");
    check_internal(os.q[static_cast<std::size_t>(t + 1)] ==
                       at * os.q[static_cast<std::size_t>(t)] - os.b[static_cast<std::size_t>(t)] * qprev,
                   "second kind polynomials break the three-term recurrence");
  }
  for (int j = 1; j <= N; ++j) {
    const Polynomial& qj = os.q[static_cast<std::size_t>(j)];
    check_internal(qj.degree() == std::optional<int>(os.n[static_cast<std::size_t>(j)] - os.n[1]) &&
                       qj.leading_coeff() == os.b[0],
                   "second kind polynomial has the wrong degree or leading coefficient");
  }
  return os;
}

// The Stieltjes polynomials: numerators/denominators of the continued
// fraction convergents, indexed 0..2N-1 (odd problems) or 0..2N (even).
struct StieltjesSystem {
  std::vector<Polynomial> pp, qq;  // pp[t] = P+_t, qq[t] = Q+_t
  int top() const { return static_cast<int>(pp.size()) - 1; }
};

// Two routes: scaled combinations of the P_{n_j}, Q_{n_j} and their values
// at zero on one side, the factor recurrence
//   y_{2i-1} = -z m_i y_{2i-2} + y_{2i-3},  y_{2i} = l_i y_{2i-1} + y_{2i-2}
// on the other; they must agree coefficient for coefficient.
inline StieltjesSystem stieltjes_system(const SchurExpansion& e, const OrthogonalSystem& os) {
  int N = e.step_count();
  int top = 2 * N - (e.parity == Parity::odd ? 1 : 0);

  StieltjesSystem sys;
  sys.pp.assign(static_cast<std::size_t>(top) + 1, Polynomial::zero());
  sys.qq.assign(static_cast<std::size_t>(top) + 1, Polynomial::zero());
  sys.pp[0] = Polynomial::one();

  Rational bprod(1);
  for (int i = 1; i <= N; ++i) {
    bprod *= os.b[static_cast<std::size_t>(i - 1)];
    const Polynomial &pi = os.p[static_cast<std::size_t>(i)], &pm = os.p[static_cast<std::size_t>(i - 1)];
    const Polynomial &qi = os.q[static_cast<std::size_t>(i)], &qm = os.q[static_cast<std::size_t>(i - 1)];
    Rational pi0 = pi.eval(Rational(0)), pm0 = pm.eval(Rational(0));
    Rational inv = bprod.reciprocal();
    sys.pp[static_cast<std::size_t>(2 * i - 1)] = (pi * pm0 - pm * pi0) * -inv;
    sys.qq[static_cast<std::size_t>(2 * i - 1)] = (qi * pm0 - qm * pi0) * inv;
    if (2 * i <= top) {
      check_internal(!pi0.is_zero(), "P_{n_j}(0) = 0 on a regular sequence");
      sys.pp[static_cast<std::size_t>(2 * i)] = pi * pi0.reciprocal();
      sys.qq[static_cast<std::size_t>(2 * i)] = qi * -pi0.reciprocal();
    }
  }

  // factor-recurrence route
  std::vector<Polynomial> pr(static_cast<std::size_t>(top) + 1), qr(static_cast<std::size_t>(top) + 1);
  auto prev = [&](std::vector<Polynomial>& v, int t, const Polynomial& init) {
    return t < 0 ? init : v[static_cast<std::size_t>(t)];
  };
  pr[0] = Polynomial::one();
  qr[0] = Polynomial::zero();
  for (int i = 1; i <= N; ++i) {
    const Polynomial zm = e.steps[static_cast<std::size_t>(i - 1)].m.shifted_up(1);
    pr[static_cast<std::size_t>(2 * i - 1)] =
        -(zm * pr[static_cast<std::size_t>(2 * i - 2)]) + prev(pr, 2 * i - 3, Polynomial::zero());
    qr[static_cast<std::size_t>(2 * i - 1)] =
        -(zm * qr[static_cast<std::size_t>(2 * i - 2)]) + prev(qr, 2 * i - 3, Polynomial::one());
    if (2 * i <= top) {
      Polynomial li(*e.steps[static_cast<std::size_t>(i - 1)].l);
      pr[static_cast<std::size_t>(2 * i)] =
          li * pr[static_cast<std::size_t>(2 * i - 1)] + pr[static_cast<std::size_t>(2 * i - 2)];
      qr[static_cast<std::size_t>(2 * i)] =
          li * qr[static_cast<std::size_t>(2 * i - 1)] + qr[static_cast<std::size_t>(2 * i - 2)];
    }
  }
  check_internal(sys.pp == pr && sys.qq == qr,
                 "determinant and recurrence routes to the Stieltjes polynomials disagree");

  for (int j = 1; j <= N; ++j) {
    check_internal(sys.pp[static_cast<std::size_t>(2 * j - 1)].degree() ==
                       std::optional<int>(os.n[static_cast<std::size_t>(j)]),
                   "P+_{2j-1} degree is off");
    check_internal(sys.qq[static_cast<std::size_t>(2 * j - 1)].degree() ==
                       std::optional<int>(os.n[static_cast<std::size_t>(j)] - os.n[1]),
                   "Q+_{2j-1} degree is off");
    if (2 * j <= top) {
      check_internal(sys.pp[static_cast<std::size_t>(2 * j)].degree() ==
                         std::optional<int>(os.n[static_cast<std::size_t>(j)]),
                     "P+_{2j} degree is off");
      check_internal(sys.qq[static_cast<std::size_t>(2 * j)].degree() ==
                         std::optional<int>(os.n[static_cast<std::size_t>(j)] - os.n[1]),
                     "Q+_{2j} degree is off");
    }
  }
  return sys;
}

// The closed evaluations of P_{n_j}(0) in terms of the factor data.  All of
// them are consequences of the recurrences; they hold whenever l_j exists
// for the indices they mention.
inline void verify_zero_value_identities(const SchurExpansion& e, const OrthogonalSystem& os) {
  int N = e.step_count();
  int with_l = e.parity == Parity::even ? N : N - 1;
  auto p0 = [&](int j) { return os.p[static_cast<std::size_t>(j)].eval(Rational(0)); };
  auto d = [&](int j) { return e.steps[static_cast<std::size_t>(j - 1)].m.leading_coeff(); };
  auto l = [&](int j) { return *e.steps[static_cast<std::size_t>(j - 1)].l; };

  Rational dl(1);
  for (int j = 1; j <= with_l; ++j) {
    dl *= d(j) * l(j);
    Rational expect = dl.reciprocal();
    if (j % 2 == 1) expect = -expect;
    check_internal(p0(j) == expect, "P_{n_j}(0) product form failed");
  }
  Rational bp(1);
  for (int j = 0; j + 1 <= N; ++j) {
    bp *= os.b[static_cast<std::size_t>(j)];
    check_internal(p0(j) * p0(j) == d(j + 1) * bp, "P_{n_j}(0)^2 product form failed");
  }
  Rational bq(1);
  for (int j = 1; j <= with_l; ++j) {
    bq *= os.b[static_cast<std::size_t>(j - 1)];
    check_internal(p0(j - 1) * p0(j) == -(bq / l(j)), "adjacent zero-value product form failed");
  }
}

}  // namespace stieltjes
