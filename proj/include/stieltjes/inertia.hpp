#pragma once

#include <vector>

#include "stieltjes/matrix.hpp"
#include "stieltjes/polynomial.hpp"

namespace stieltjes {

// Eigenvalue sign counts (nu_minus, nu_zero, nu_plus); invariant under
// congruence by Sylvester's law.
struct Inertia {
  int nu_minus = 0;
  int nu_zero = 0;
  int nu_plus = 0;

  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.nu_minus == b.nu_minus && a.nu_zero == b.nu_zero && a.nu_plus == b.nu_plus;
  }
  friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
};

// Inertia by symmetric congruence reduction: 1x1 pivots on a nonzero
// diagonal entry; when the whole remaining diagonal vanishes, a 2x2 pivot on
// an off-diagonal block [[0,a],[a,0]], which contributes (1,0,1).  Exact.
inline Inertia inertia(const SymmetricMatrix& sym) {
  int n = sym.order();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = sym.at(i, j);

  auto swap_rc = [&](int a, int b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };

  Inertia out;
  int cur = 0;
  while (cur < n) {
    int piv = -1;
    for (int i = cur; i < n; ++i)
      if (!m[i][i].is_zero()) { piv = i; break; }

    if (piv >= 0) {
      swap_rc(piv, cur);
      Rational p = m[cur][cur];
      if (p.sign() > 0) ++out.nu_plus; else ++out.nu_minus;
      std::vector<Rational> row(m[cur]);  // frozen pivot row
      for (int i = cur + 1; i < n; ++i) {
        Rational f = row[i] / p;
        if (f.is_zero()) continue;
        for (int j = cur + 1; j < n; ++j) m[i][j] -= f * row[j];
      }
      // cleared entries are never read again; no need to zero them out
      cur += 1;
      continue;
    }

    int bi = -1, bj = -1;
    for (int i = cur; i < n && bi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!m[i][j].is_zero()) { bi = i; bj = j; break; }
    if (bi < 0) {  // remaining block is identically zero
      out.nu_zero += n - cur;
      break;
    }
    swap_rc(bi, cur);
    if (bj == cur) bj = bi;  // the swap moved it
    swap_rc(bj, cur + 1);
    Rational a = m[cur][cur + 1];
    std::vector<Rational> row0(m[cur]), row1(m[cur + 1]);
    for (int i = cur + 2; i < n; ++i) {
      Rational u = row0[i] / a;  // = M[i][cur] / a
      Rational v = row1[i] / a;  // = M[i][cur+1] / a
      if (u.is_zero() && v.is_zero()) continue;
      // Schur complement against [[0,a],[a,0]]: D' = D - C B^-1 C^T
      for (int j = cur + 2; j < n; ++j) m[i][j] -= u * row1[j] + v * row0[j];
    }
    ++out.nu_plus;
    ++out.nu_minus;
    cur += 2;
  }
  check_internal(out.nu_minus + out.nu_zero + out.nu_plus == n, "inertia counts do not sum");
  return out;
}

// Frobenius rule: when none of D_1..D_n vanishes, nu_minus(S_n) is the number
// of sign alternations in 1, D_1, ..., D_n.
inline int frobenius_negative_count(const std::vector<Rational>& dets) {
  int flips = 0;
  int prev = 1;
  for (std::size_t i = 0; i < dets.size(); ++i) {
    int sg = dets[i].sign();
    if (sg == 0)
      fail(errc::not_applicable,
           "Frobenius rule needs nonvanishing leading minors; D_" + std::to_string(i + 1) +
               " = 0");
    if (sg != prev) ++flips;
    prev = sg;
  }
  return flips;
}

namespace detail {

// Integer polynomials (ascending, trimmed) for the Sturm chain; positive
// scalar factors never change a sign pattern, so every element is reduced to
// its primitive part.
using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly to_primitive_zpoly(const Polynomial& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  mpz_class l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.denominator());
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
  mpz_class g(0);
  for (const auto& c : out) g = gcd(g, c);
  if (g > 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  ztrim(out);
  return out;
}

// Pseudo-remainder scaled by a positive power of |lc(b)|, then made
// primitive.  Sign-faithful stand-in for the rational remainder.
inline ZPoly signed_prem(ZPoly a, const ZPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  mpz_class lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int k = static_cast<int>(a.size()) - 1 - db;
    mpz_class head = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k + j)] -= head * b[static_cast<std::size_t>(j)];
    ztrim(a);
    if (lb < 0) for (auto& c : a) c = -c;  // keep the multiplier positive
  }
  mpz_class g(0);
  for (const auto& c : a) g = gcd(g, c);
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

inline int sign_at_minus_infinity(const ZPoly& p) {
  int s = sgn(p.back());
  return (p.size() - 1) % 2 == 1 ? -s : s;
}

// Distinct roots of a square-free polynomial in (-inf, 0); the factor z is
// split off first so both evaluation points are non-roots.
inline int sturm_distinct_negative_roots(const Polynomial& squarefree) {
  ZPoly p = to_primitive_zpoly(squarefree);
  if (p.size() <= 1) return 0;
  if (p.front() == 0) p.erase(p.begin());  // root at the origin, at most simple
  if (p.size() <= 1) return 0;

  std::vector<ZPoly> chain;
  chain.push_back(p);
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  ztrim(d);
  chain.push_back(d);
  while (chain.back().size() > 0) {
    ZPoly r = signed_prem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    ztrim(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  auto variations = [&](auto sign_of) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
      int s = sign_of(q);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  int at_minus_inf = variations([](const ZPoly& q) { return sign_at_minus_infinity(q); });
  int at_zero = variations([](const ZPoly& q) { return sgn(q.front()); });
  return at_minus_inf - at_zero;
}

// Yun square-free decomposition: p = prod factors[i]^(i+1) up to a constant.
inline std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.is_zero() || p.is_constant()) return out;
  Polynomial dp = p.derivative();
  Polynomial g = poly_gcd(p, dp);
  Polynomial b = p.divmod(g).quotient;
  Polynomial c = dp.divmod(g).quotient;
  while (!b.is_constant()) {
    Polynomial d = c - b.derivative();
    Polynomial a = poly_gcd(b, d);
    out.push_back(a);
    b = b.divmod(a).quotient;
    c = d.divmod(a).quotient;
  }
  return out;
}

}  // namespace detail

// det(lambda*I - M), monic, by the Faddeev-LeVerrier recurrence.
inline Polynomial characteristic_polynomial(const SymmetricMatrix& sym) {
  int n = sym.order();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Rational(1);
  if (n == 0) return Polynomial(std::move(c));
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = sym.at(i, j);
  auto mul = [n](const Matrix& x, const Matrix& y) {
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc(0);
        for (int t = 0; t < n; ++t) acc += x.at(i, t) * y.at(t, j);
        r.at(i, j) = acc;
      }
    return r;
  };
  // A_1 = A, c_{n-k} = -tr(A_k)/k, A_k = A (A_{k-1} + c_{n-k+1} I)
  Matrix ak = a;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      for (int i = 0; i < n; ++i) ak.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
      ak = mul(a, ak);
    }
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += ak.at(i, i);
    c[static_cast<std::size_t>(n - k)] = -(tr / Rational(k));
  }
  return Polynomial(std::move(c));
}

// Independent inertia oracle: eigenvalue counts read off the characteristic
// polynomial.  nu_zero is the multiplicity of the root 0; negative roots are
// counted (with multiplicity, via the square-free decomposition) by Sturm
// chains on (-inf, 0).  Shares no code path with the congruence reduction.
inline Inertia sturm_inertia(const SymmetricMatrix& sym) {
  Polynomial chi = characteristic_polynomial(sym);
  int n = sym.order();
  Inertia out;
  int low = 0;
  while (low <= n && chi.coeff(low).is_zero()) ++low;
  out.nu_zero = low;

  auto factors = detail::squarefree_factors(chi);
  for (std::size_t i = 0; i < factors.size(); ++i)
    out.nu_minus += static_cast<int>(i + 1) * detail::sturm_distinct_negative_roots(factors[i]);
  out.nu_plus = n - out.nu_zero - out.nu_minus;
  return out;
}

}  // namespace stieltjes
