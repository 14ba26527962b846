#pragma once

#include <vector>

#include "stieltjes/laurent.hpp"
#include "stieltjes/stieltjes_polynomials.hpp"

namespace stieltjes {

// Left-to-right product of the expansion's factors, M_1 L_1 M_2 L_2 ...
// (the terminal L is absent for odd problems).
inline PolyMatrix2 factor_product(const SchurExpansion& e) {
  PolyMatrix2 w = PolyMatrix2::identity();
  for (const auto& st : e.steps) {
    w = w * m_factor(st.m);
    if (st.l) w = w * l_factor(Polynomial(*st.l));
  }
  return w;
}

// The same matrix assembled from the Stieltjes polynomials:
//   W_{2j-1} = [[Q+_{2j-1}, Q+_{2j-2}], [P+_{2j-1}, P+_{2j-2}]]
//   W_{2j}   = [[Q+_{2j-1}, Q+_{2j}],   [P+_{2j-1}, P+_{2j}]]
inline PolyMatrix2 solution_matrix(const StieltjesSystem& sys, int t) {
  check_internal(t >= 1 && t <= sys.top(), "solution matrix index out of range");
  std::size_t hi = static_cast<std::size_t>(t % 2 == 1 ? t : t - 1);
  std::size_t lo = static_cast<std::size_t>(t % 2 == 1 ? t - 1 : t);
  return {sys.qq[hi], sys.qq[lo], sys.pp[hi], sys.pp[lo]};
}

// Checks every partial product of the factor chain against its polynomial
// form and the unimodularity det W = 1, then returns the full matrix.
inline PolyMatrix2 verify_factorization(const SchurExpansion& e, const StieltjesSystem& sys) {
  PolyMatrix2 w = PolyMatrix2::identity();
  int t = 0;
  for (const auto& st : e.steps) {
    w = w * m_factor(st.m);
    ++t;
    check_internal(w == solution_matrix(sys, t), "factor product left its polynomial form");
    check_internal(w.det() == Polynomial::one(), "factor product is not unimodular");
    if (st.l) {
      w = w * l_factor(Polynomial(*st.l));
      ++t;
      check_internal(w == solution_matrix(sys, t), "factor product left its polynomial form");
      check_internal(w.det() == Polynomial::one(), "factor product is not unimodular");
    }
  }
  check_internal(t == sys.top(), "factor chain and polynomial chain have different lengths");
  return w;
}

// The t-th convergent of the continued fraction: Q+_t / P+_t.  Even t is
// the tau = 0 evaluation of W_t, odd t the tau = infinity one; the 2j-th
// convergent reproduces the moments s_0 .. s_{2 n_j - 1}.
inline RationalFunction convergent(const StieltjesSystem& sys, int t) {
  check_internal(t >= 1 && t <= sys.top(), "convergent index out of range");
  return RationalFunction(sys.qq[static_cast<std::size_t>(t)], sys.pp[static_cast<std::size_t>(t)]);
}

// A solved instance: the solution f = T_W[tau] for one admissible tau,
// re-expanded at infinity to confirm it generates the prescribed moments.
struct SolutionDescription {
  PolyMatrix2 w;
  RationalFunction f;
  std::vector<Rational> recovered;  // moments read back from the expansion of f
};

inline SolutionDescription describe_solution(const SchurExpansion& e, const Parameter& tau) {
  require_admissible(e.parity, tau);
  OrthogonalSystem os = orthogonal_system(e);
  StieltjesSystem sys = stieltjes_system(e, os);
  verify_zero_value_identities(e, os);

  SolutionDescription out;
  out.w = verify_factorization(e, sys);
  out.f = lft_apply(out.w, tau);

  LaurentTail tail = laurent_expand_at_infinity(out.f, -(e.input.ell() + 2));
  check_internal(tail_matches_moments(tail, e.input.values()),
                 "solution does not expand to the prescribed moments");
  out.recovered = moments_from_tail(tail, e.input.ell());
  return out;
}

// Reading of the factor chain as a string: the m_j are masses, the l_j are
// lengths.  All factors constant and positive is the classical case (and
// coincides with kappa = k = 0); constants of mixed sign give a signed
// string; any factor of positive degree makes a generalized (multipole)
// string.
enum class StringClass { classical, mixed_sign, multipole };

inline const char* string_class_name(StringClass c) {
  switch (c) {
    case StringClass::classical: return "classical";
    case StringClass::mixed_sign: return "signed";
    default: return "multipole";
  }
}

struct StringData {
  StringClass cls = StringClass::classical;
  std::vector<Polynomial> masses;
  std::vector<Polynomial> lengths;
};

inline StringData string_data(const SchurExpansion& e) {
  StringData out;
  bool constant = true;
  bool positive = true;
  for (const auto& st : e.steps) {
    out.masses.push_back(st.m);
    if (!st.m.is_constant()) constant = false;
    if (st.m.leading_coeff().sign() < 0) positive = false;
    if (st.l) {
      out.lengths.push_back(Polynomial(*st.l));
      if (st.l->sign() < 0) positive = false;
    }
  }
  out.cls = !constant ? StringClass::multipole
                      : (positive ? StringClass::classical : StringClass::mixed_sign);
  check_internal((out.cls == StringClass::classical) == (e.kappa == 0 && e.k == 0),
                 "string classification disagrees with the index counts");
  return out;
}

}  // namespace stieltjes
