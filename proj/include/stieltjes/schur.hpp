#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/poly_matrix.hpp"
#include "stieltjes/step_invariants.hpp"

namespace stieltjes {

// A moment sequence poses an odd problem (an odd number of prescribed
// moments, free tail) or an even one; parity is read off the length.
inline Parity parity_of_length(int ell) { return ell % 2 == 0 ? Parity::odd : Parity::even; }

struct SchurStep {
  int nu = 0;  // order consumed by this step: n_j - n_{j-1}
  int n = 0;   // cumulative normal index n_j
  Rational b;  // pivot moment of the stage sequence
  Polynomial a;
  Polynomial m;
  std::optional<Rational> l;  // absent on the terminal step of an odd problem
  FrakSequence frak;
  int kappa_zm = 0;  // negative index of z m
  int kappa_m = 0;   // negative index of m
  int kappa_zl = 0;  // negative index of z l (0 when l is absent)
  int kappa_l = 0;   // negative index of l (0 for the constant l of a regular chain)
};

struct SchurExpansion {
  MomentSequence input;
  Parity parity = Parity::odd;
  std::vector<SchurStep> steps;
  std::vector<std::vector<Rational>> intermediates;  // stage sequences after each l-step
  int kappa = 0;  // sum of kappa_-(z m_j); the least kappa for which the problem is solvable
  int k = 0;      // sum of kappa_-(m_j) + kappa_-(z l_j); the least k
  std::optional<Rational> free_tail_used;  // odd problems: the s_{2 n_N - 1} stand-in
  NormalIndexReport report;

  int step_count() const { return static_cast<int>(steps.size()); }
  int n_top() const { return steps.back().n; }
};

// Full step-by-step expansion of a regular sequence into the alternating
// m/l factor chain.  The data must stop exactly at a normal index: an odd
// problem ends one entry short of the square block (the free tail fills the
// corner of a_N only), an even problem ends flush with the shifted block.
// Progress past the last normal index means the tail is degenerate and no
// expansion of any length exists.
inline SchurExpansion schur_expand(const MomentSequence& s,
                                   std::optional<Rational> free_tail = std::nullopt) {
  SchurExpansion e;
  e.input = s;
  e.parity = parity_of_length(s.ell());
  e.report = normal_indices(s);

  int n_top = e.report.indices.back();
  if (s.ell() > 2 * n_top - 1)
    fail(errc::no_normal_index,
         "degenerate tail: the data extend past the last normal index " + std::to_string(n_top),
         n_top);

  std::vector<Rational> rem = s.values();
  int n_prev = 0;
  while (!rem.empty()) {
    MomentSequence cur(rem);
    int nu = first_normal_index(cur);
    SchurStep st;
    st.nu = nu;
    st.n = n_prev + nu;

    bool boundary = cur.ell() == 2 * nu - 2;
    StepDownResult sd = step_down_m(cur, nu, boundary ? free_tail : std::nullopt);
    st.b = sd.b;
    st.a = sd.a;
    st.m = sd.m;
    st.frak = sd.frak;
    st.kappa_zm = poly_negative_index(st.m.shifted_up(1));
    st.kappa_m = poly_negative_index(st.m);

    if (boundary) {
      e.free_tail_used = sd.free_tail_used;
      verify_step_down_inertia(cur, nu, sd.frak);
      e.steps.push_back(std::move(st));
      break;
    }

    // second route to the same stepped sequence, through closed determinant
    // formulas instead of forward substitution
    check_internal(sd.frak.raw() == explicit_frak_s(cur, nu).raw(),
                   "step-down and determinant evaluations of frak_s disagree");

    if (sd.frak.at(-1).is_zero())
      fail(errc::not_regular,
           "sequence is not regular: the shifted Hankel determinant vanishes at normal index " +
               std::to_string(st.n),
           st.n);

    StepDownLResult ld = step_down_l(sd.frak);
    verify_step_down_inertia(cur, nu, sd.frak, ld.next);
    st.l = ld.l;
    Polynomial lp(ld.l);
    st.kappa_l = poly_negative_index(lp);
    st.kappa_zl = poly_negative_index(lp.shifted_up(1));
    e.steps.push_back(std::move(st));

    rem = ld.next;
    n_prev += nu;
    if (!rem.empty()) e.intermediates.push_back(rem);
  }

  for (const auto& st : e.steps) {
    e.kappa += st.kappa_zm;
    e.k += st.kappa_m + st.kappa_zl;
  }

  // bookkeeping against the input-side reports: the indices visited are the
  // normal indices, the sequence is regular, and the summed factor indices
  // match the Hankel inertias
  std::vector<int> visited;
  for (const auto& st : e.steps) visited.push_back(st.n);
  check_internal(visited == e.report.indices, "expansion visited the wrong index set");
  check_internal(e.report.regular, "expansion succeeded on a non-regular sequence");
  check_internal((e.steps.back().l.has_value()) == (e.parity == Parity::even),
                 "terminal factor type disagrees with the parity");
  SolvabilityIndices si = solvability_indices(s, e.parity);
  check_internal(e.kappa == si.kappa && e.k == si.k,
                 "summed factor indices disagree with the Hankel inertia counts");
  return e;
}

// One-step solution of the basic odd problem (a single normal index nu_1,
// data s_0..s_{2 nu_1 - 2}): f = -1/(z m_1(z) - 1/tau) runs over all
// solutions of the minimal-index problem as tau runs over the admissible
// parameters.
struct BasicOddStep {
  int nu1 = 0;
  StepDownResult step;
  PolyMatrix2 w;  // [[1,0],[-z m_1, 1]]
  int kappa1 = 0;
  int k1 = 0;
};

inline BasicOddStep basic_odd_step(const MomentSequence& s,
                                   std::optional<Rational> free_tail = std::nullopt) {
  int nu = first_normal_index(s);
  if (s.ell() != 2 * nu - 2)
    fail(errc::not_applicable,
         "not a basic odd problem: the data do not stop at 2 nu_1 - 2 for nu_1 = " +
             std::to_string(nu),
         nu);
  BasicOddStep out;
  out.nu1 = nu;
  out.step = step_down_m(s, nu, free_tail);
  out.w = m_factor(out.step.m);
  out.kappa1 = poly_negative_index(out.step.m.shifted_up(1));
  out.k1 = poly_negative_index(out.step.m);

  // closed forms: both indices depend only on nu_1 and the sign of s_{nu_1-1}
  bool neg = out.step.b.sign() < 0;
  int expect_kappa = (nu % 2 == 1 && neg) ? (nu + 1) / 2 : nu / 2;
  int expect_k = (nu % 2 == 0 && neg) ? nu / 2 : (nu - 1) / 2;
  check_internal(out.kappa1 == expect_kappa, "kappa_1 closed form failed");
  check_internal(out.k1 == expect_k, "k_1 closed form failed");
  check_internal(out.kappa1 - out.k1 ==
                     (((nu % 2 == 1) && neg) || ((nu % 2 == 0) && !neg) ? 1 : 0),
                 "kappa_1 - k_1 closed form failed");

  // inertia route to the same indices
  check_internal(out.kappa1 == inertia(hankel(s, nu, 0)).nu_minus,
                 "kappa_1 disagrees with the Hankel inertia");
  check_internal(out.k1 == inertia(hankel(s, nu - 1, +1)).nu_minus,
                 "k_1 disagrees with the shifted Hankel inertia");
  return out;
}

// One-step solution of the basic even problem (data s_0..s_{2 mu_1 - 1},
// where mu_1 is the smallest n with both det S_n != 0 and det S+_n != 0).
// The l-factor is the constant 1/frak_s(-1) when mu_1 = nu_1 and a
// polynomial of degree mu_1 - nu_1 otherwise.
struct BasicEvenStep {
  int nu1 = 0;
  int mu1 = 0;
  StepDownResult step;
  Polynomial l;
  PolyMatrix2 w;  // [[1, l_1], [-z m_1, -z m_1 l_1 + 1]]
  int kappa1 = 0;
  int k1_plus = 0;
};

inline BasicEvenStep basic_even_step(const MomentSequence& s) {
  if (s.ell() % 2 == 0)
    fail(errc::not_applicable, "not an even problem: an even number of moments is required");
  int mu = 0;
  for (int n = 1; 2 * n - 1 <= s.ell(); ++n)
    if (!hankel_det(s, n, 0).is_zero() && !hankel_det(s, n, +1).is_zero()) {
      mu = n;
      break;
    }
  if (mu == 0)
    fail(errc::not_basic_form,
         "not a basic even problem: no index with nonzero Hankel and shifted Hankel "
         "determinants fits the data");
  if (s.ell() != 2 * mu - 1)
    fail(errc::not_applicable,
         "not a basic even problem: the data do not stop at 2 mu_1 - 1 for mu_1 = " +
             std::to_string(mu),
         mu);

  BasicEvenStep out;
  out.mu1 = mu;
  out.nu1 = first_normal_index(s);
  out.step = step_down_m(s, out.nu1);
  check_internal(out.step.frak.raw() == explicit_frak_s(s, out.nu1).raw(),
                 "step-down and determinant evaluations of frak_s disagree");

  if (out.nu1 == mu) {
    check_internal(!out.step.frak.at(-1).is_zero(), "frak_s(-1) = 0 at a mu-type index");
    StepDownLResult ld = step_down_l(out.step.frak);
    check_internal(ld.next.empty(), "basic even step left data behind");
    verify_step_down_inertia(s, out.nu1, out.step.frak, ld.next);
    out.l = Polynomial(ld.l);
    // determinant route: l_1 = (-1)^(nu_1+1) s_{nu_1-1} det S_nu / det S+_nu
    Rational closed = out.step.b * hankel_det(s, out.nu1, 0) / hankel_det(s, out.nu1, +1);
    if (out.nu1 % 2 == 0) closed = -closed;
    check_internal(ld.l == closed, "constant l closed form failed");
  } else {
    check_internal(out.step.frak.at(-1).is_zero(), "frak_s(-1) != 0 below the mu-type index");
    StepDownLPolyResult lp = step_down_l_poly(out.step.frak);
    check_internal(out.nu1 + lp.delta == mu, "polynomial l degree disagrees with mu_1 - nu_1");
    check_internal(lp.next.empty(), "basic even step left data behind");
    verify_step_down_inertia(s, out.nu1, out.step.frak);
    out.l = lp.l;

    // determinant route: l(z) as a bordered Hankel determinant of the
    // stepped sequence, expanded along its polynomial row
    int d = lp.delta;
    Rational scale = out.step.frak.at(d - 1) * determinant(frak_hankel(out.step.frak, d, 0).as_matrix());
    for (int j = 0; j <= d; ++j) {
      Matrix minor(d, d);
      for (int i = 0; i < d; ++i)
        for (int q = 0; q < d; ++q) minor.at(i, q) = out.step.frak.at(i + (q < j ? q : q + 1));
      Rational cj = determinant(minor) / scale;
      if ((d + j) % 2 == 1) cj = -cj;
      check_internal(out.l.coeff(j) == cj, "polynomial l bordered determinant form failed");
    }
  }

  out.w = m_factor(out.step.m) * l_factor(out.l);
  PolyMatrix2 closed_w{Polynomial::one(), out.l, -out.step.m.shifted_up(1),
                       -(out.step.m.shifted_up(1) * out.l) + Polynomial::one()};
  check_internal(out.w == closed_w, "basic even factorization closed form failed");

  out.kappa1 = poly_negative_index(out.step.m.shifted_up(1)) + poly_negative_index(out.l);
  out.k1_plus = poly_negative_index(out.step.m) + poly_negative_index(out.l.shifted_up(1));
  check_internal(out.kappa1 == inertia(hankel(s, mu, 0)).nu_minus,
                 "kappa_1 disagrees with the Hankel inertia");
  check_internal(out.k1_plus == inertia(hankel(s, mu, +1)).nu_minus,
                 "k_1^+ disagrees with the shifted Hankel inertia");
  return out;
}

// Admissible terminal parameters: odd problems need 1/tau(z) = o(z) at
// infinity (any nonzero rational with deg num >= deg den, or infinity),
// even problems need tau(z) = o(1) (deg num < deg den, zero allowed).
inline bool parameter_admissible(Parity parity, const Parameter& tau) {
  if (parity == Parity::odd) {
    if (is_infinity(tau)) return true;
    const auto& f = std::get<RationalFunction>(tau);
    if (f.is_zero()) return false;
    return *f.num().degree() >= *f.den().degree();
  }
  if (is_infinity(tau)) return false;
  const auto& f = std::get<RationalFunction>(tau);
  return f.is_zero() || *f.num().degree() < *f.den().degree();
}

inline void require_admissible(Parity parity, const Parameter& tau) {
  if (parameter_admissible(parity, tau)) return;
  if (parity == Parity::odd)
    fail(errc::inadmissible_parameter,
         "odd problems need 1/tau = o(z): tau must be infinity or a nonzero rational "
         "function with numerator degree >= denominator degree");
  fail(errc::inadmissible_parameter,
       "even problems need tau = o(1): a rational function with numerator degree < "
       "denominator degree (zero allowed, infinity not)");
}

// Whether the problem with the given index budget has a solution at all:
// it does exactly when both budgets clear the summed factor indices.
struct SolvabilityCheck {
  bool solvable = false;
  int kappa_required = 0;
  int k_required = 0;
};

inline SolvabilityCheck check_solvable(const SchurExpansion& e, int kappa, int k) {
  return {kappa >= e.kappa && k >= e.k, e.kappa, e.k};
}

}  // namespace stieltjes
