#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stieltjes/report.hpp"

namespace stieltjes {
namespace selftest {

// SplitMix-style generator: tiny, seedable, and identical on every platform,
// which keeps --seed N byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    s_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // inclusive on both ends
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bit() { return (next() & 1) != 0; }

 private:
  std::uint64_t s_;
};

struct GenOptions {
  int min_steps = 1;
  int max_steps = 4;
  int max_deg = 3;
  long coeff_cap = 9;   // usual numerator/denominator bound
  long big_cap = 100;   // occasionally stretched to this
  int big_one_in = 16;
};

inline Rational random_rational(Rng& rng, const GenOptions& opt, bool nonzero) {
  long cap = rng.range(1, opt.big_one_in) == 1 ? opt.big_cap : opt.coeff_cap;
  long num = rng.range(static_cast<int>(-cap), static_cast<int>(cap));
  while (nonzero && num == 0) num = rng.range(static_cast<int>(-cap), static_cast<int>(cap));
  return Rational(num, static_cast<long>(rng.range(1, static_cast<int>(cap))));
}

inline Polynomial random_poly(Rng& rng, int deg, const GenOptions& opt) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng, opt, false);
  c[static_cast<std::size_t>(deg)] = random_rational(rng, opt, true);
  return Polynomial(std::move(c));
}

// A freely chosen factor chain and the moments it generates.  Degrees of the
// m_j are arbitrary, the l_j are nonzero constants, so the induced sequence
// is regular and the chain is exactly what schur_expand must give back.
struct SyntheticExpansion {
  Parity parity = Parity::even;
  std::vector<Polynomial> m;
  std::vector<Rational> l;  // one fewer entry than m when the parity is odd
  std::vector<Rational> moments;
};

inline SyntheticExpansion random_expansion(Rng& rng, const GenOptions& opt) {
  SyntheticExpansion g;
  g.parity = rng.bit() ? Parity::even : Parity::odd;
  int steps = rng.range(opt.min_steps, opt.max_steps);
  int n_top = 0;
  PolyMatrix2 w = PolyMatrix2::identity();
  for (int j = 1; j <= steps; ++j) {
    // keep most degrees low so block orders stay desk-sized
    int deg = rng.range(0, rng.range(1, 3) == 1 ? opt.max_deg : 1);
    g.m.push_back(random_poly(rng, deg, opt));
    n_top += deg + 1;
    w = w * m_factor(g.m.back());
    if (j < steps || g.parity == Parity::even) {
      g.l.push_back(random_rational(rng, opt, true));
      w = w * l_factor(Polynomial(g.l.back()));
    }
  }
  int ell = g.parity == Parity::even ? 2 * n_top - 1 : 2 * n_top - 2;
  RationalFunction f = lft_apply(w, g.parity == Parity::even ? Parameter(RationalFunction())
                                                             : Parameter(Infinity{}));
  g.moments = moments_from_tail(laurent_expand_at_infinity(f, -(ell + 2)), ell);
  return g;
}

// Runs the recovery side of the round trip; every internal cross-check of
// the pipeline fires along the way.  Throws on any disagreement.
inline SchurExpansion verify_round_trip(const SyntheticExpansion& g) {
  SchurExpansion e = schur_expand(MomentSequence(g.moments));
  check_internal(e.parity == g.parity, "round trip changed the parity");
  check_internal(e.step_count() == static_cast<int>(g.m.size()),
                 "round trip changed the number of steps");
  std::size_t li = 0;
  for (std::size_t j = 0; j < g.m.size(); ++j) {
    check_internal(e.steps[j].m == g.m[j], "round trip changed m_" + std::to_string(j + 1));
    if (e.steps[j].l) {
      check_internal(li < g.l.size() && *e.steps[j].l == g.l[li],
                     "round trip changed l_" + std::to_string(j + 1));
      ++li;
    }
  }
  check_internal(li == g.l.size(), "round trip dropped an l factor");
  return e;
}

// Congruence reduction against the Sturm-sequence count of negative
// eigenvalues of the characteristic polynomial: two unrelated routes to the
// inertia of a rational symmetric matrix.
inline void verify_inertia_oracle(const SymmetricMatrix& m) {
  Inertia a = inertia(m);
  Inertia b = sturm_inertia(m);
  check_internal(a == b, "congruence and Sturm inertia disagree");
}

inline SymmetricMatrix random_symmetric(Rng& rng, const GenOptions& opt, int max_order) {
  int n = rng.range(1, max_order);
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = random_rational(rng, opt, false);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

// T(c) T(d) = I by explicit matrix multiplication, plus the involution.
inline void verify_toeplitz_case(const std::vector<Rational>& c) {
  std::vector<Rational> d = toeplitz_reciprocal(c);
  Matrix a = toeplitz_matrix(c), b = toeplitz_matrix(d);
  int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      check_internal(acc == Rational(i == j ? 1 : 0), "T(c) T(d) is not the identity");
    }
  check_internal(toeplitz_reciprocal(d) == c, "reciprocal is not an involution");
}

// Positive discrete measure: distinct positive atoms with positive weights.
struct DiscreteMeasure {
  std::vector<Rational> atoms;
  std::vector<Rational> weights;

  std::vector<Rational> moments(int ell) const {
    std::vector<Rational> s(static_cast<std::size_t>(ell) + 1);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      Rational p(1);
      for (int j = 0; j <= ell; ++j) {
        s[static_cast<std::size_t>(j)] += weights[i] * p;
        p = p * atoms[i];
      }
    }
    return s;
  }
};

inline DiscreteMeasure random_measure(Rng& rng, int max_atoms) {
  DiscreteMeasure mu;
  int n = rng.range(1, max_atoms);
  while (static_cast<int>(mu.atoms.size()) < n) {
    Rational t(static_cast<long>(rng.range(1, 40)), static_cast<long>(rng.range(1, 8)));
    bool fresh = true;
    for (const auto& a : mu.atoms) fresh = fresh && !(a == t);
    if (fresh) mu.atoms.push_back(t);
  }
  for (int i = 0; i < n; ++i)
    mu.weights.push_back(Rational(static_cast<long>(rng.range(1, 12)),
                                  static_cast<long>(rng.range(1, 6))));
  return mu;
}

// The classical case: a positive measure with n atoms gives an expansion
// with positive constant masses and lengths, zero index counts, and a top
// convergent reproducing every moment.
inline void verify_classical_case(const DiscreteMeasure& mu) {
  int n = static_cast<int>(mu.atoms.size());
  MomentSequence s(mu.moments(2 * n - 1));
  SchurExpansion e = schur_expand(s);
  check_internal(e.parity == Parity::even && e.n_top() == n,
                 "positive measure produced the wrong block structure");
  for (const auto& st : e.steps) {
    check_internal(st.m.is_constant() && st.m.leading_coeff().sign() > 0,
                   "positive measure produced a non-positive mass");
    check_internal(st.l && st.l->sign() > 0, "positive measure produced a non-positive length");
  }
  check_internal(e.kappa == 0 && e.k == 0, "positive measure has nonzero index counts");

  OrthogonalSystem os = orthogonal_system(e);
  StieltjesSystem sys = stieltjes_system(e, os);
  verify_zero_value_identities(e, os);
  verify_factorization(e, sys);
  RationalFunction f = convergent(sys, sys.top());
  check_internal(tail_matches_moments(laurent_expand_at_infinity(f, -(s.ell() + 2)), s.values()),
                 "top convergent does not reproduce the moments");

  // the measure itself is the ground truth: f must equal sum w_i / (t_i - z)
  RationalFunction direct;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    direct = direct + RationalFunction(Polynomial(mu.weights[i]),
                                       Polynomial(std::vector<Rational>{mu.atoms[i], Rational(-1)}));
  check_internal(f == direct, "solution differs from the generating measure's transform");
}

// Basic-step closed forms for one nu and sign; parity even also checks the
// constant-l determinant form.  All assertions live inside the step calls.
inline void verify_basic_forms(int nu, int sign, Parity parity) {
  std::vector<Rational> v(static_cast<std::size_t>(2 * nu - 1));
  v[static_cast<std::size_t>(nu - 1)] = Rational(sign);
  if (parity == Parity::odd) {
    BasicOddStep r = basic_odd_step(MomentSequence(v));
    check_internal(r.nu1 == nu, "basic odd step found the wrong index");
  } else {
    v.push_back(Rational(sign));  // corner entry: makes det S+_nu nonzero
    BasicEvenStep r = basic_even_step(MomentSequence(v));
    check_internal(r.nu1 == nu && r.mu1 == nu, "basic even step found the wrong index");
  }
}

struct SuiteResult {
  std::string name;
  int cases = 0;
  bool passed = true;
  std::string detail;
  json counterexample = nullptr;
};

namespace detail {

template <typename Fn>
SuiteResult run_suite(const std::string& name, int cases, Fn&& one_case) {
  SuiteResult r;
  r.name = name;
  r.cases = cases;
  for (int i = 0; i < cases && r.passed; ++i) {
    try {
      one_case(i);
    } catch (const error& e) {
      r.passed = false;
      r.detail = std::string(e.what()) + " (case " + std::to_string(i) + ")";
    }
  }
  return r;
}

}  // namespace detail

// The full invariant corpus at desk scale.  inject_fault corrupts one
// synthesized sequence on purpose, to prove the harness reports failures
// with a replayable counterexample.
inline json run_selftest(std::uint64_t seed, bool inject_fault, bool* all_passed_out = nullptr) {
  GenOptions opt;
  std::vector<SuiteResult> suites;

  {
    Rng rng(seed ^ 0x1001);
    suites.push_back(detail::run_suite("toeplitz-reciprocal", 200, [&](int) {
      int len = rng.range(1, 9);
      std::vector<Rational> c(static_cast<std::size_t>(len));
      c[0] = random_rational(rng, opt, true);
      for (int i = 1; i < len; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng, opt, false);
      verify_toeplitz_case(c);
    }));
  }
  {
    Rng rng(seed ^ 0x2002);
    suites.push_back(detail::run_suite("inertia-oracle", 150, [&](int) {
      verify_inertia_oracle(random_symmetric(rng, opt, 6));
    }));
  }
  {
    Rng rng(seed ^ 0x3003);
    json counter;
    SuiteResult r = detail::run_suite("expansion-round-trip", 60, [&](int i) {
      SyntheticExpansion g = random_expansion(rng, opt);
      if (inject_fault && i == 0) g.moments.back() += Rational(1);
      try {
        verify_round_trip(g);
      } catch (const error&) {
        // replayable: feed these moments back through expand
        if (counter.is_null()) counter = json{{"moments", sequence_json(g.moments)}};
        throw;
      }
    });
    r.counterexample = counter;
    suites.push_back(std::move(r));
  }
  {
    suites.push_back(detail::run_suite("basic-closed-forms", 25, [&](int i) {
      if (i == 24) {
        // polynomial-l branch of the even basic problem
        BasicEvenStep r = basic_even_step(MomentSequence(std::vector<Rational>{
            Rational(0), Rational(1), Rational(0), Rational(0), Rational(1), Rational(0)}));
        check_internal(r.nu1 == 2 && r.mu1 == 3 && r.l == Polynomial::monomial(Rational(1), 1),
                       "polynomial-l basic even step came out wrong");
        return;
      }
      int nu = i / 4 + 1;                        // 1..6
      int sign = (i % 4) / 2 == 0 ? 1 : -1;      // +,-
      Parity parity = i % 2 == 0 ? Parity::odd : Parity::even;
      verify_basic_forms(nu, sign, parity);
    }));
  }
  {
    Rng rng(seed ^ 0x4004);
    suites.push_back(detail::run_suite("classical-strings", 25, [&](int) {
      verify_classical_case(random_measure(rng, 4));
    }));
  }
  {
    suites.push_back(detail::run_suite("report-determinism", 3, [&](int i) {
      json in;
      if (i == 0) in = {{"moments", {"1", "1", "2", "6"}}};
      if (i == 1) in = {{"moments", {"0", "1", "0", "0"}}, {"parity", "odd"}};
      if (i == 2)
        in = {{"moments", {"1", "1"}},
              {"tau", {{"num", json::array()}, {"den", {"1"}}}}};
      ProblemInput pi = parse_problem_input(in);
      json a = i == 0 ? cmd_expand(pi) : i == 1 ? cmd_analyze(pi) : cmd_solve(pi);
      json b = i == 0 ? cmd_expand(pi) : i == 1 ? cmd_analyze(pi) : cmd_solve(pi);
      check_internal(a.dump() == b.dump(), "report is not byte-deterministic");
    }));
  }

  bool all = true;
  json out;
  out["command"] = "selftest";
  out["seed"] = seed;
  if (inject_fault) out["fault_injected"] = true;
  json js = json::array();
  for (const auto& s : suites) {
    all = all && s.passed;
    json one = {{"name", s.name}, {"cases", s.cases}, {"passed", s.passed}};
    if (!s.passed) one["detail"] = s.detail;
    if (!s.counterexample.is_null()) one["counterexample"] = s.counterexample;
    js.push_back(std::move(one));
  }
  out["suites"] = js;
  out["all_passed"] = all;
  if (all_passed_out) *all_passed_out = all;
  return out;
}

}  // namespace selftest
}  // namespace stieltjes
