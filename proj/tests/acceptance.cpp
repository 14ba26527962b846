// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion states its own count so a pass line documents the scale.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "stieltjes/stieltjes.hpp"

using namespace stieltjes;
using selftest::GenOptions;
using selftest::Rng;

namespace {

int failures = 0;

void report(int num, bool passed, const std::string& text) {
  std::cout << "criterion " << num << (passed ? " PASS: " : " FAIL: ") << text << "\n";
  if (!passed) ++failures;
}

template <typename Fn>
void criterion(int num, const std::string& label, Fn&& body) {
  try {
    report(num, true, label + " (" + body() + ")");
  } catch (const error& e) {
    report(num, false, label + ": " + e.what());
  } catch (const std::exception& e) {
    report(num, false, label + ": " + e.what());
  }
}

struct CorpusCase {
  selftest::SyntheticExpansion g;
  SchurExpansion e;
};

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();

  std::vector<CorpusCase> corpus;
  std::vector<SymmetricMatrix> corpus_blocks;

  // 1: random factor chains (up to 4 steps, deg m <= 3, coefficients with
  // numerators and denominators up to 100) must come back out unchanged.
  criterion(1, "round trip of 500 random expansions", [&] {
    Rng rng(0x5eed0001);
    GenOptions opt;
    for (int i = 0; i < 500; ++i) {
      CorpusCase c;
      c.g = selftest::random_expansion(rng, opt);
      c.e = selftest::verify_round_trip(c.g);
      corpus.push_back(std::move(c));
    }
    return std::to_string(corpus.size()) + " cases, m and l recovered exactly";
  });

  // 2: the solution matrix equals the ordered product of its factors at every
  // truncation level, with determinant identically one.
  criterion(2, "factorization identity on the whole corpus", [&] {
    int count = 0;
    for (const auto& c : corpus) {
      OrthogonalSystem os = orthogonal_system(c.e);
      StieltjesSystem sys = stieltjes_system(c.e, os);
      PolyMatrix2 w = verify_factorization(c.e, sys);
      check_internal(w == factor_product(c.e), "chain product mismatch");
      check_internal(w.det() == Polynomial::one(), "determinant is not one");
      ++count;
    }
    return std::to_string(count) + " cases, every partial product and det checked";
  });

  // 3: summed per-factor negative indices equal the Hankel inertia counts of
  // the input, for both parities.
  criterion(3, "index additivity against Hankel inertia", [&] {
    int count = 0;
    for (const auto& c : corpus) {
      int kappa = 0, k = 0;
      for (const auto& st : c.e.steps) {
        kappa += st.kappa_zm + st.kappa_l;
        k += st.kappa_m + st.kappa_zl;
      }
      int n = c.e.n_top();
      check_internal(kappa == inertia(hankel(c.e.input, n, 0)).nu_minus,
                     "kappa does not match nu_minus of the Hankel block");
      int shifted = c.e.parity == Parity::odd
                        ? inertia(hankel(c.e.input, n - 1, +1)).nu_minus
                        : inertia(hankel(c.e.input, n, +1)).nu_minus;
      check_internal(k == shifted, "k does not match nu_minus of the shifted block");
      ++count;
    }
    return std::to_string(count) + " cases, both parities";
  });

  // collect every Hankel block the corpus pipeline consulted, for criterion 4
  for (const auto& c : corpus) {
    for (int n = 1; 2 * n - 2 <= c.e.input.ell(); ++n)
      corpus_blocks.push_back(hankel(c.e.input, n, 0));
    for (int n = 1; 2 * n - 1 <= c.e.input.ell(); ++n)
      corpus_blocks.push_back(hankel(c.e.input, n, +1));
  }

  // 4: two unrelated inertia computations agree: congruence reduction vs the
  // Sturm count on the characteristic polynomial.
  criterion(4, "inertia oracle cross-check", [&] {
    Rng rng(0x5eed0004);
    GenOptions opt;
    for (int i = 0; i < 300; ++i)
      selftest::verify_inertia_oracle(selftest::random_symmetric(rng, opt, 6));
    for (const auto& b : corpus_blocks) selftest::verify_inertia_oracle(b);
    return "300 random symmetric + " + std::to_string(corpus_blocks.size()) +
           " corpus Hankel blocks";
  });

  // 5: triangular Toeplitz reciprocal: T(c) T(d) = I by explicit matrix
  // multiplication, and taking the reciprocal twice returns c.
  criterion(5, "Toeplitz reciprocal identity", [&] {
    Rng rng(0x5eed0005);
    GenOptions opt;
    for (int i = 0; i < 200; ++i) {
      int len = rng.range(1, 9);
      std::vector<Rational> c(static_cast<std::size_t>(len));
      c[0] = selftest::random_rational(rng, opt, true);
      for (int j = 1; j < len; ++j)
        c[static_cast<std::size_t>(j)] = selftest::random_rational(rng, opt, false);
      selftest::verify_toeplitz_case(c);
    }
    return "200 random series, products multiplied out";
  });

  // 6: the step-down inertia relations hold on every intermediate sequence of
  // every corpus case.
  criterion(6, "step-down inertia relations on all intermediates", [&] {
    int steps_checked = 0;
    for (const auto& c : corpus) {
      for (std::size_t j = 0; j < c.e.steps.size(); ++j) {
        MomentSequence prev = j == 0 ? c.e.input : MomentSequence(c.e.intermediates[j - 1]);
        std::optional<std::vector<Rational>> next;
        if (c.e.steps[j].l)
          next = j < c.e.intermediates.size() ? c.e.intermediates[j]
                                              : std::vector<Rational>{};
        verify_step_down_inertia(prev, c.e.steps[j].nu, c.e.steps[j].frak, next);
        ++steps_checked;
      }
    }
    return std::to_string(steps_checked) + " step-downs across the corpus";
  });

  // 7: positive discrete measures give classical strings: constant positive
  // masses and lengths, zero negative indices, and a top convergent equal to
  // the measure's transform.
  criterion(7, "positive measures land in the classical class", [&] {
    Rng rng(0x5eed0007);
    for (int i = 0; i < 50; ++i)
      selftest::verify_classical_case(selftest::random_measure(rng, 4));
    return "50 random measures with up to 4 atoms";
  });

  // 8: closed forms of the one-step basic problems, exhaustively over the
  // first normal index 1..6 and the sign of the pivot moment.
  criterion(8, "basic problem closed forms", [&] {
    int count = 0;
    for (int nu = 1; nu <= 6; ++nu)
      for (int sign : {1, -1}) {
        selftest::verify_basic_forms(nu, sign, Parity::odd);
        selftest::verify_basic_forms(nu, sign, Parity::even);
        count += 2;
      }
    return std::to_string(count) + " (nu, sign, parity) combinations";
  });

  // 9: the worked two-moment example, end to end.
  criterion(9, "two-moment worked example", [&] {
    SchurExpansion e = schur_expand(MomentSequence::parse({"1", "1"}));
    check_internal(e.steps[0].m == Polynomial(Rational(1)), "m_1 != 1");
    check_internal(e.steps[0].l && *e.steps[0].l == Rational(1), "l_1 != 1");
    OrthogonalSystem os = orthogonal_system(e);
    StieltjesSystem sys = stieltjes_system(e, os);
    PolyMatrix2 w = verify_factorization(e, sys);
    Polynomial z = Polynomial::monomial(Rational(1), 1);
    PolyMatrix2 want{Polynomial::one(), Polynomial::one(), -z, Polynomial::one() - z};
    check_internal(w == want, "W_2 is not [[1,1],[-z,1-z]]");
    SolutionDescription d = describe_solution(e, Parameter(RationalFunction()));
    check_internal(d.f == RationalFunction(Polynomial::one(), Polynomial::one() - z),
                   "f(tau=0) is not 1/(1-z)");
    return "m_1 = 1, l_1 = 1, W_2 and f(tau=0) as computed by hand";
  });

  // 10: the three zero-value product identities on every corpus case.
  criterion(10, "zero-value identities on the whole corpus", [&] {
    int count = 0;
    for (const auto& c : corpus) {
      verify_zero_value_identities(c.e, orthogonal_system(c.e));
      ++count;
    }
    return std::to_string(count) + " cases";
  });

  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " in "
            << dt << " ms\n";
  return failures == 0 ? 0 : 1;
}
