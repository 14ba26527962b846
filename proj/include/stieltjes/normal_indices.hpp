#pragma once

#include <algorithm>
#include <vector>

#include "stieltjes/inertia.hpp"

namespace stieltjes {

// Normal indices of a moment sequence: the orders n with det S_n != 0, split
// into the nu-type (det S+_{n-1} != 0 as well) and mu-type (det S+_n != 0 as
// well) subsets.  They interlace: nu_1 <= mu_1 < nu_2 <= mu_2 < ...; every
// normal index belongs to at least one subset.
struct NormalIndexReport {
  std::vector<int> indices;
  std::vector<int> nu_subset;
  std::vector<int> mu_subset;
  // Regularity (nu_j = mu_j throughout) as far as the data determine it:
  // every normal index must be nu-type, and mu-type whenever det S+_n is
  // within reach.  A boundary index whose mu-membership the data cannot
  // decide does not falsify the flag.
  bool regular = true;
};

namespace detail {

// det S+_n when s_{2n-1} lies one past the data.  The missing entry sits only
// in the bottom-right corner, whose cofactor is det S+_{n-1}; when that
// vanishes the determinant does not depend on the missing moment at all, so
// it can be evaluated with a placeholder.  (When the cofactor is nonzero the
// determinant genuinely depends on the free tail and has no data-determined
// value; callers must not ask for it.)
inline Rational boundary_shifted_det(const MomentSequence& s, int n) {
  std::vector<Rational> padded = s.values();
  padded.emplace_back(0);
  return hankel_det(MomentSequence(std::move(padded)), n, +1);
}

}  // namespace detail

inline NormalIndexReport normal_indices(const MomentSequence& s) {
  if (s.all_zero())
    fail(errc::no_normal_index, "all moments vanish; no normal index exists");
  NormalIndexReport rep;
  int top = s.ell() / 2 + 1;  // largest n with det S_n evaluable (2n-2 <= ell)
  for (int n = 1; n <= top; ++n) {
    if (hankel_det(s, n, 0).is_zero()) continue;
    rep.indices.push_back(n);
    Rational d_plus_below = hankel_det(s, n - 1, +1);
    bool is_nu = !d_plus_below.is_zero();
    if (is_nu) rep.nu_subset.push_back(n);
    if (!is_nu) rep.regular = false;
    bool mu_known = 2 * n - 1 <= s.ell();
    if (mu_known) {
      if (!hankel_det(s, n, +1).is_zero())
        rep.mu_subset.push_back(n);
      else
        rep.regular = false;
    } else if (!is_nu) {
      // boundary order (ell = 2n-2): det S+_n is determined despite the
      // missing s_{2n-1} exactly when det S+_{n-1} = 0
      if (!detail::boundary_shifted_det(s, n).is_zero()) rep.mu_subset.push_back(n);
    }
  }

  // Structural checks: union and interlacing.
  std::vector<int> uni = rep.nu_subset;
  uni.insert(uni.end(), rep.mu_subset.begin(), rep.mu_subset.end());
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  check_internal(uni == rep.indices, "normal indices are not the union of nu and mu subsets");
  for (std::size_t j = 0; j < rep.nu_subset.size(); ++j) {
    if (j < rep.mu_subset.size())
      check_internal(rep.nu_subset[j] <= rep.mu_subset[j], "nu/mu interlacing violated");
    if (j + 1 < rep.nu_subset.size() && j < rep.mu_subset.size())
      check_internal(rep.mu_subset[j] < rep.nu_subset[j + 1], "mu/nu interlacing violated");
  }
  return rep;
}

// First normal index: one past the leading zeros.  Errors when the sequence
// is all-zero, or when the first nonzero moment sits too late for det S_nu1
// to be evaluable within the data (degenerate truncation).
inline int first_normal_index(const MomentSequence& s) {
  int z = 0;
  while (z <= s.ell() && s.at(z).is_zero()) ++z;
  if (z > s.ell())
    fail(errc::no_normal_index, "all moments vanish; no normal index exists");
  int nu1 = z + 1;
  if (2 * nu1 - 2 > s.ell())
    fail(errc::insufficient_moments,
         "first nonzero moment is s_" + std::to_string(z) + "; need moments through s_" +
             std::to_string(2 * nu1 - 2) + " to reach the first normal index",
         2 * nu1 - 2);
  return nu1;
}

struct SolvabilityIndices {
  int kappa = 0;  // nu_minus(S_{n_N})
  int k = 0;      // nu_minus(S+_{n_N - 1}) odd / nu_minus(S+_{n_N}) even
};

// The pair of negative indices whose bounds decide solvability, computed
// purely by Hankel inertia (no step-down machinery involved).
inline SolvabilityIndices solvability_indices(const MomentSequence& s, Parity parity) {
  NormalIndexReport rep = normal_indices(s);
  if (rep.indices.empty())
    fail(errc::no_normal_index, "no normal index within the supplied moments");
  int n_top = rep.indices.back();
  if (parity == Parity::even && 2 * n_top - 1 > s.ell())
    fail(errc::insufficient_moments,
         "even-case solvability needs s_" + std::to_string(2 * n_top - 1), 2 * n_top - 1);
  SolvabilityIndices out;
  out.kappa = inertia(hankel(s, n_top, 0)).nu_minus;
  out.k = parity == Parity::odd ? inertia(hankel(s, n_top - 1, +1)).nu_minus
                                : inertia(hankel(s, n_top, +1)).nu_minus;
  return out;
}

}  // namespace stieltjes
