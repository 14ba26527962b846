#pragma once

#include <optional>
#include <vector>

#include "stieltjes/inertia.hpp"
#include "stieltjes/toeplitz.hpp"

namespace stieltjes {

// Hankel block of a frak sequence: entry (i,j) = frak(i+j+shift).  shift -1
// reaches the (-1) entry; callers keep p inside the computed range.
inline SymmetricMatrix frak_hankel(const FrakSequence& fs, int p, int shift) {
  SymmetricMatrix h(p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      h.at(i, j) = fs.at(i + j + shift);
      h.at(j, i) = h.at(i, j);
    }
  return h;
}

// Inertia bookkeeping across one step-down.  For every block order the data
// admits, the Hankel inertias of the stepped sequences are pinned to those
// of the original:
//
//   (A)  nu_0(Frak_p)  = nu_0(S_{p+nu}),
//        nu_+-(Frak_p) = nu_+-(S_{p+nu}) - nu_+-(S_nu)
//   (B)  nu_0(Frak-_p)  = nu_0(S+_{p+nu-1}),
//        nu_+-(Frak-_p) = nu_+-(S+_{p+nu-1}) - nu_+-(S+_{nu-1})
//
// and, when a constant l-step followed (frak(-1) != 0), for the produced
// sequence s':
//
//   (C)  nu_0(S+_p(s')) = nu_0(Frak-_{p+1}),
//        nu_-(S+_p(s')) = nu_-(Frak-_{p+1}) - [frak(-1) < 0],
//        inertia(S_p(s')) = inertia(Frak_p).
//
// Violations raise internal_consistency: they cannot come from bad input,
// only from a bug in the step-down itself.
inline void verify_step_down_inertia(const MomentSequence& prev, int nu, const FrakSequence& frak,
                                     const std::optional<std::vector<Rational>>& next = std::nullopt) {
  if (frak.empty()) return;
  int max_index = frak.max_index();

  Inertia base0 = inertia(hankel(prev, nu, 0));
  for (int p = 1; 2 * p - 2 <= max_index; ++p) {
    Inertia lhs = inertia(frak_hankel(frak, p, 0));
    Inertia rhs = inertia(hankel(prev, p + nu, 0));
    check_internal(lhs.nu_zero == rhs.nu_zero && lhs.nu_minus == rhs.nu_minus - base0.nu_minus &&
                       lhs.nu_plus == rhs.nu_plus - base0.nu_plus,
                   "step-down broke the unshifted Hankel inertia relation");
  }

  Inertia base1 = inertia(hankel(prev, nu - 1, +1));
  for (int p = 1; 2 * p - 3 <= max_index; ++p) {
    Inertia lhs = inertia(frak_hankel(frak, p, -1));
    Inertia rhs = inertia(hankel(prev, p + nu - 1, +1));
    check_internal(lhs.nu_zero == rhs.nu_zero && lhs.nu_minus == rhs.nu_minus - base1.nu_minus &&
                       lhs.nu_plus == rhs.nu_plus - base1.nu_plus,
                   "step-down broke the shifted Hankel inertia relation");
  }

  if (!next) return;
  check_internal(!frak.at(-1).is_zero(), "constant l-step recorded with frak(-1) = 0");
  int drop = frak.at(-1).sign() < 0 ? 1 : 0;
  if (!next->empty()) {
    MomentSequence ns(*next);
    for (int p = 1; 2 * p - 1 <= max_index; ++p) {
      Inertia lhs = inertia(hankel(ns, p, +1));
      Inertia rhs = inertia(frak_hankel(frak, p + 1, -1));
      check_internal(lhs.nu_zero == rhs.nu_zero && lhs.nu_minus == rhs.nu_minus - drop &&
                         lhs.nu_plus == rhs.nu_plus - (1 - drop),
                     "l-step broke the shifted Hankel inertia relation");
    }
    for (int p = 1; 2 * p - 2 <= max_index; ++p)
      check_internal(inertia(hankel(ns, p, 0)) == inertia(frak_hankel(frak, p, 0)),
                     "l-step changed an unshifted Hankel inertia");
  }
}

}  // namespace stieltjes
