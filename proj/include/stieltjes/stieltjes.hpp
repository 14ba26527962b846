#pragma once

// Exact solver for truncated indefinite moment problems on the line:
// step-by-step Schur expansion into generalized Stieltjes fractions,
// orthogonal and Stieltjes polynomials, solution matrices, and the
// JSON command layer on top.

#include "stieltjes/errors.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational_function.hpp"
#include "stieltjes/laurent.hpp"
#include "stieltjes/poly_matrix.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/matrix.hpp"
#include "stieltjes/inertia.hpp"
#include "stieltjes/normal_indices.hpp"
#include "stieltjes/toeplitz.hpp"
#include "stieltjes/step_invariants.hpp"
#include "stieltjes/schur.hpp"
#include "stieltjes/stieltjes_polynomials.hpp"
#include "stieltjes/solution.hpp"
#include "stieltjes/report.hpp"
#include "stieltjes/selftest.hpp"
