#pragma once

#include <optional>
#include <vector>

#include "stieltjes/moments.hpp"

namespace stieltjes {

// Dense rational matrix, row-major.  Small orders only; this library never
// builds matrices larger than the moment count.
class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Exact determinant.  Rows are scaled integer (denominators cleared, factor
// tracked), then the Bareiss fraction-free elimination keeps every division
// exact; entry growth stays polynomial instead of the naive exponential.
inline Rational determinant(const Matrix& m) {
  check_internal(m.rows() == m.cols(), "determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return Rational(1);

  std::vector<std::vector<mpz_class>> b(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpq_class scale(1);  // product of the row-clearing factors
  for (int i = 0; i < n; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j) l = lcm(l, m.at(i, j).denominator());
    scale *= l;
    for (int j = 0; j < n; ++j) {
      const Rational& e = m.at(i, j);
      b[i][j] = e.numerator() * (l / e.denominator());
    }
  }

  int sign = 1;
  mpz_class prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (b[r][k] != 0) { p = r; break; }
      if (p < 0) return Rational(0);
      std::swap(b[k], b[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = b[i][j] * b[k][k] - b[i][k] * b[k][j];
        mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  mpq_class det(b[n - 1][n - 1]);
  det = det * sign / scale;
  return Rational(det);
}

// Symmetric rational matrix; symmetry is an invariant checked at build time.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix m) : m_(std::move(m)) {
    check_internal(m_.rows() == m_.cols(), "symmetric matrix must be square");
    for (int i = 0; i < m_.rows(); ++i)
      for (int j = i + 1; j < m_.cols(); ++j)
        check_internal(m_.at(i, j) == m_.at(j, i), "matrix is not symmetric");
  }
  explicit SymmetricMatrix(int n) : m_(n, n) {}

  int order() const { return m_.rows(); }
  Rational& at(int i, int j) { return m_.at(i, j); }
  const Rational& at(int i, int j) const { return m_.at(i, j); }
  const Matrix& as_matrix() const { return m_; }

 private:
  Matrix m_;
};

// Hankel block (s_{i+j+shift})_{i,j=0}^{n-1}.  shift is 0, +1 or -1; the
// latter places s_{-1} in the corner and requires it to be supplied (only the
// step-down cross-checks use it).  Order 0 gives the empty matrix, whose
// determinant is 1 by convention.
inline SymmetricMatrix hankel(const MomentSequence& s, int n, int shift,
                              std::optional<Rational> s_minus1 = std::nullopt) {
  if (n < 0) fail(errc::malformed_input, "negative Hankel order");
  if (shift < -1 || shift > 1) fail(errc::malformed_input, "Hankel shift must be -1, 0 or +1");
  SymmetricMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int idx = i + j + shift;
      Rational v;
      if (idx == -1) {
        if (!s_minus1)
          fail(errc::insufficient_moments, "Hankel shift -1 needs a supplied s_-1 entry", -1);
        v = *s_minus1;
      } else {
        v = s.at(idx);
      }
      h.at(i, j) = v;
      if (i != j) h.at(j, i) = v;
    }
  return h;
}

// det S_n (shift 0) / det S_n^+ (shift +1) in one call.
inline Rational hankel_det(const MomentSequence& s, int n, int shift) {
  return determinant(hankel(s, n, shift).as_matrix());
}

}  // namespace stieltjes
