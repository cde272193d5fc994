#pragma once

#include <vector>

#include "bandspec/types.hpp"

namespace bandspec {

/// Matrix polynomial P(x) = sum_j x^j C_j with k x w coefficients.
/// Constant matrices act on the right: (P * M)(x) = P(x) M.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  MatrixPolynomial(int rows, int cols, std::vector<Matrix> coeffs);

  /// Zero polynomial of the given shape (empty coefficient list).
  static MatrixPolynomial zero(int rows, int cols);
  /// Constant polynomial P(x) = I.
  static MatrixPolynomial identity(int k);
  static MatrixPolynomial constant(const Matrix& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Degree of the stored coefficient list; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  /// Coefficient of x^j (zero matrix when j exceeds the stored degree).
  Matrix coeff(int j) const;

  Matrix eval(double x) const;  // Horner

  MatrixPolynomial times_matrix(const Matrix& c) const;
  MatrixPolynomial times_x() const;

  MatrixPolynomial operator+(const MatrixPolynomial& o) const;
  MatrixPolynomial operator-(const MatrixPolynomial& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Matrix> coeffs_;
  void trim();
};

/// P(J) ∘ E = sum_j J^j E C_j for square J and conforming E.
Matrix poly_apply(const MatrixPolynomial& p, const Matrix& j, const Matrix& e);

}  // namespace bandspec
