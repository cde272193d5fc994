#include "bandspec/polynomial.hpp"

#include "bandspec/errors.hpp"

namespace bandspec {

MatrixPolynomial::MatrixPolynomial(int rows, int cols,
                                   std::vector<Matrix> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
  for (const Matrix& c : coeffs_)
    if (c.rows() != rows_ || c.cols() != cols_)
      throw DimensionMismatchError("MatrixPolynomial: coefficient shape");
  trim();
}

MatrixPolynomial MatrixPolynomial::zero(int rows, int cols) {
  return MatrixPolynomial(rows, cols, {});
}

MatrixPolynomial MatrixPolynomial::identity(int k) {
  return constant(Matrix::Identity(k, k));
}

MatrixPolynomial MatrixPolynomial::constant(const Matrix& c) {
  return MatrixPolynomial(static_cast<int>(c.rows()),
                          static_cast<int>(c.cols()), {c});
}

void MatrixPolynomial::trim() {
  while (!coeffs_.empty() && max_abs(coeffs_.back()) == 0.0)
    coeffs_.pop_back();
}

Matrix MatrixPolynomial::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size()))
    return Matrix::Zero(rows_, cols_);
  return coeffs_[j];
}

Matrix MatrixPolynomial::eval(double x) const {
  Matrix acc = Matrix::Zero(rows_, cols_);
  for (int j = degree(); j >= 0; --j) acc = x * acc + coeffs_[j];
  return acc;
}

MatrixPolynomial MatrixPolynomial::times_matrix(const Matrix& c) const {
  std::vector<Matrix> out;
  out.reserve(coeffs_.size());
  for (const Matrix& cj : coeffs_) out.push_back(cj * c);
  return MatrixPolynomial(rows_, static_cast<int>(c.cols()), std::move(out));
}

MatrixPolynomial MatrixPolynomial::times_x() const {
  if (coeffs_.empty()) return *this;
  std::vector<Matrix> out;
  out.reserve(coeffs_.size() + 1);
  out.push_back(Matrix::Zero(rows_, cols_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return MatrixPolynomial(rows_, cols_, std::move(out));
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatchError("MatrixPolynomial: shape mismatch in +");
  std::vector<Matrix> out;
  int deg = std::max(degree(), o.degree());
  out.reserve(deg + 1);
  for (int j = 0; j <= deg; ++j) out.push_back(coeff(j) + o.coeff(j));
  return MatrixPolynomial(rows_, cols_, std::move(out));
}

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatchError("MatrixPolynomial: shape mismatch in -");
  std::vector<Matrix> out;
  int deg = std::max(degree(), o.degree());
  out.reserve(deg + 1);
  for (int j = 0; j <= deg; ++j) out.push_back(coeff(j) - o.coeff(j));
  return MatrixPolynomial(rows_, cols_, std::move(out));
}

Matrix poly_apply(const MatrixPolynomial& p, const Matrix& j, const Matrix& e) {
  if (j.rows() != j.cols() || e.rows() != j.rows() || e.cols() != p.rows())
    throw DimensionMismatchError("poly_apply: shapes do not conform");
  Matrix out = Matrix::Zero(e.rows(), p.cols());
  Matrix power = e;  // J^i E
  for (int i = 0; i <= p.degree(); ++i) {
    out.noalias() += power * p.coeff(i);
    if (i < p.degree()) power = j * power;
  }
  return out;
}

}  // namespace bandspec
