#include "bandspec/banded.hpp"

#include <algorithm>
#include <cmath>

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"

namespace bandspec {

namespace {

int blocks_for(int k, int dim) { return (dim + k - 1) / k; }

int block_width(int k, int dim, int j) {
  int n = blocks_for(k, dim);
  if (j < 0 || j >= n) throw DimensionMismatchError("block index out of range");
  return j == n - 1 ? dim - (n - 1) * k : k;
}

}  // namespace

BandedHermitian::BandedHermitian(int k, int dim, std::vector<Matrix> diag,
                                 std::vector<Matrix> sub)
    : k_(k), dim_(dim), diag_(std::move(diag)), sub_(std::move(sub)) {
  if (k <= 0 || dim <= 0)
    throw DimensionMismatchError("BandedHermitian: k and N must be positive");
  const int n = blocks_for(k, dim);
  if (static_cast<int>(diag_.size()) != n ||
      static_cast<int>(sub_.size()) != n - 1)
    throw DimensionMismatchError("BandedHermitian: block count");
  for (int j = 0; j < n; ++j) {
    int w = block_width(k, dim, j);
    if (diag_[j].rows() != w || diag_[j].cols() != w)
      throw DimensionMismatchError("BandedHermitian: diagonal block " +
                                   std::to_string(j));
    double scale = std::max(1.0, max_abs(diag_[j]));
    if (max_abs(diag_[j] - diag_[j].adjoint()) > 1e-8 * scale)
      throw NotHermitianError("BandedHermitian: diagonal block " +
                              std::to_string(j));
  }
  for (int j = 0; j + 1 < n; ++j) {
    int w = block_width(k, dim, j + 1);
    if (sub_[j].rows() != w || sub_[j].cols() != block_width(k, dim, j))
      throw DimensionMismatchError("BandedHermitian: subdiagonal block " +
                                   std::to_string(j));
  }
}

Matrix BandedHermitian::dense() const {
  Matrix m = Matrix::Zero(dim_, dim_);
  const int n = blocks();
  for (int j = 0; j < n; ++j) {
    int w = static_cast<int>(diag_[j].rows());
    m.block(j * k_, j * k_, w, w) = 0.5 * (diag_[j] + diag_[j].adjoint());
  }
  for (int j = 0; j + 1 < n; ++j) {
    int r = static_cast<int>(sub_[j].rows());
    int c = static_cast<int>(sub_[j].cols());
    m.block((j + 1) * k_, j * k_, r, c) = sub_[j];
    m.block(j * k_, (j + 1) * k_, c, r) = sub_[j].adjoint();
  }
  return m;
}

Matrix selection_block(int dim, int k, int j) {
  int w = block_width(k, dim, j);
  Matrix e = Matrix::Zero(dim, w);
  e.block(j * k, 0, w, w).setIdentity();
  return e;
}

std::vector<std::string> banded_violations(const Matrix& m, int k,
                                           double tol) {
  std::vector<std::string> out;
  if (m.rows() != m.cols()) {
    out.push_back("matrix is not square");
    return out;
  }
  if (k <= 0) {
    out.push_back("block size must be positive");
    return out;
  }
  const int dim = static_cast<int>(m.rows());
  const double scale = std::max(1.0, max_abs(m));
  const double eps = tol * scale;

  if (max_abs(m - m.adjoint()) > eps)
    out.push_back("not Hermitian (defect " +
                  std::to_string(max_abs(m - m.adjoint())) + ")");

  double band_leak = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (std::abs(i - j) > k) band_leak = std::max(band_leak, std::abs(m(i, j)));
  if (band_leak > eps)
    out.push_back("entries outside bandwidth " + std::to_string(k) +
                  " (max " + std::to_string(band_leak) + ")");

  const int n = blocks_for(k, dim);
  for (int j = 0; j + 1 < n; ++j) {
    const int rows = block_width(k, dim, j + 1);
    const int cols = block_width(k, dim, j);
    Matrix b = m.block((j + 1) * k, j * k, rows, cols);
    std::string tag = "subdiagonal block " + std::to_string(j);
    // echelon staircase with positive real pivots; square full blocks are
    // the special case pivot(i) == i (upper triangular, positive diagonal)
    int prev = -1;
    bool shape_ok = true;
    for (int r = 0; r < rows && shape_ok; ++r) {
      int p = 0;
      while (p < cols && std::abs(b(r, p)) <= eps) ++p;
      if (p == cols) {
        out.push_back(tag + ": zero row (rank deficient)");
        shape_ok = false;
        break;
      }
      if (p <= prev) {
        out.push_back(tag + ": not in row echelon form");
        shape_ok = false;
        break;
      }
      if (rows == cols && p != r) {
        out.push_back(tag + ": not upper triangular");
        shape_ok = false;
        break;
      }
      Complex pivot = b(r, p);
      if (pivot.real() <= eps || std::abs(pivot.imag()) > eps) {
        out.push_back(tag + ": pivot at column " + std::to_string(p) +
                      " not positive real");
        shape_ok = false;
      }
      prev = p;
    }
    if (shape_ok && rank_with_tol(b, tol) != rows)
      out.push_back(tag + ": rank below " + std::to_string(rows));
  }
  return out;
}

BandedHermitian validate_banded(const Matrix& m, int k, double tol) {
  std::vector<std::string> v = banded_violations(m, k, tol);
  if (!v.empty()) {
    std::string msg = "not in the banded class:";
    for (const std::string& s : v) msg += "\n  " + s;
    throw NotInClassError(msg);
  }
  return banded_part(m, k);
}

BandedHermitian banded_part(const Matrix& m, int k) {
  if (m.rows() != m.cols())
    throw DimensionMismatchError("banded_part: matrix not square");
  const int dim = static_cast<int>(m.rows());
  const int n = blocks_for(k, dim);
  std::vector<Matrix> diag, sub;
  for (int j = 0; j < n; ++j) {
    int w = block_width(k, dim, j);
    Matrix a = m.block(j * k, j * k, w, w);
    diag.push_back(0.5 * (a + a.adjoint()));
  }
  for (int j = 0; j + 1 < n; ++j) {
    int rows = block_width(k, dim, j + 1);
    int cols = block_width(k, dim, j);
    Matrix lower = m.block((j + 1) * k, j * k, rows, cols);
    Matrix upper = m.block(j * k, (j + 1) * k, cols, rows);
    sub.push_back(0.5 * (lower + upper.adjoint()));
  }
  return BandedHermitian(k, dim, std::move(diag), std::move(sub));
}

std::vector<std::vector<int>> pivot_pattern(const BandedHermitian& j,
                                            double tol) {
  std::vector<std::vector<int>> out;
  for (const Matrix& b : j.sub_blocks()) out.push_back(echelon_pivots(b, tol));
  return out;
}

}  // namespace bandspec
