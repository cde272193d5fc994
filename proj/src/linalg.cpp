#include "bandspec/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {

double herm_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

// Householder reflector for v: overwrites v's column range so that
// H v = beta e_1 with |beta| = ||v||. Returns the unit reflector w and
// beta; w is empty when v is already reduced (nothing below the head).
struct Reflector {
  Vector w;
  Complex beta;
};

Reflector make_reflector(const Vector& v) {
  double norm = v.norm();
  double tail = v.size() > 1 ? v.tail(v.size() - 1).norm() : 0.0;
  Reflector out;
  if (tail == 0.0) {
    out.beta = v.size() > 0 ? v(0) : Complex(0);
    return out;
  }
  Complex phase = std::abs(v(0)) == 0.0 ? Complex(1) : v(0) / std::abs(v(0));
  Vector u = v;
  u(0) += phase * norm;
  out.w = u / u.norm();
  out.beta = -phase * norm;
  return out;
}

void apply_reflector_left(const Vector& w, Eigen::Ref<Matrix> block) {
  if (w.size() == 0) return;
  block.noalias() -= 2.0 * w * (w.adjoint() * block);
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw DimensionMismatchError("hermitian_eig: matrix not square");
  double scale = std::max(1.0, max_abs(m));
  if (herm_defect(m) > tol * scale)
    throw NotHermitianError("hermitian_eig: Hermitian defect " +
                            std::to_string(herm_defect(m)));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermitian_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

QR qr_ref(const Matrix& m, double tol, double scale) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (scale <= 0.0)
    for (int c = 0; c < cols; ++c) scale = std::max(scale, m.col(c).norm());
  const double thresh = tol * scale;

  Matrix work = m;
  std::vector<Vector> reflectors;  // one per pivot, acting on rows s..rows
  std::vector<int> pivots;
  int s = 0;
  for (int c = 0; c < cols && s < rows; ++c) {
    Vector sub = work.block(s, c, rows - s, 1);
    if (sub.norm() <= thresh) {
      work.block(s, c, rows - s, 1).setZero();
      continue;
    }
    Reflector h = make_reflector(sub);
    if (h.w.size() > 0)
      apply_reflector_left(h.w, work.block(s, c, rows - s, cols - c));
    work(s, c) = h.beta;
    work.block(s + 1, c, rows - s - 1, 1).setZero();
    reflectors.push_back(h.w);
    pivots.push_back(c);
    ++s;
  }

  const int rank = s;
  Matrix r = work.topRows(rank);
  // Unimodular row scaling makes the pivots positive real.
  Vector phases(rank);
  for (int i = 0; i < rank; ++i) {
    Complex p = r(i, pivots[i]);
    phases(i) = p / std::abs(p);
    r.row(i) *= std::conj(phases(i));
    r(i, pivots[i]) = Complex(std::abs(p), 0.0);
  }

  // Q = H_1 ... H_rank (I restricted to the pivot columns) * diag(phases).
  Matrix q = Matrix::Zero(rows, rank);
  for (int i = 0; i < rank; ++i) q(i, i) = phases(i);
  for (int i = rank - 1; i >= 0; --i) {
    const Vector& w = reflectors[i];
    if (w.size() > 0)
      apply_reflector_left(w, q.block(i, 0, rows - i, rank));
  }
  return {q, r};
}

QR qr_positive(const Matrix& m, double tol) {
  if (m.rows() < m.cols())
    throw DimensionMismatchError("qr_positive: more columns than rows");
  QR qr = qr_ref(m, tol);
  if (qr.r.rows() != m.cols())
    throw RankDeficientError("qr_positive: rank " +
                             std::to_string(qr.r.rows()) + " < " +
                             std::to_string(m.cols()));
  return qr;
}

std::vector<int> echelon_pivots(const Matrix& r, double tol) {
  double scale = std::max(1.0, max_abs(r));
  std::vector<int> pivots;
  for (int i = 0; i < r.rows(); ++i) {
    int c = 0;
    while (c < r.cols() && std::abs(r(i, c)) <= tol * scale) ++c;
    if (c == r.cols()) break;
    pivots.push_back(c);
  }
  return pivots;
}

Matrix ref_factor(const Matrix& a, double tol) {
  if (a.rows() != a.cols())
    throw DimensionMismatchError("ref_factor: matrix not square");
  HermitianEig eig = hermitian_eig(a, std::max(tol, 1e-8));
  const int n = static_cast<int>(a.rows());
  double lmax = n > 0 ? eig.eigenvalues(n - 1) : 0.0;
  double cutoff = tol * std::max(lmax, 0.0);
  if (n > 0 && eig.eigenvalues(0) < -std::max(cutoff, tol))
    throw NotPSDError("ref_factor: eigenvalue " +
                      std::to_string(eig.eigenvalues(0)));
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (eig.eigenvalues(i) > cutoff) ++rank;
  // X = sqrt(Lambda_+) U_+^*; A = X^* X for the retained part.
  Matrix x(rank, n);
  for (int i = 0; i < rank; ++i) {
    int src = n - rank + i;  // positive part, any fixed order works
    x.row(i) = std::sqrt(eig.eigenvalues(src)) *
               eig.eigenvectors.col(src).adjoint();
  }
  QR qr = qr_ref(x, tol);
  if (qr.r.rows() != rank)
    throw RankMismatchError("ref_factor: echelon reduction lost rank");
  return qr.r;
}

Matrix cholesky(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatchError("cholesky: matrix not square");
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("cholesky: factorization failed");
  return llt.matrixL();
}

Matrix right_pseudoinverse(const Matrix& b, double tol) {
  if (rank_with_tol(b, tol) != b.rows())
    throw RankDeficientError("right_pseudoinverse: rows not independent");
  Matrix gram = b * b.adjoint();
  return b.adjoint() * gram.llt().solve(Matrix::Identity(b.rows(), b.rows()));
}

Matrix hermitian_expm(const Matrix& m, double t) {
  HermitianEig eig = hermitian_eig(m);
  RealVector e = (t * eig.eigenvalues.array()).exp();
  return eig.eigenvectors * e.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix hermitian_sqrt(const Matrix& m, double tol) {
  HermitianEig eig = hermitian_eig(m);
  const int n = static_cast<int>(m.rows());
  double lmax = n > 0 ? std::max(eig.eigenvalues(n - 1), 0.0) : 0.0;
  if (n > 0 && eig.eigenvalues(0) < -tol * std::max(lmax, 1.0))
    throw NotPSDError("hermitian_sqrt: negative eigenvalue");
  RealVector e = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors * e.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix hermitian_inv_sqrt(const Matrix& m, double tol) {
  HermitianEig eig = hermitian_eig(m);
  const int n = static_cast<int>(m.rows());
  double lmax = n > 0 ? eig.eigenvalues(n - 1) : 0.0;
  if (n == 0 || eig.eigenvalues(0) <= tol * std::max(lmax, 0.0))
    throw NotDefiniteError("hermitian_inv_sqrt: matrix not positive definite");
  RealVector e = eig.eigenvalues.cwiseSqrt().cwiseInverse();
  return eig.eigenvectors * e.asDiagonal() * eig.eigenvectors.adjoint();
}

int rank_with_tol(const Matrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

}  // namespace bandspec
