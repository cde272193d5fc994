#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bandspec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative rank-detection tolerance used by every rank decision
/// (QR pivots, echelon factors, weight truncation, Krylov ranks).
inline constexpr double kRankTol = 1e-10;

/// Support points closer than kMergeTol * (spectral range) are one atom.
inline constexpr double kMergeTol = 1e-9;

/// Two matrices are "equal" at scale s when the blockwise max-abs
/// difference stays below kEquivTol * max(s, 1).
inline constexpr double kEquivTol = 1e-8;

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double tol = kEquivTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double scale = std::max({1.0, max_abs(a), max_abs(b)});
  return a.size() == 0 || max_abs(a - b) <= tol * scale;
}

}  // namespace bandspec
