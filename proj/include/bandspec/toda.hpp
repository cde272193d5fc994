#pragma once

#include "bandspec/banded.hpp"
#include "bandspec/measure.hpp"

namespace bandspec {

/// Splitting A = pi_skew(A) + pi_upper(A) into a skew-Hermitian part
/// (strictly lower triangle minus its adjoint) and an upper triangular
/// remainder. For Hermitian X, pi_skew(X) is the Toda generator.
Matrix pi_skew(const Matrix& a);
Matrix pi_upper(const Matrix& a);

/// Right-hand side [X, pi_skew(X)] of the Lax equation.
Matrix toda_rhs(const Matrix& x);

struct TodaSolution {
  double t = 0.0;
  BandedHermitian x;       // flowed matrix, still banded
  Matrix q, r;             // exp(t X0) = Q R, diag(R) > 0
  Matrix normalizer;       // lower-triangular L(t) acting on the measure
  MatrixMeasure measure;   // evolved spectral measure
  double eig_drift = 0.0;  // max |lambda_i(t) - lambda_i(0)|
};

/// Exact flow X(t) = Q(t)* X0 Q(t) with Q(t) R(t) = exp(t X0).
/// Guards: |t| * spread(spectrum) <= 40 and cond(diag R) <= 1e13,
/// otherwise ConditioningError.
TodaSolution toda_qr_flow(const BandedHermitian& x0, double t,
                          double tol = kRankTol);

/// Evolve the spectral measure directly: W_j(t) = L^{-1} e^{2 x_j t} W_j L^{-*}
/// with L L* = sum_j e^{2 x_j t} W_j. Support points are fixed.
MatrixMeasure evolve_measure(const MatrixMeasure& mu, double t,
                             double tol = kRankTol);

/// Flow through the spectral picture: inverse map of the evolved measure.
BandedHermitian toda_spectral_flow(const BandedHermitian& x0, double t,
                                   double tol = kRankTol);

/// Classical RK4 integration of the Lax equation on the dense matrix,
/// re-Hermitized each step. Signed t is integrated with steps of
/// magnitude dt. Throws StepSizeError when Hermiticity drifts beyond
/// roundoff scale or the iterate stops being finite.
Matrix toda_rk4(const Matrix& x0, double t, double dt = 1e-3);

}  // namespace bandspec
