#pragma once

#include <vector>

#include "bandspec/types.hpp"

namespace bandspec {

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, column i pairs with eigenvalues[i]
};

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitianError when
/// ||M - M*|| exceeds tol relative to ||M||.
HermitianEig hermitian_eig(const Matrix& m, double tol = kRankTol);

struct QR {
  Matrix q;  // orthonormal columns
  Matrix r;
};

/// QR of a full-column-rank matrix with the unique normalization
/// diag(R) > 0. Throws RankDeficientError when a pivot falls below
/// tol * (largest column norm).
QR qr_positive(const Matrix& m, double tol = kRankTol);

/// Rank-adaptive Householder QR: m (p x q) = Q (p x r) * R (r x q) with
/// orthonormal Q and R in row echelon form with strictly positive real
/// pivots. r is decided by comparing pivot candidates against
/// tol * scale; scale defaults to the largest column norm of m, but
/// callers working inside a larger computation (Lanczos residuals)
/// should pass the ambient scale so noise-level input reads as rank 0.
QR qr_ref(const Matrix& m, double tol = kRankTol, double scale = 0.0);

/// Pivot column of each row of an echelon matrix (first entry exceeding
/// tol relative to the largest entry). Row count == number of pivots.
std::vector<int> echelon_pivots(const Matrix& r, double tol = kRankTol);

/// Unique echelon factor R (r x n, positive pivots) of a PSD matrix with
/// A = R* R. Route: eigendecompose, keep the positive part, reduce
/// sqrt(Lambda) U* to echelon form. Throws NotPSDError on a significantly
/// negative eigenvalue.
Matrix ref_factor(const Matrix& a, double tol = kRankTol);

/// Lower-triangular L with A = L L*, positive diagonal.
/// Throws NotPositiveDefiniteError when the factorization breaks down.
Matrix cholesky(const Matrix& a);

/// Moore-Penrose right inverse B*(B B*)^{-1} of a full-row-rank matrix.
Matrix right_pseudoinverse(const Matrix& b, double tol = kRankTol);

/// exp(t M) for Hermitian M via its eigendecomposition.
Matrix hermitian_expm(const Matrix& m, double t);

/// Principal PSD square root; power = -1/2 gives the inverse root and
/// requires positive definiteness at the rank tolerance.
Matrix hermitian_sqrt(const Matrix& m, double tol = kRankTol);
Matrix hermitian_inv_sqrt(const Matrix& m, double tol = kRankTol);

/// Number of singular values above tol * (largest singular value).
int rank_with_tol(const Matrix& a, double tol = kRankTol);

}  // namespace bandspec
