#pragma once

#include <vector>

#include "bandspec/measure.hpp"
#include "bandspec/polynomial.hpp"

namespace bandspec {

/// Monic orthogonal family Pi_0..Pi_{n-1} with the three-term data
///   x Pi_j = Pi_{j+1} + Pi_j C_j + Pi_{j-1} D_j.
/// gamma_j = <Pi_j, Pi_j> must be invertible for j <= n-2
/// (NotDefiniteError otherwise); gamma_{n-1} may be singular.
struct MonicFamily {
  std::vector<MatrixPolynomial> pi;  // n polynomials
  std::vector<Matrix> gamma;         // n Gram blocks
  std::vector<Matrix> c;             // C_0..C_{n-2}
  std::vector<Matrix> d;             // D_0..D_{n-2}, D_j = gamma_{j-1}^{-1} gamma_j
};

MonicFamily monic_sequence(const MatrixMeasure& mu, int n,
                           double tol = kRankTol);

/// Orthonormal family P_0..P_{n-2} (P_j = Pi_j gamma_j^{-1/2} Q_j with the
/// unique unitaries making the recurrence blocks upper triangular with
/// positive diagonal), plus the recurrence blocks
///   x P_j = P_{j+1} B_j + P_j A_j + P_{j-1} B_{j-1}*,  j <= n-3.
struct OrthonormalFamily {
  std::vector<MatrixPolynomial> p;  // P_0..P_{n-2}
  std::vector<Matrix> a;            // A_0..A_{n-3}
  std::vector<Matrix> b;            // B_0..B_{n-3}
  std::vector<Matrix> q;            // unitaries Q_0..Q_{n-2}
  MonicFamily monic;
};

OrthonormalFamily orthonormal_sequence(const MatrixMeasure& mu, int n,
                                       double tol = kRankTol);

/// Degenerate tail of the family: from P_{n-2} build
///   T = x P_{n-2} - P_{n-2} A_{n-2} - P_{n-3} B_{n-3}*,
/// factor <T,T> = B_{n-2}* B_{n-2} with B_{n-2} echelon ((k-ell) x k),
/// and set P_{n-1} = T B_{n-2}^+ (k x (k-ell)).
struct LastPolynomial {
  MatrixPolynomial p_last;  // P_{n-1}
  Matrix a_second_last;     // A_{n-2}
  Matrix b_last;            // B_{n-2}
  Matrix a_last;            // A_{n-1}
};

/// ell = n*k - N where N is the measure's total rank. Throws
/// RankMismatchError when <T,T> does not have rank k - ell.
LastPolynomial last_polynomial(const MatrixMeasure& mu,
                               const OrthonormalFamily& fam,
                               double tol = kRankTol);

/// dim N_d: nullity of the depth-d moment block matrix. Vanishes for
/// d < n-1, equals ell at d = n-1, and grows as k(d+1) - N beyond.
int null_dimension(const MatrixMeasure& mu, int d, double tol = kRankTol);

}  // namespace bandspec
