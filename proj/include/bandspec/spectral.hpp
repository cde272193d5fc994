#pragma once

#include <vector>

#include "bandspec/banded.hpp"
#include "bandspec/measure.hpp"
#include "bandspec/orthopoly.hpp"

namespace bandspec {

/// Spectral measure of a banded member: atoms at the (merged) eigenvalues
/// with weights V_j V_j*, V_j the first k rows of the eigenvector columns.
MatrixMeasure spectral_map(const BandedHermitian& j,
                           double merge_tol = kMergeTol,
                           double rank_tol = kRankTol);

/// Same map for a dense Hermitian matrix with a prescribed block size;
/// the measure a width-k Lanczos run from the leading coordinates sees.
MatrixMeasure spectral_measure_dense(const Matrix& m, int k,
                                     double merge_tol = kMergeTol,
                                     double rank_tol = kRankTol);

/// Inverse spectral map: rebuild the banded member whose recurrence
/// coefficients are those of the orthonormal family of mu. Throws
/// NotInClassError when mu fails validate_measure.
BandedHermitian inverse_spectral_map(const MatrixMeasure& mu,
                                     double tol = kRankTol);

/// First-kind polynomials of a banded member (P_{-1} = 0, P_0 = I):
///   P_j = (x P_{j-1} - P_{j-1} A_{j-1} - P_{j-2} B_{j-2}*) B_{j-1}^+ .
/// They satisfy P_j(J) ∘ E_0 = E_j.
std::vector<MatrixPolynomial> lanczos_polynomials(const BandedHermitian& j,
                                                  double tol = kRankTol);

}  // namespace bandspec
