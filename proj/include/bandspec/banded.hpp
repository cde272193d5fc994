#pragma once

#include <string>
#include <vector>

#include "bandspec/types.hpp"

namespace bandspec {

/// N x N Hermitian block tridiagonal matrix with bandwidth k:
/// diagonal blocks A_0..A_{n-1} (k x k, last (k-ell) x (k-ell)) and
/// subdiagonal blocks B_0..B_{n-2} (k x k upper triangular, last
/// (k-ell) x k echelon), n = ceil(N/k), ell = n*k - N.
///
/// The container enforces shapes and Hermitian diagonal blocks; the
/// analytic class conditions (positive pivots, full-rank subdiagonals)
/// are checked by validate_banded.
class BandedHermitian {
 public:
  BandedHermitian() = default;
  BandedHermitian(int k, int dim, std::vector<Matrix> diag,
                  std::vector<Matrix> sub);

  int k() const { return k_; }
  int dim() const { return dim_; }
  int blocks() const { return static_cast<int>(diag_.size()); }  // n
  int ell() const { return blocks() * k_ - dim_; }

  const Matrix& a(int j) const { return diag_.at(j); }
  const Matrix& b(int j) const { return sub_.at(j); }
  const std::vector<Matrix>& diag_blocks() const { return diag_; }
  const std::vector<Matrix>& sub_blocks() const { return sub_; }

  Matrix dense() const;

 private:
  int k_ = 0, dim_ = 0;
  std::vector<Matrix> diag_, sub_;
};

/// Block selection matrix E_j (0-indexed): dim x w with the identity in
/// block row j, w = k except k-ell for the last block.
Matrix selection_block(int dim, int k, int j);

/// Structural violations of the banded class for a dense candidate:
/// Hermitian, bandwidth k, upper-triangular subdiagonal blocks with
/// positive pivots, full-rank subdiagonals. Empty result means member.
std::vector<std::string> banded_violations(const Matrix& m, int k,
                                           double tol = kRankTol);

/// Parse a dense member into its blocks; throws NotInClassError carrying
/// the violation list otherwise.
BandedHermitian validate_banded(const Matrix& m, int k,
                                double tol = kRankTol);

/// Extract blocks of a dense Hermitian matrix assuming bandwidth k,
/// without class checks (entries outside the band are ignored and the
/// diagonal blocks are re-Hermitized).
BandedHermitian banded_part(const Matrix& m, int k);

/// Pivot columns of each subdiagonal block; the structural fingerprint
/// preserved by the isospectral flows.
std::vector<std::vector<int>> pivot_pattern(const BandedHermitian& j,
                                            double tol = kRankTol);

}  // namespace bandspec
