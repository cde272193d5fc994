#pragma once

#include <vector>

#include "bandspec/banded.hpp"

namespace bandspec {

/// Block Lanczos run. Block sizes adapt to the residual ranks; a run is
/// complete when the collected ranks reach the ambient dimension.
struct LanczosResult {
  std::vector<Matrix> a;      // diagonal blocks
  std::vector<Matrix> b;      // subdiagonal blocks (echelon, positive pivots)
  std::vector<Matrix> basis;  // V_1, V_2, ... (orthonormal column blocks)
  Matrix b_start;             // echelon factor of the starting block
  int steps = 0;
  bool completed = false;  // ranks sum to dim(A)
  bool early_termination = false;  // residual rank hit zero first

  BandedHermitian banded() const;  // requires completed
};

/// Width-k block Lanczos for Hermitian a from starting block v (dim x k).
/// steps < 0 means ceil(dim/k). Full reorthogonalization defaults on.
LanczosResult block_lanczos(const Matrix& a, const Matrix& v, int steps = -1,
                            bool reorth = true, double tol = kRankTol);

/// Lanczos from the leading k coordinates.
LanczosResult block_lanczos_leading(const Matrix& a, int k, bool reorth = true,
                                    double tol = kRankTol);

/// Reduce a dense Hermitian matrix to bandwidth k by Householder
/// reflections on sub-band columns, then apply the diagonal unitary
/// similarity that makes every band-edge entry positive real.
/// Spectrum is preserved exactly (unitary similarity).
BandedHermitian householder_blocktridiag(const Matrix& a, int k,
                                         double tol = kRankTol);

struct EquivalenceReport {
  bool comparable = false;  // Lanczos ran to completion
  bool agree = false;
  bool early_termination = false;
  int lanczos_steps = 0;
  double lanczos_vs_householder = 0.0;
  double lanczos_vs_inverse = 0.0;    // vs the measure-route reconstruction
  double householder_vs_inverse = 0.0;
  double scale = 1.0;
};

/// Three-route agreement on a dense Hermitian matrix: block Lanczos,
/// Householder reduction, and the inverse spectral map applied to the
/// matrix's width-k spectral measure. Early termination is reported,
/// never asserted against.
EquivalenceReport equivalence_check(const Matrix& a, int k,
                                    double tol = kEquivTol,
                                    double rank_tol = kRankTol);

}  // namespace bandspec
