#pragma once

#include <string>
#include <vector>

#include "bandspec/polynomial.hpp"
#include "bandspec/types.hpp"

namespace bandspec {

struct MeasureAtom {
  double x = 0.0;
  Matrix weight;  // k x k PSD
  Matrix factor;  // k x n_j with weight = factor * factor*
};

/// Canonical factor of a PSD weight: columns are eigenvectors scaled by
/// sqrt(eigenvalue), descending eigenvalues above tol * (largest), each
/// column phased so its first nonzero entry is positive real.
Matrix weight_factors(const Matrix& w, double tol = kRankTol);

/// Finitely atomic k x k matrix-valued measure. Construction sorts atoms,
/// merges support points closer than merge_tol * (range), drops zero-rank
/// atoms, and recomputes canonical factors from the summed weights.
class MatrixMeasure {
 public:
  MatrixMeasure() = default;
  MatrixMeasure(int k, std::vector<MeasureAtom> atoms,
                double merge_tol = kMergeTol, double rank_tol = kRankTol);

  static MatrixMeasure from_weights(int k,
                                    const std::vector<double>& points,
                                    const std::vector<Matrix>& weights,
                                    double merge_tol = kMergeTol,
                                    double rank_tol = kRankTol);

  int k() const { return k_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  const std::vector<MeasureAtom>& atoms() const { return atoms_; }
  const MeasureAtom& atom(int j) const { return atoms_.at(j); }

  /// Sum of factor ranks; the dimension N the measure can represent.
  int total_rank() const;
  Matrix total_mass() const;

 private:
  int k_ = 0;
  std::vector<MeasureAtom> atoms_;
};

/// Right quasi-inner product <F,G> = sum_j F(x_j)* W_j G(x_j).
Matrix quasi_inner(const MatrixPolynomial& f, const MatrixPolynomial& g,
                   const MatrixMeasure& mu);

/// i-th moment: integral of x^i, i.e. sum_j x_j^i W_j.
Matrix moment(const MatrixMeasure& mu, int i);

/// Krylov-style moment block matrix [V, XV, ..., X^d V] of size
/// N x (d+1)k, where V stacks the factor adjoints and X carries the
/// support points with multiplicity.
Matrix krylov_matrix(const MatrixMeasure& mu, int d);

struct MeasureClassReport {
  bool member = false;
  int dim = 0;  // N = sum of atom ranks
  int n = 0;    // ceil(N / k)
  int ell = 0;  // n*k - N
  int krylov_rank = 0;
  double mass_error = 0.0;
  std::vector<std::string> violations;
};

/// Membership test against the class of measures representable by an
/// N x N banded matrix: normalized mass, total rank N, and full-rank
/// moment block matrix of depth n-1. Pass expected_dim >= 0 to also
/// check the total rank against a prescribed N.
MeasureClassReport validate_measure(const MatrixMeasure& mu,
                                    int expected_dim = -1,
                                    double tol = kRankTol);

/// Rescale W_j -> L^{-1} W_j L^{-*} with L L* = sum W_j so the total mass
/// becomes the identity. Throws SingularNormalizerError when the mass is
/// singular.
MatrixMeasure normalize(const MatrixMeasure& mu);

}  // namespace bandspec
