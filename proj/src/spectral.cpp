#include "bandspec/spectral.hpp"

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"

namespace bandspec {

MatrixMeasure spectral_measure_dense(const Matrix& m, int k, double merge_tol,
                                     double rank_tol) {
  if (k <= 0) throw DimensionMismatchError("spectral measure: k <= 0");
  HermitianEig eig = hermitian_eig(m, std::max(rank_tol, 1e-8));
  const int dim = static_cast<int>(m.rows());
  std::vector<MeasureAtom> atoms;
  atoms.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    Vector head = Vector::Zero(k);
    head.head(std::min(k, dim)) = eig.eigenvectors.col(i).head(std::min(k, dim));
    atoms.push_back({eig.eigenvalues(i), head * head.adjoint(), Matrix()});
  }
  return MatrixMeasure(k, std::move(atoms), merge_tol, rank_tol);
}

MatrixMeasure spectral_map(const BandedHermitian& j, double merge_tol,
                           double rank_tol) {
  return spectral_measure_dense(j.dense(), j.k(), merge_tol, rank_tol);
}

BandedHermitian inverse_spectral_map(const MatrixMeasure& mu, double tol) {
  MeasureClassReport rep = validate_measure(mu, -1, tol);
  if (!rep.member) {
    std::string msg = "measure outside the representable class:";
    for (const std::string& s : rep.violations) msg += "\n  " + s;
    throw NotInClassError(msg);
  }
  const int k = mu.k();
  const int dim = rep.dim;
  const int n = rep.n;
  if (n == 1)  // mass = identity forces dim == k; the matrix is its moment
    return BandedHermitian(k, dim, {moment(mu, 1)}, {});

  OrthonormalFamily fam = orthonormal_sequence(mu, n, tol);
  LastPolynomial last = last_polynomial(mu, fam, tol);

  std::vector<Matrix> diag = fam.a;
  diag.push_back(0.5 * (last.a_second_last + last.a_second_last.adjoint()));
  diag.push_back(0.5 * (last.a_last + last.a_last.adjoint()));
  for (size_t i = 0; i + 2 < diag.size(); ++i)
    diag[i] = 0.5 * (diag[i] + diag[i].adjoint());
  std::vector<Matrix> sub = fam.b;
  sub.push_back(last.b_last);
  return BandedHermitian(k, dim, std::move(diag), std::move(sub));
}

std::vector<MatrixPolynomial> lanczos_polynomials(const BandedHermitian& j,
                                                  double tol) {
  const int k = j.k();
  const int n = j.blocks();
  std::vector<MatrixPolynomial> p;
  p.push_back(MatrixPolynomial::identity(k));
  for (int i = 1; i < n; ++i) {
    MatrixPolynomial t = p[i - 1].times_x() - p[i - 1].times_matrix(j.a(i - 1));
    if (i >= 2) t = t - p[i - 2].times_matrix(j.b(i - 2).adjoint());
    p.push_back(t.times_matrix(right_pseudoinverse(j.b(i - 1), tol)));
  }
  return p;
}

}  // namespace bandspec
