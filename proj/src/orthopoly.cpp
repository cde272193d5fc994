#include "bandspec/orthopoly.hpp"

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"

namespace bandspec {

namespace {

Matrix inv_pd(const Matrix& gram, double tol, const char* where) {
  HermitianEig eig = hermitian_eig(gram, std::max(tol, 1e-8));
  const int n = static_cast<int>(gram.rows());
  double lmax = n > 0 ? eig.eigenvalues(n - 1) : 0.0;
  if (n == 0 || eig.eigenvalues(0) <= tol * std::max(lmax, 0.0))
    throw NotDefiniteError(std::string(where) + ": Gram block is singular");
  RealVector inv = eig.eigenvalues.cwiseInverse();
  return eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

MonicFamily monic_sequence(const MatrixMeasure& mu, int n, double tol) {
  if (n < 1) throw DimensionMismatchError("monic_sequence: n must be >= 1");
  const int k = mu.k();
  MonicFamily fam;
  fam.pi.push_back(MatrixPolynomial::identity(k));
  fam.gamma.push_back(quasi_inner(fam.pi[0], fam.pi[0], mu));

  for (int j = 0; j + 1 < n; ++j) {
    Matrix ginv = inv_pd(fam.gamma[j], tol, "monic_sequence");
    Matrix c = ginv * quasi_inner(fam.pi[j].times_x(), fam.pi[j], mu);
    Matrix d = j == 0 ? fam.gamma[0]
                      : inv_pd(fam.gamma[j - 1], tol, "monic_sequence") *
                            fam.gamma[j];
    MatrixPolynomial next =
        fam.pi[j].times_x() - fam.pi[j].times_matrix(c);
    if (j > 0) next = next - fam.pi[j - 1].times_matrix(d);
    fam.c.push_back(c);
    fam.d.push_back(d);
    fam.gamma.push_back(quasi_inner(next, next, mu));
    fam.pi.push_back(std::move(next));
  }
  return fam;
}

OrthonormalFamily orthonormal_sequence(const MatrixMeasure& mu, int n,
                                       double tol) {
  if (n < 2)
    throw DimensionMismatchError("orthonormal_sequence: n must be >= 2");
  OrthonormalFamily fam;
  fam.monic = monic_sequence(mu, n, tol);

  std::vector<Matrix> half(n - 1), inv_half(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    half[j] = hermitian_sqrt(fam.monic.gamma[j], tol);
    inv_half[j] = hermitian_inv_sqrt(fam.monic.gamma[j], tol);
  }

  const int k = mu.k();
  fam.q.push_back(Matrix::Identity(k, k));
  for (int j = 0; j + 2 < n; ++j) {
    // x P_j = P_{j+1} B_j + ... forces Q_{j+1} B_j to be the positive QR
    // of gamma_{j+1}^{-1/2} D_{j+1}* gamma_j^{1/2} Q_j.
    Matrix m = inv_half[j + 1] * fam.monic.d[j + 1].adjoint() * half[j] *
               fam.q[j];
    QR qr = qr_positive(m, tol);
    fam.q.push_back(qr.q);
    fam.b.push_back(qr.r);
    Matrix a = fam.q[j].adjoint() * half[j] * fam.monic.c[j] * inv_half[j] *
               fam.q[j];
    fam.a.push_back(a);
  }
  for (int j = 0; j + 1 < n; ++j)
    fam.p.push_back(fam.monic.pi[j].times_matrix(inv_half[j] * fam.q[j]));
  return fam;
}

LastPolynomial last_polynomial(const MatrixMeasure& mu,
                               const OrthonormalFamily& fam, double tol) {
  const int n = static_cast<int>(fam.p.size()) + 1;
  if (n < 2)
    throw DimensionMismatchError("last_polynomial: need at least P_0");
  const int k = mu.k();
  const int dim = mu.total_rank();
  const int ell = n * k - dim;
  if (ell < 0 || ell >= k)
    throw DimensionMismatchError("last_polynomial: rank does not match n");

  const MatrixPolynomial& p2 = fam.p[n - 2];
  LastPolynomial out;
  out.a_second_last = quasi_inner(p2, p2.times_x(), mu);
  MatrixPolynomial t = p2.times_x() - p2.times_matrix(out.a_second_last);
  if (n >= 3)
    t = t - fam.p[n - 3].times_matrix(fam.b[n - 3].adjoint());

  Matrix gram = quasi_inner(t, t, mu);
  out.b_last = ref_factor(gram, tol);
  if (out.b_last.rows() != k - ell)
    throw RankMismatchError("last_polynomial: tail Gram rank " +
                            std::to_string(out.b_last.rows()) + " != " +
                            std::to_string(k - ell));
  out.p_last = t.times_matrix(right_pseudoinverse(out.b_last, tol));
  out.a_last = quasi_inner(out.p_last, out.p_last.times_x(), mu);
  return out;
}

int null_dimension(const MatrixMeasure& mu, int d, double tol) {
  if (d < 0) return 0;
  Matrix m = krylov_matrix(mu, d);
  return (d + 1) * mu.k() - rank_with_tol(m, tol);
}

}  // namespace bandspec
