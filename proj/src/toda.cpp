#include "bandspec/toda.hpp"

#include <algorithm>
#include <cmath>

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"
#include "bandspec/spectral.hpp"

namespace bandspec {

Matrix pi_skew(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatchError("pi_skew: matrix not square");
  Matrix lower = a.triangularView<Eigen::StrictlyLower>();
  return lower - lower.adjoint();
}

Matrix pi_upper(const Matrix& a) { return a - pi_skew(a); }

Matrix toda_rhs(const Matrix& x) {
  Matrix b = pi_skew(x);
  return x * b - b * x;
}

TodaSolution toda_qr_flow(const BandedHermitian& x0, double t, double tol) {
  TodaSolution sol;
  sol.t = t;
  const Matrix dense0 = x0.dense();
  const int dim = x0.dim();
  const int k = x0.k();

  HermitianEig eig = hermitian_eig(dense0);
  const double spread =
      dim > 0 ? eig.eigenvalues(dim - 1) - eig.eigenvalues(0) : 0.0;
  if (std::abs(t) * spread > 40.0)
    throw ConditioningError("toda_qr_flow: |t| * spectral spread " +
                            std::to_string(std::abs(t) * spread) +
                            " exceeds 40");

  RealVector shifted =
      t * eig.eigenvalues.array() - (t * eig.eigenvalues.array()).maxCoeff();
  Matrix expm = eig.eigenvectors * shifted.array().exp().matrix().asDiagonal() *
                eig.eigenvectors.adjoint();
  QR qr;
  try {
    qr = qr_positive(expm, 1e-14);
  } catch (const RankDeficientError&) {
    throw ConditioningError("toda_qr_flow: exp(tX) numerically singular");
  }
  double dmax = qr.r.diagonal().real().maxCoeff();
  double dmin = qr.r.diagonal().real().minCoeff();
  if (dmin <= 0.0 || dmax / dmin > 1e13)
    throw ConditioningError("toda_qr_flow: R factor condition " +
                            std::to_string(dmax / dmin));
  sol.q = qr.q;
  sol.r = qr.r;

  Matrix flowed = qr.q.adjoint() * dense0 * qr.q;
  sol.x = banded_part(flowed, k);

  HermitianEig eig_t = hermitian_eig(sol.x.dense());
  sol.eig_drift = (eig_t.eigenvalues - eig.eigenvalues).cwiseAbs().maxCoeff();

  // L(t)^{-1} is the leading k x k block of R(t)^{-*}.
  Matrix rinv_adj = qr.r.triangularView<Eigen::Upper>()
                        .solve(Matrix::Identity(dim, dim))
                        .adjoint();
  Matrix linv = rinv_adj.topLeftCorner(k, k);
  sol.normalizer = linv.inverse();

  sol.measure = evolve_measure(spectral_map(x0, kMergeTol, tol), t, tol);
  return sol;
}

MatrixMeasure evolve_measure(const MatrixMeasure& mu, double t, double tol) {
  const int k = mu.k();
  if (mu.size() == 0)
    throw DimensionMismatchError("evolve_measure: empty measure");
  double emax = -1e300;
  for (const MeasureAtom& a : mu.atoms()) emax = std::max(emax, 2.0 * t * a.x);

  Matrix s = Matrix::Zero(k, k);
  for (const MeasureAtom& a : mu.atoms())
    s += std::exp(2.0 * t * a.x - emax) * a.weight;
  Matrix l;
  try {
    l = cholesky(s);
  } catch (const NotPositiveDefiniteError&) {
    throw SingularNormalizerError("evolve_measure: normalizer is singular");
  }
  Matrix linv =
      l.triangularView<Eigen::Lower>().solve(Matrix::Identity(k, k));

  std::vector<double> points;
  std::vector<Matrix> weights;
  for (const MeasureAtom& a : mu.atoms()) {
    points.push_back(a.x);
    weights.push_back(std::exp(2.0 * t * a.x - emax) *
                      (linv * a.weight * linv.adjoint()));
  }
  return MatrixMeasure::from_weights(k, points, weights, kMergeTol, tol);
}

BandedHermitian toda_spectral_flow(const BandedHermitian& x0, double t,
                                   double tol) {
  MatrixMeasure mu = spectral_map(x0, kMergeTol, tol);
  return inverse_spectral_map(evolve_measure(mu, t, tol), tol);
}

Matrix toda_rk4(const Matrix& x0, double t, double dt) {
  if (dt <= 0.0) throw StepSizeError("toda_rk4: dt must be positive");
  Matrix x = 0.5 * (x0 + x0.adjoint());
  if (t == 0.0) return x;
  const double total = std::abs(t);
  double done = 0.0;
  while (done < total) {
    double step = std::min(dt, total - done);
    double hs = t > 0 ? step : -step;
    Matrix k1 = toda_rhs(x);
    Matrix k2 = toda_rhs(x + 0.5 * hs * k1);
    Matrix k3 = toda_rhs(x + 0.5 * hs * k2);
    Matrix k4 = toda_rhs(x + hs * k3);
    x += (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite())
      throw StepSizeError("toda_rk4: iterate diverged");
    double scale = std::max(1.0, max_abs(x));
    if (max_abs(x - x.adjoint()) > 1e-8 * scale)
      throw StepSizeError("toda_rk4: Hermiticity drift beyond roundoff");
    x = 0.5 * (x + x.adjoint());
    done += step;
  }
  return x;
}

}  // namespace bandspec
