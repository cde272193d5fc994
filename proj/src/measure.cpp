#include "bandspec/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"

namespace bandspec {

Matrix weight_factors(const Matrix& w, double tol) {
  HermitianEig eig = hermitian_eig(w, std::max(tol, 1e-8));
  const int k = static_cast<int>(w.rows());
  double lmax = k > 0 ? std::max(eig.eigenvalues(k - 1), 0.0) : 0.0;
  if (k > 0 && eig.eigenvalues(0) < -std::max(tol * lmax, tol))
    throw NotPSDError("weight_factors: negative eigenvalue " +
                      std::to_string(eig.eigenvalues(0)));
  int rank = 0;
  for (int i = 0; i < k; ++i)
    if (eig.eigenvalues(i) > tol * lmax) ++rank;

  Matrix v(k, rank);
  for (int i = 0; i < rank; ++i) {
    // descending eigenvalue order
    int src = k - 1 - i;
    Vector col = std::sqrt(eig.eigenvalues(src)) * eig.eigenvectors.col(src);
    int lead = 0;
    while (lead < k && std::abs(col(lead)) <= tol * col.norm()) ++lead;
    if (lead < k) col *= std::conj(col(lead)) / std::abs(col(lead));
    v.col(i) = col;
  }
  return v;
}

MatrixMeasure::MatrixMeasure(int k, std::vector<MeasureAtom> atoms,
                             double merge_tol, double rank_tol)
    : k_(k) {
  if (k <= 0) throw DimensionMismatchError("MatrixMeasure: k must be positive");
  for (const MeasureAtom& a : atoms)
    if (a.weight.rows() != k || a.weight.cols() != k)
      throw DimensionMismatchError("MatrixMeasure: weight shape");
  std::sort(atoms.begin(), atoms.end(),
            [](const MeasureAtom& a, const MeasureAtom& b) { return a.x < b.x; });

  double range = atoms.empty() ? 0.0 : atoms.back().x - atoms.front().x;
  const double merge = merge_tol * range;
  struct Group {
    double sum_x, last_x;
    int count;
    Matrix weight;
  };
  std::vector<Group> groups;
  for (const MeasureAtom& a : atoms) {
    if (!groups.empty() && a.x - groups.back().last_x <= merge) {
      Group& g = groups.back();
      g.sum_x += a.x;
      g.last_x = a.x;
      g.count += 1;
      g.weight += a.weight;
    } else {
      groups.push_back({a.x, a.x, 1, a.weight});
    }
  }
  for (const Group& g : groups)
    atoms_.push_back({g.sum_x / g.count, g.weight, Matrix()});
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    it->factor = weight_factors(it->weight, rank_tol);
    it->weight = it->factor * it->factor.adjoint();  // PSD to roundoff
    if (it->factor.cols() == 0)
      it = atoms_.erase(it);
    else
      ++it;
  }
}

MatrixMeasure MatrixMeasure::from_weights(int k,
                                          const std::vector<double>& points,
                                          const std::vector<Matrix>& weights,
                                          double merge_tol, double rank_tol) {
  if (points.size() != weights.size())
    throw DimensionMismatchError("from_weights: points/weights length");
  std::vector<MeasureAtom> atoms;
  atoms.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i)
    atoms.push_back({points[i], weights[i], Matrix()});
  return MatrixMeasure(k, std::move(atoms), merge_tol, rank_tol);
}

int MatrixMeasure::total_rank() const {
  int n = 0;
  for (const MeasureAtom& a : atoms_) n += static_cast<int>(a.factor.cols());
  return n;
}

Matrix MatrixMeasure::total_mass() const {
  Matrix m = Matrix::Zero(k_, k_);
  for (const MeasureAtom& a : atoms_) m += a.weight;
  return m;
}

Matrix quasi_inner(const MatrixPolynomial& f, const MatrixPolynomial& g,
                   const MatrixMeasure& mu) {
  if (f.rows() != mu.k() || g.rows() != mu.k())
    throw DimensionMismatchError("quasi_inner: polynomial height != k");
  Matrix out = Matrix::Zero(f.cols(), g.cols());
  for (const MeasureAtom& a : mu.atoms())
    out.noalias() += f.eval(a.x).adjoint() * a.weight * g.eval(a.x);
  return out;
}

Matrix moment(const MatrixMeasure& mu, int i) {
  Matrix out = Matrix::Zero(mu.k(), mu.k());
  for (const MeasureAtom& a : mu.atoms()) out += std::pow(a.x, i) * a.weight;
  return out;
}

Matrix krylov_matrix(const MatrixMeasure& mu, int d) {
  const int k = mu.k();
  const int dim = mu.total_rank();
  Matrix m(dim, (d + 1) * k);
  int row = 0;
  for (const MeasureAtom& a : mu.atoms()) {
    const int nj = static_cast<int>(a.factor.cols());
    Matrix vadj = a.factor.adjoint();  // n_j x k
    double xp = 1.0;
    for (int i = 0; i <= d; ++i) {
      m.block(row, i * k, nj, k) = xp * vadj;
      xp *= a.x;
    }
    row += nj;
  }
  return m;
}

MeasureClassReport validate_measure(const MatrixMeasure& mu, int expected_dim,
                                    double tol) {
  MeasureClassReport rep;
  rep.dim = mu.total_rank();
  const int k = mu.k();
  const int dim = expected_dim >= 0 ? expected_dim : rep.dim;
  rep.n = dim > 0 ? (dim + k - 1) / k : 0;
  rep.ell = rep.n * k - dim;

  if (expected_dim >= 0 && rep.dim != expected_dim)
    rep.violations.push_back("total rank " + std::to_string(rep.dim) +
                             " != expected " + std::to_string(expected_dim));
  rep.mass_error = max_abs(mu.total_mass() - Matrix::Identity(k, k));
  if (rep.mass_error > kEquivTol)
    rep.violations.push_back("total mass differs from identity by " +
                             std::to_string(rep.mass_error));
  if (rep.n > 0) {
    rep.krylov_rank = rank_with_tol(krylov_matrix(mu, rep.n - 1), tol);
    if (rep.krylov_rank != dim)
      rep.violations.push_back("moment block matrix rank " +
                               std::to_string(rep.krylov_rank) + " != " +
                               std::to_string(dim));
  }
  rep.member = rep.violations.empty();
  return rep;
}

MatrixMeasure normalize(const MatrixMeasure& mu) {
  Matrix mass = mu.total_mass();
  Matrix l;
  try {
    l = cholesky(mass);
  } catch (const NotPositiveDefiniteError&) {
    throw SingularNormalizerError("normalize: total mass is singular");
  }
  Matrix linv = l.triangularView<Eigen::Lower>().solve(
      Matrix::Identity(mu.k(), mu.k()));
  std::vector<MeasureAtom> atoms;
  atoms.reserve(mu.size());
  for (const MeasureAtom& a : mu.atoms())
    atoms.push_back({a.x, linv * a.weight * linv.adjoint(), Matrix()});
  return MatrixMeasure(mu.k(), std::move(atoms));
}

}  // namespace bandspec
