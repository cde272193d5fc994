#include "bandspec/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {

Complex unit_box(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  double im = u(rng);
  return {re, im};
}

Matrix complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      double re = g(rng);
      double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

// increasing pivot columns, uniform over all valid choices
std::vector<int> sample_pivots(int rows, int cols, Rng& rng) {
  std::vector<int> all(cols);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < rows; ++i) {
    std::uniform_int_distribution<int> pick(i, cols - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  std::vector<int> pivots(all.begin(), all.begin() + rows);
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

}  // namespace

Matrix random_hermitian(int dim, Rng& rng) {
  Matrix g = complex_gaussian(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

Matrix random_echelon(int rows, int cols, Rng& rng) {
  if (rows > cols)
    throw DimensionMismatchError("random_echelon: rows > cols");
  std::uniform_real_distribution<double> pivot(0.5, 1.5);
  std::vector<int> pivots = sample_pivots(rows, cols, rng);
  Matrix m = Matrix::Zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    m(i, pivots[i]) = pivot(rng);
    for (int j = pivots[i] + 1; j < cols; ++j) m(i, j) = unit_box(rng);
  }
  return m;
}

BandedHermitian random_banded(int k, int dim, Rng& rng) {
  if (k <= 0 || dim <= 0)
    throw DimensionMismatchError("random_banded: k and dim must be positive");
  const int n = (dim + k - 1) / k;
  const int last = dim - (n - 1) * k;

  auto hermitian_block = [&](int w) {
    Matrix u(w, w);
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) u(i, j) = unit_box(rng);
    Matrix h = 0.5 * (u + u.adjoint());
    return h;
  };

  std::vector<Matrix> diag;
  for (int j = 0; j < n; ++j) diag.push_back(hermitian_block(j == n - 1 ? last : k));

  std::vector<Matrix> sub;
  std::uniform_real_distribution<double> pivot(0.5, 1.5);
  for (int j = 0; j + 2 < n; ++j) {
    Matrix b = Matrix::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      b(i, i) = pivot(rng);
      for (int c = i + 1; c < k; ++c) b(i, c) = unit_box(rng);
    }
    sub.push_back(b);
  }
  if (n >= 2) sub.push_back(random_echelon(last, k, rng));
  return BandedHermitian(k, dim, std::move(diag), std::move(sub));
}

MatrixMeasure random_measure(int k, int dim, Rng& rng) {
  std::uniform_int_distribution<int> part(1, k);
  std::uniform_real_distribution<double> point(-2.0, 2.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<int> ranks;
    int total = 0;
    while (total < dim) {
      int r = std::min(part(rng), dim - total);
      ranks.push_back(r);
      total += r;
    }
    std::vector<double> points(ranks.size());
    for (double& x : points) x = point(rng);
    std::sort(points.begin(), points.end());
    bool spaced = true;
    for (size_t i = 0; i + 1 < points.size(); ++i)
      if (points[i + 1] - points[i] < 1e-2) spaced = false;
    if (!spaced) continue;

    std::vector<Matrix> weights;
    for (int r : ranks) {
      Matrix v = complex_gaussian(k, r, rng);
      weights.push_back(v * v.adjoint());
    }
    MatrixMeasure mu = normalize(
        MatrixMeasure::from_weights(k, points, weights));
    if (mu.total_rank() != dim) continue;
    if (validate_measure(mu, dim).member) return mu;
  }
  throw NumericalError("random_measure: no valid draw in 100 attempts");
}

}  // namespace bandspec
