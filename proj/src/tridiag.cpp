#include "bandspec/tridiag.hpp"

#include <algorithm>
#include <cmath>

#include "bandspec/errors.hpp"
#include "bandspec/linalg.hpp"
#include "bandspec/spectral.hpp"

namespace bandspec {

namespace {

void require_hermitian(const Matrix& a, const char* where) {
  if (a.rows() != a.cols())
    throw DimensionMismatchError(std::string(where) + ": matrix not square");
  double scale = std::max(1.0, max_abs(a));
  if (max_abs(a - a.adjoint()) > 1e-8 * scale)
    throw NotHermitianError(std::string(where) + ": input not Hermitian");
}

// Extend orthonormal columns q (m x r) to an m x m unitary.
Matrix complete_unitary(const Matrix& q) {
  const int m = static_cast<int>(q.rows());
  const int r = static_cast<int>(q.cols());
  if (r == m) return q;
  Matrix proj = Matrix::Identity(m, m) - q * q.adjoint();
  QR comp = qr_ref(proj, 1e-8);
  if (comp.q.cols() != m - r)
    throw RankDeficientError("complete_unitary: complement rank");
  Matrix u(m, m);
  u.leftCols(r) = q;
  u.rightCols(m - r) = comp.q;
  return u;
}

}  // namespace

BandedHermitian LanczosResult::banded() const {
  if (!completed)
    throw NotInClassError("Lanczos run did not complete; no banded form");
  int dim = 0;
  for (const Matrix& v : basis) dim += static_cast<int>(v.cols());
  const int k = static_cast<int>(basis.empty() ? 0 : basis[0].cols());
  return BandedHermitian(k, dim, a, b);
}

LanczosResult block_lanczos(const Matrix& a, const Matrix& v, int steps,
                            bool reorth, double tol) {
  require_hermitian(a, "block_lanczos");
  const int dim = static_cast<int>(a.rows());
  if (v.rows() != dim)
    throw DimensionMismatchError("block_lanczos: starting block height");
  if (steps < 0) steps = dim;

  // Residual ranks are judged against the operator scale, not the
  // residual's own (a fully converged residual is noise).
  double ambient = 0.0;
  for (int c = 0; c < dim; ++c) ambient = std::max(ambient, a.col(c).norm());
  ambient = std::max(ambient, 1e-300);

  LanczosResult out;
  QR start = qr_ref(v, tol);
  if (start.q.cols() == 0)
    throw RankDeficientError("block_lanczos: starting block has rank 0");
  out.b_start = start.r;
  out.basis.push_back(start.q);

  int collected = static_cast<int>(start.q.cols());
  for (int j = 0; j < steps; ++j) {
    const Matrix& vj = out.basis[j];
    Matrix z = a * vj;
    if (j > 0) z.noalias() -= out.basis[j - 1] * out.b[j - 1].adjoint();
    Matrix aj = vj.adjoint() * z;
    aj = 0.5 * (aj + aj.adjoint());
    z.noalias() -= vj * aj;
    if (reorth)
      for (const Matrix& vi : out.basis)
        z.noalias() -= vi * (vi.adjoint() * z);
    out.a.push_back(aj);
    out.steps = j + 1;

    QR qr = qr_ref(z, tol, ambient);
    if (qr.q.cols() == 0) {
      out.completed = collected == dim;
      out.early_termination = !out.completed;
      return out;
    }
    if (collected == dim)  // residual should have vanished; treat as noise
      break;
    out.b.push_back(qr.r);
    out.basis.push_back(qr.q);
    collected += static_cast<int>(qr.q.cols());
  }
  out.completed = collected == dim && out.a.size() == out.basis.size();
  out.early_termination = false;
  return out;
}

LanczosResult block_lanczos_leading(const Matrix& a, int k, bool reorth,
                                    double tol) {
  const int dim = static_cast<int>(a.rows());
  if (k <= 0 || k > dim)
    throw DimensionMismatchError("block_lanczos_leading: bad k");
  return block_lanczos(a, selection_block(dim, k, 0), -1, reorth, tol);
}

BandedHermitian householder_blocktridiag(const Matrix& a, int k, double tol) {
  require_hermitian(a, "householder_blocktridiag");
  const int dim = static_cast<int>(a.rows());
  if (k <= 0) throw DimensionMismatchError("householder_blocktridiag: k <= 0");
  Matrix m = 0.5 * (a + a.adjoint());
  const double scale = std::max(1.0, max_abs(m));

  for (int j = 0; j + k + 1 < dim; ++j) {
    const int len = dim - k - j;
    Vector v = m.block(k + j, j, len, 1);
    if (len <= 1 || v.tail(len - 1).norm() <= 1e-14 * scale) continue;
    double norm = v.norm();
    Complex phase =
        std::abs(v(0)) == 0.0 ? Complex(1) : v(0) / std::abs(v(0));
    Vector u = v;
    u(0) += phase * norm;
    Vector w = u / u.norm();
    // two-sided reflector restricted to the rows/columns it can touch
    m.block(k + j, j, len, dim - j).noalias() -=
        2.0 * w * (w.adjoint() * m.block(k + j, j, len, dim - j));
    m.block(j, k + j, dim - j, len).noalias() -=
        2.0 * (m.block(j, k + j, dim - j, len) * w) * w.adjoint();
    m.block(k + j + 1, j, len - 1, 1).setZero();
    m.block(j, k + j + 1, 1, len - 1).setZero();
    m(k + j, j) = -phase * norm;
    m(j, k + j) = std::conj(m(k + j, j));
  }

  // Block-diagonal unitary similarity making every subdiagonal block an
  // echelon matrix with positive pivots (the class normal form).
  BandedHermitian raw = banded_part(m, k);
  const int n = raw.blocks();
  std::vector<Matrix> diag = raw.diag_blocks();
  std::vector<Matrix> sub = raw.sub_blocks();
  Matrix u = Matrix::Identity(static_cast<int>(diag[0].rows()),
                              static_cast<int>(diag[0].rows()));
  for (int j = 0; j + 1 < n; ++j) {
    diag[j] = u.adjoint() * diag[j] * u;
    Matrix t = sub[j] * u;
    QR qr = qr_ref(t, tol);
    Matrix next = complete_unitary(qr.q);
    sub[j] = next.adjoint() * t;
    // exact echelon rows for the full-rank part
    sub[j].topRows(qr.r.rows()) = qr.r;
    u = next;
  }
  diag[n - 1] = u.adjoint() * diag[n - 1] * u;
  for (Matrix& d : diag) d = 0.5 * (d + d.adjoint());
  return BandedHermitian(k, dim, std::move(diag), std::move(sub));
}

EquivalenceReport equivalence_check(const Matrix& a, int k, double tol,
                                    double rank_tol) {
  require_hermitian(a, "equivalence_check");
  EquivalenceReport rep;
  rep.scale = std::max(1.0, max_abs(a));

  LanczosResult lan = block_lanczos_leading(a, k, true, rank_tol);
  rep.lanczos_steps = lan.steps;
  rep.early_termination = lan.early_termination;
  if (!lan.completed) return rep;  // incomparable, never asserted against

  Matrix jl;
  try {
    jl = lan.banded().dense();
  } catch (const Error&) {
    return rep;  // irregular block sizes: outside the class, incomparable
  }
  rep.comparable = true;

  Matrix jh = householder_blocktridiag(a, k, rank_tol).dense();
  Matrix ji =
      inverse_spectral_map(spectral_measure_dense(a, k), rank_tol).dense();

  rep.lanczos_vs_householder = max_abs(jl - jh);
  rep.lanczos_vs_inverse = max_abs(jl - ji);
  rep.householder_vs_inverse = max_abs(jh - ji);
  double worst = std::max({rep.lanczos_vs_householder, rep.lanczos_vs_inverse,
                           rep.householder_vs_inverse});
  rep.agree = worst <= tol * rep.scale;
  return rep;
}

}  // namespace bandspec
