#include "groverian/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace groverian {

namespace {

double max_off_diagonal(const SquareMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// Zeroes h(p, q) with the unitary G = diag(1, e^{-i phi}) * R(c, s) acting on
// the (p, q) plane, where phi = arg h(p, q) and R is the real Jacobi rotation
// of the phase-stripped 2x2 block. Updates h <- G^dagger h G and v <- v G.
void rotate(SquareMatrix& h, SquareMatrix& v, std::size_t p, std::size_t q) {
  const Cx hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const Cx phase = hpq / mag;

  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Cx g_pp = c;
  const Cx g_pq = s;
  const Cx g_qp = -s * std::conj(phase);
  const Cx g_qq = c * std::conj(phase);

  const std::size_t n = h.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Cx hp = h(k, p);
    const Cx hq = h(k, q);
    h(k, p) = hp * g_pp + hq * g_qp;
    h(k, q) = hp * g_pq + hq * g_qq;
    const Cx vp = v(k, p);
    const Cx vq = v(k, q);
    v(k, p) = vp * g_pp + vq * g_qp;
    v(k, q) = vp * g_pq + vq * g_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Cx hp = h(p, k);
    const Cx hq = h(q, k);
    h(p, k) = std::conj(g_pp) * hp + std::conj(g_qp) * hq;
    h(q, k) = std::conj(g_pq) * hp + std::conj(g_qq) * hq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

HermitianEigen hermitian_eigen(const SquareMatrix& m, const Tolerances& tol) {
  if (m.hermitian_defect() > tol.hermitian) throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  const std::size_t n = m.dim();
  SquareMatrix h = m;
  SquareMatrix v = SquareMatrix::identity(n);

  int sweeps = 0;
  while (sweeps < tol.jacobi_max_sweeps && max_off_diagonal(h) >= tol.jacobi_off_diagonal) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(h, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });

  HermitianEigen out{std::vector<double>(n), SquareMatrix(n), sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = h(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const SquareMatrix& m, const Tolerances& tol) {
  return hermitian_eigen(m, tol).values;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& m, const Tolerances& tol) {
  return hermitian_eigen(m.entries(), tol).values;
}

std::vector<double> singular_values(const SquareMatrix& a, const Tolerances& tol) {
  std::vector<double> values = hermitian_eigenvalues(a * a.adjoint(), tol);
  for (double& x : values) x = std::sqrt(std::max(x, 0.0));
  return values;
}

std::vector<double> singular_values(const CoeffMatrix& a, const Tolerances& tol) {
  return singular_values(a.entries(), tol);
}

}  // namespace groverian
