#include "ybe/matrix.hpp"

#include <cmath>
#include <vector>

#include "ybe/errors.hpp"

namespace ybe {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

namespace {

// Permutation matrix P with P|b_1..b_n> = |b_{p(1)}..b_{p(n)}>, where the
// output bit order puts sites (i, j) first.
CMatrix pair_front_permutation(int site_i, int site_j, int n) {
  const int dim = 1 << n;
  std::vector<int> order;
  order.push_back(site_i - 1);
  order.push_back(site_j - 1);
  for (int k = 0; k < n; ++k)
    if (k != site_i - 1 && k != site_j - 1) order.push_back(k);

  CMatrix p = CMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int row = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int bit = (col >> (n - 1 - order[pos])) & 1;
      row |= bit << (n - 1 - pos);
    }
    p(row, col) = 1.0;
  }
  return p;
}

}  // namespace

CMatrix embed_pair(const CMatrix& op4, int site_i, int site_j, int n_sites) {
  if (op4.rows() != 4 || op4.cols() != 4)
    throw DimensionMismatch("embed_pair: operator must be 4x4");
  if (site_i == site_j || site_i < 1 || site_j < 1 || site_i > n_sites ||
      site_j > n_sites)
    throw DimensionMismatch("embed_pair: invalid site pair");

  const int rest = n_sites - 2;
  CMatrix wide = op4;
  if (rest > 0) wide = kron(op4, CMatrix::Identity(1 << rest, 1 << rest));
  const CMatrix p = pair_front_permutation(site_i, site_j, n_sites);
  return p.adjoint() * wide * p;
}

PhaseComparison equal_up_to_global_phase(const CMatrix& x, const CMatrix& y,
                                         const Tolerance& tol) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw DimensionMismatch("equal_up_to_global_phase: mismatched dims");
  const double dim = static_cast<double>(x.rows());
  const cxd overlap = (x.adjoint() * y).trace();
  PhaseComparison out;
  const double scale = tol.abs + tol.rel * dim;
  if (std::abs(std::abs(overlap) - dim) > scale * dim) return out;
  out.phase = std::arg(overlap);
  out.residual = (std::exp(cxd(0, out.phase)) * x - y).norm();
  out.equal = out.residual <= scale * dim;
  return out;
}

std::array<cxd, 5> char_poly_4(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw DimensionMismatch("char_poly_4: matrix must be 4x4");
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with
  // M_{k+1} = A M_k + c_{n-k} I.
  std::array<cxd, 5> c{};
  c[4] = 1.0;
  CMatrix mk = CMatrix::Identity(4, 4);
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk;
    const cxd ck = -mk.trace() / static_cast<double>(k);
    c[4 - k] = ck;
    mk += ck * CMatrix::Identity(4, 4);
  }
  return c;
}

bool is_unitary(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("is_unitary: matrix must be square");
  const double dim = static_cast<double>(m.rows());
  const double dev =
      (m.adjoint() * m - CMatrix::Identity(m.rows(), m.rows())).norm();
  return dev <= (tol.abs + tol.rel) * dim;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm();
}

double phase_distance(const CMatrix& a, const CMatrix& b) {
  const cxd overlap = (a.adjoint() * b).trace();
  if (std::abs(overlap) < 1e-14) return 1e9;
  return (a * (overlap / std::abs(overlap)) - b).norm();
}

}  // namespace ybe
