#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <utility>

namespace ybe {

using cxd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute/relative tolerance pair used by every comparison predicate.
struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-10;
};

/// Kronecker product, site 1 = leftmost factor (big-endian basis order).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Embeds a two-site operator onto the ordered site pair (i, j) of an
/// n-site register, 1-based. The first tensor factor of op4 acts on site i.
/// Realized as P^{-1} (op4 otimes I) P with P the explicit bit-permutation
/// matrix; the adjacent case (i, i+1) equals I^{(i-1)} x op4 x I^{(n-i-1)}.
CMatrix embed_pair(const CMatrix& op4, int site_i, int site_j, int n_sites);

struct PhaseComparison {
  bool equal = false;
  double phase = 0.0;   // alpha such that Y ~ e^{i alpha} X when equal
  double residual = 0.0;
};

/// True iff X and Y differ by a global phase: |tr(X^dag Y)| = dim within tol.
PhaseComparison equal_up_to_global_phase(const CMatrix& x, const CMatrix& y,
                                         const Tolerance& tol = {});

/// Coefficients (c0..c4) of det(xI - M), monic (c4 = 1), via the
/// Faddeev-LeVerrier trace recursion.
std::array<cxd, 5> char_poly_4(const CMatrix& m);

bool is_unitary(const CMatrix& m, const Tolerance& tol = {});

double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// Frobenius distance minimized over a global phase; large sentinel when the
/// overlap trace vanishes.
double phase_distance(const CMatrix& a, const CMatrix& b);

}  // namespace ybe
