#pragma once

#include <array>

#include "ybe/matrix.hpp"

namespace ybe {

/// Two-CNOT decomposition of the four-dimensional R-matrix into single-qubit
/// factors V1..V6 (V4 = identity, V5 = V1^dag, V6 = V2^dag).
struct TwoQubitDecomposition {
  Matrix2 v1, v2, v3, v4, v5, v6;
  double global_phase = 0.0;
};

/// Characteristic polynomial and trace of gamma(u) = u (sy x sy) u^T (sy x sy)
/// after special-unitarization of u.
struct GammaInvariant {
  std::array<cxd, 5> char_poly;  // c0..c4, monic (c4 = 1)
  cxd trace;
};

struct CnotCostClass {
  int cost = 3;  // 0, 1, 2, or 3 CNOT gates
};

/// The CNOT2 permutation (swaps the |01> and |11> basis states).
Matrix4 cnot2();

/// Fixed single-qubit factors whose two-CNOT sandwich reproduces
/// r_matrix_4d(theta, phi); throws ReconstructionMismatch if the product
/// fails to match up to a global phase.
TwoQubitDecomposition decompose_r(double theta, double phi,
                                  const Tolerance& tol = Tolerance{});

/// Product (v2 x v1) CNOT2 (v3 x v4) CNOT2 (v6 x v5). The second factor of
/// each pair carries the decomposition's first qubit in this big-endian basis.
Matrix4 reconstruct(const TwoQubitDecomposition& dec);

GammaInvariant gamma_invariant(const Matrix4& u4,
                               const Tolerance& tol = Tolerance{});

/// Minimal CNOT count needed to synthesize u4 with local gates, decided by
/// the characteristic polynomial of gamma: (x -+ 1)^4 -> 0,
/// (x^2 + 1)^2 -> 1, real trace -> 2, otherwise 3.
CnotCostClass classify_cnot_cost(const Matrix4& u4,
                                 const Tolerance& tol = Tolerance{});

/// Success probability (1/3)^(n+1) of a linear-optical circuit containing n
/// probabilistic CNOT gates.
double success_probability(int n_cnots);

}  // namespace ybe
