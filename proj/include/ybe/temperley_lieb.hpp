#pragma once

#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/yang_baxter.hpp"

namespace ybe {

/// Temperley-Lieb generator U = (1/sqrt2)(I + iM), Hermitian, U^2 = sqrt2 U.
struct TLGenerator {
  double phi = 0.0;
  int epsilon = +1;
  CMatrix matrix;
  double d = 0.0;  // loop value, sqrt 2 here
};

TLGenerator tl_generator(double phi, int epsilon);

struct TlaRelationsReport {
  double square_residual = 0.0;   // || U^2 - d U ||_F
  double braid12_residual = 0.0;  // || U12 U23 U12 - U12 ||_F
  double braid23_residual = 0.0;  // || U23 U12 U23 - U23 ||_F
  bool passed = false;
};

TlaRelationsReport verify_tla(const CMatrix& u, double d,
                              const Tolerance& tol = {});

/// Coefficient functions of the TLA ansatz R = a(u) I + b(u) U:
/// a = rho, b = rho G, G(s) = 4 i eps s / (sqrt2 (1 + s^2 - 2 i eps s)).
cxd tla_g(const SpectralPoint& u, int epsilon);
cxd tla_rho(const SpectralPoint& u, int epsilon);

struct FunctionalEquationReport {
  cxd lhs;
  cxd rhs;
  double residual = 0.0;
  bool passed = false;
};

/// Residual of the coefficient functional equation at (u, v) with the
/// middle parameter (u+v)/(1+uv).
FunctionalEquationReport tla_solution_check(const SpectralPoint& u,
                                            const SpectralPoint& v,
                                            int epsilon,
                                            const Tolerance& tol = {});

/// cos(theta) I + sin(theta) M with M = -i (sqrt2 U - I); equals
/// r_matrix_4d(theta, phi) exactly at epsilon = -1.
CMatrix r_from_tla(double theta, double phi, int epsilon);

/// The generalized Bell quartet: psi+- = (|uu> +- e^{-i phi'}|dd>)/sqrt2,
/// phi+- = (|ud> -+ i|du>)/sqrt2.
struct BellQuartet {
  Vector4 psi_plus;
  Vector4 psi_minus;
  Vector4 phi_plus;
  Vector4 phi_minus;
};

BellQuartet bell_states(double phi_prime);

/// 4-site conformal-block pair |e1>, |e2> as 16-dim vectors.
struct BasisPair {
  cxd nu;
  double phi_prime = 0.0;
  CVector e1;
  CVector e2;
};

BasisPair basis_e(cxd nu, double phi_prime);

inline double phi_prime_from_phi(double phi) {
  return -(phi + 1.5 * kPi);
}

struct ReducedPair {
  Matrix2 a2;
  Matrix2 b2;
  double leakage = 0.0;
};

/// Matrix elements <e_i| R12 |e_j>, <e_i| R23 |e_j> on the 16-dim register;
/// throws LeakageExceedsTolerance when R leaks out of span{e1, e2}.
ReducedPair reduce_r(double theta, double phi, cxd nu,
                     const Tolerance& tol = {});

enum class FusionLabel { kZero, kHalf, kOne };

/// Number of fusion paths of n spin-1/2 Ising anyons to the given total
/// charge, by dynamic programming over the fusion table.
long fusion_dim(int n_half_anyons, FusionLabel total);

}  // namespace ybe
