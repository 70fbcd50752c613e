#pragma once

#include "ybe/matrix.hpp"

namespace ybe {

/// Sign convention for the spectral-to-angle map: PLUS uses 1 + s^2 in the
/// real part of the ratio, MINUS uses 1 - s^2. Both ratios are unimodular
/// for real s; only PLUS combines consistently with middle_param.
enum class Convention { kPlus, kMinus };

struct AngleParameters {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double phi = 0.0;
  int epsilon = +1;
  Convention convention = Convention::kPlus;
};

/// The real spectral variable: the value of beta*u treated as real
/// (the rapidity-like parameter; beta*u = (1-x)/(1+x) in the x picture).
struct SpectralPoint {
  double s = 0.0;
};

struct YbeResidual {
  CMatrix lhs;
  CMatrix rhs;
  double frobenius_residual = 0.0;
  bool passed = false;
};

/// 4x4 braid matrix b(q) = (1/sqrt2)(I + M), q = e^{i phi}, M^2 = -I.
CMatrix braid_b(double phi);

/// Residual of || b12 b23 b12 - b23 b12 b23 ||_F on the 8-dim register.
YbeResidual verify_braid_relation(const CMatrix& b, const Tolerance& tol = {});

struct BaxterizedMatrix {
  CMatrix matrix;
  bool unitary = false;  // false: unitarization failed, raw matrix returned
};

/// rho(x) (b + x lambda1 lambda2 b^{-1}), unitarized by dividing out the
/// operator norm of the unnormalized result.
BaxterizedMatrix yang_baxterize(const CMatrix& b, cxd lambda1, cxd lambda2,
                                double x);

/// The 4x4 Yang-Baxter matrix: cos(theta) I + sin(theta) M with corner
/// entries e^{-i phi} / -e^{i phi}; unitary, det 1.
CMatrix r_matrix_4d(double theta, double phi);

/// 2D matrices acting on the conformal-block basis (|e1>, |e2>):
/// A = diag(e^{-i theta}, e^{i theta}); B = cos(theta) I - i sin(theta) X.
Matrix2 a_2d(double theta);
Matrix2 b_2d(double theta);

/// theta from the unimodular spectral ratio; principal branch.
/// Throws NonUnimodularRatio when the ratio is off the unit circle.
double spectral_to_angle(const SpectralPoint& p, int epsilon,
                         Convention convention);

/// Rapidity addition (u + v)/(1 + s t) in the s variable.
SpectralPoint middle_param(const SpectralPoint& u, const SpectralPoint& v);

/// Closed-form theta2 from (e^{-2i theta2}+1)(i - sec(t1-t3) sin(t1+t3)) = 2i.
/// Throws SingularConstraint when cos(theta1 - theta3) = 0.
double solve_theta2(double theta1, double theta3);

YbeResidual verify_ybe_2d(const AngleParameters& angles,
                          const Tolerance& tol = {});
YbeResidual verify_ybe_4d(const AngleParameters& angles,
                          const Tolerance& tol = {});

/// Two-qubit pure-state concurrence |<psi*| sy x sy |psi>| of
/// psi = R(theta, phi) * input.
double concurrence_after_r(double theta, double phi, const CVector& input);

}  // namespace ybe
