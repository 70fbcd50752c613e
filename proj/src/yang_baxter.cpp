#include "ybe/yang_baxter.hpp"

#include <cmath>

#include "ybe/errors.hpp"

namespace ybe {

namespace {
const cxd kI(0.0, 1.0);
}

CMatrix braid_b(double phi) {
  const cxd q = std::exp(kI * phi);
  CMatrix b(4, 4);
  b << 1, 0, 0, q,
       0, 1, -1, 0,
       0, 1, 1, 0,
       -1.0 / q, 0, 0, 1;
  return b / std::sqrt(2.0);
}

YbeResidual verify_braid_relation(const CMatrix& b, const Tolerance& tol) {
  if (b.rows() != 4 || b.cols() != 4)
    throw DimensionMismatch("verify_braid_relation: b must be 4x4");
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CMatrix b12 = kron(b, id2);
  const CMatrix b23 = kron(id2, b);
  YbeResidual out;
  out.lhs = b12 * b23 * b12;
  out.rhs = b23 * b12 * b23;
  out.frobenius_residual = frobenius_distance(out.lhs, out.rhs);
  out.passed = out.frobenius_residual <= tol.abs * 8;
  return out;
}

BaxterizedMatrix yang_baxterize(const CMatrix& b, cxd lambda1, cxd lambda2,
                                double x) {
  Eigen::FullPivLU<CMatrix> lu(b);
  if (!lu.isInvertible())
    throw SingularConstraint("yang_baxterize: braid matrix is singular");
  const CMatrix raw = b + x * lambda1 * lambda2 * lu.inverse();
  const double opnorm = raw.jacobiSvd().singularValues()(0);
  BaxterizedMatrix out;
  if (opnorm < 1e-14) {
    out.matrix = raw;
    return out;
  }
  out.matrix = raw / opnorm;
  out.unitary = is_unitary(out.matrix, Tolerance{1e-10, 1e-10});
  if (!out.unitary) out.matrix = raw;
  return out;
}

CMatrix r_matrix_4d(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cxd q = std::exp(kI * phi);
  CMatrix r(4, 4);
  r << c, 0, 0, s / q,
       0, c, -s, 0,
       0, s, c, 0,
       -s * q, 0, 0, c;
  return r;
}

Matrix2 a_2d(double theta) {
  Matrix2 a;
  a << std::exp(-kI * theta), 0, 0, std::exp(kI * theta);
  return a;
}

Matrix2 b_2d(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2 b;
  b << c, -kI * s, -kI * s, c;
  return b;
}

double spectral_to_angle(const SpectralPoint& p, int epsilon,
                         Convention convention) {
  const double s = p.s;
  const double re =
      convention == Convention::kPlus ? 1.0 + s * s : 1.0 - s * s;
  const cxd num(re, 2.0 * epsilon * s);
  const cxd den(re, -2.0 * epsilon * s);
  if (std::abs(den) < 1e-14)
    throw NonUnimodularRatio("spectral_to_angle: ratio denominator vanishes");
  const cxd ratio = num / den;
  if (std::abs(std::abs(ratio) - 1.0) > 1e-10)
    throw NonUnimodularRatio("spectral_to_angle: ratio not unimodular");
  // ratio = e^{-2 i theta}; principal branch.
  return -std::arg(ratio) / 2.0;
}

SpectralPoint middle_param(const SpectralPoint& u, const SpectralPoint& v) {
  const double den = 1.0 + u.s * v.s;
  if (std::abs(den) < 1e-14)
    throw PoleAtDenominatorZero("middle_param: 1 + s t = 0");
  return SpectralPoint{(u.s + v.s) / den};
}

double solve_theta2(double theta1, double theta3) {
  const double c = std::cos(theta1 - theta3);
  if (std::abs(c) < 1e-12)
    throw SingularConstraint("solve_theta2: cos(theta1 - theta3) = 0");
  const double sec_sin = std::sin(theta1 + theta3) / c;
  // (e^{-2i t2}+1)(i - S) = 2i  =>  e^{-2i t2} = (i + S)/(i - S).
  const cxd val = (kI + sec_sin) / (kI - sec_sin);
  if (std::abs(std::abs(val) - 1.0) > 1e-10)
    throw NoUnimodularSolution("solve_theta2: solution not unimodular");
  return -std::arg(val) / 2.0;
}

YbeResidual verify_ybe_2d(const AngleParameters& an, const Tolerance& tol) {
  YbeResidual out;
  out.lhs = a_2d(an.theta1) * b_2d(an.theta2) * a_2d(an.theta3);
  out.rhs = b_2d(an.theta3) * a_2d(an.theta2) * b_2d(an.theta1);
  out.frobenius_residual = frobenius_distance(out.lhs, out.rhs);
  out.passed = out.frobenius_residual <= tol.abs * 2;
  return out;
}

YbeResidual verify_ybe_4d(const AngleParameters& an, const Tolerance& tol) {
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const auto r12 = [&](double t) { return kron(r_matrix_4d(t, an.phi), id2); };
  const auto r23 = [&](double t) { return kron(id2, r_matrix_4d(t, an.phi)); };
  YbeResidual out;
  out.lhs = r12(an.theta1) * r23(an.theta2) * r12(an.theta3);
  out.rhs = r23(an.theta3) * r12(an.theta2) * r23(an.theta1);
  out.frobenius_residual = frobenius_distance(out.lhs, out.rhs);
  out.passed = out.frobenius_residual <= tol.abs * 8;
  return out;
}

double concurrence_after_r(double theta, double phi, const CVector& input) {
  if (input.size() != 4)
    throw DimensionMismatch("concurrence_after_r: input must be 4-dim");
  if (std::abs(input.norm() - 1.0) > 1e-8)
    throw DimensionMismatch("concurrence_after_r: input not normalized");
  const CVector psi = r_matrix_4d(theta, phi) * input;
  CMatrix syy(4, 4);
  syy << 0, 0, 0, -1,
         0, 0, 1, 0,
         0, 1, 0, 0,
         -1, 0, 0, 0;
  // C = |<psi^*| sy x sy |psi>| = |psi^T (sy x sy) psi|
  const cxd val = (psi.transpose() * syy * psi)(0, 0);
  return std::abs(val);
}

}  // namespace ybe
