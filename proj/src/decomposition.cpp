#include "ybe/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "ybe/errors.hpp"
#include "ybe/yang_baxter.hpp"

namespace ybe {

namespace {

const cxd kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

Matrix4 sigma_yy() {
  Matrix4 s = Matrix4::Zero();
  s(0, 3) = -1;
  s(1, 2) = 1;
  s(2, 1) = 1;
  s(3, 0) = -1;
  return s;
}

bool poly_matches(const std::array<cxd, 5>& p, const std::array<double, 5>& q,
                  double tol) {
  for (int k = 0; k < 5; ++k)
    if (std::abs(p[k] - q[k]) > tol) return false;
  return true;
}

}  // namespace

Matrix4 cnot2() {
  Matrix4 c = Matrix4::Zero();
  c(0, 0) = 1;
  c(1, 3) = 1;
  c(2, 2) = 1;
  c(3, 1) = 1;
  return c;
}

TwoQubitDecomposition decompose_r(double theta, double phi,
                                  const Tolerance& tol) {
  TwoQubitDecomposition d;
  const cxd ep = std::exp(kI * phi / 4.0);
  const cxd epp = std::exp(kI * (kPi + phi) / 4.0);
  d.v1 << 1.0 / epp, 1.0 / epp,
          -epp, epp;
  d.v1 /= kSqrt2;
  d.v2 << 1.0 / ep, -1.0 / ep,
          ep, ep;
  d.v2 /= kSqrt2;
  d.v3 = Matrix2::Zero();
  d.v3(0, 0) = std::exp(-kI * theta);
  d.v3(1, 1) = std::exp(kI * theta);
  d.v4 = Matrix2::Identity();
  d.v5 = d.v1.adjoint();
  d.v6 = d.v2.adjoint();
  d.global_phase = 0.0;

  const Matrix4 target = r_matrix_4d(theta, phi);
  const PhaseComparison cmp =
      equal_up_to_global_phase(reconstruct(d), target, tol);
  if (!cmp.equal)
    throw ReconstructionMismatch(
        "two-CNOT reconstruction residual " + std::to_string(cmp.residual));
  d.global_phase = cmp.phase;
  return d;
}

Matrix4 reconstruct(const TwoQubitDecomposition& dec) {
  const Matrix4 c = cnot2();
  return kron(dec.v2, dec.v1) * c * kron(dec.v3, dec.v4) * c *
         kron(dec.v6, dec.v5);
}

GammaInvariant gamma_invariant(const Matrix4& u4, const Tolerance& tol) {
  if (!is_unitary(u4, tol))
    throw DimensionMismatch("gamma_invariant: input is not unitary");
  const cxd det = u4.determinant();
  const cxd root = std::pow(det, 0.25);  // principal fourth root
  const Matrix4 su = u4 / root;
  const Matrix4 syy = sigma_yy();
  const Matrix4 g = su * syy * su.transpose() * syy;
  GammaInvariant inv;
  inv.char_poly = char_poly_4(g);
  inv.trace = g.trace();
  return inv;
}

CnotCostClass classify_cnot_cost(const Matrix4& u4, const Tolerance& tol) {
  const GammaInvariant inv = gamma_invariant(u4, tol);
  // The principal fourth root leaves a sign ambiguity in gamma; chi(x) and
  // chi(-x) label the same class, so both signed variants are accepted.
  const double ptol = 1e-8 * 16;
  if (poly_matches(inv.char_poly, {1, -4, 6, -4, 1}, ptol) ||
      poly_matches(inv.char_poly, {1, 4, 6, 4, 1}, ptol))
    return CnotCostClass{0};
  if (poly_matches(inv.char_poly, {1, 0, 2, 0, 1}, ptol))
    return CnotCostClass{1};
  if (std::abs(inv.trace.imag()) <= 1e-8 * (1.0 + std::abs(inv.trace)))
    return CnotCostClass{2};
  return CnotCostClass{3};
}

double success_probability(int n_cnots) {
  if (n_cnots < 0)
    throw std::invalid_argument("success_probability: n_cnots must be >= 0");
  return std::pow(1.0 / 3.0, n_cnots + 1);
}

}  // namespace ybe
