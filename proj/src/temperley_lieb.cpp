#include "ybe/temperley_lieb.hpp"

#include <cmath>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

const cxd kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

CVector kron_vec(const Vector4& a, const Vector4& b) {
  CVector out(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(4 * i + j) = a(i) * b(j);
  return out;
}

}  // namespace

TLGenerator tl_generator(double phi, int epsilon) {
  const cxd q = std::exp(kI * phi);
  CMatrix u(4, 4);
  u << 1, 0, 0, kI / q,
       0, 1, kI * static_cast<double>(epsilon), 0,
       0, -kI * static_cast<double>(epsilon), 1, 0,
       -kI * q, 0, 0, 1;
  return TLGenerator{phi, epsilon, u / kSqrt2, kSqrt2};
}

TlaRelationsReport verify_tla(const CMatrix& u, double d,
                              const Tolerance& tol) {
  if (u.rows() != 4 || u.cols() != 4)
    throw DimensionMismatch("verify_tla: U must be 4x4");
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CMatrix u12 = kron(u, id2);
  const CMatrix u23 = kron(id2, u);
  TlaRelationsReport out;
  out.square_residual = frobenius_distance(u * u, d * u);
  out.braid12_residual = frobenius_distance(u12 * u23 * u12, u12);
  out.braid23_residual = frobenius_distance(u23 * u12 * u23, u23);
  const double bound = tol.abs * 8;
  out.passed = out.square_residual <= bound &&
               out.braid12_residual <= bound &&
               out.braid23_residual <= bound;
  return out;
}

cxd tla_g(const SpectralPoint& u, int epsilon) {
  const double s = u.s;
  const cxd den = kSqrt2 * cxd(1.0 + s * s, -2.0 * epsilon * s);
  if (std::abs(den) < 1e-14)
    throw PoleAtDenominatorZero("tla_g: pole in G(u)");
  return 4.0 * kI * static_cast<double>(epsilon) * s / den;
}

cxd tla_rho(const SpectralPoint& u, int epsilon) {
  return std::exp(kI * spectral_to_angle(u, epsilon, Convention::kPlus));
}

FunctionalEquationReport tla_solution_check(const SpectralPoint& u,
                                            const SpectralPoint& v,
                                            int epsilon,
                                            const Tolerance& tol) {
  const auto a = [&](const SpectralPoint& p) { return tla_rho(p, epsilon); };
  const auto b = [&](const SpectralPoint& p) {
    return tla_rho(p, epsilon) * tla_g(p, epsilon);
  };
  const SpectralPoint m = middle_param(u, v);
  const double d = kSqrt2;
  FunctionalEquationReport out;
  out.lhs = (a(u) * b(v) + b(u) * a(v) + d * b(u) * b(v)) * a(m);
  out.rhs = (a(v) * a(u) - b(v) * b(u)) * b(m);
  out.residual = std::abs(out.lhs - out.rhs);
  out.passed = out.residual <= tol.abs;
  return out;
}

CMatrix r_from_tla(double theta, double phi, int epsilon) {
  const CMatrix u = tl_generator(phi, epsilon).matrix;
  const CMatrix m = -kI * (kSqrt2 * u - CMatrix::Identity(4, 4));
  return std::cos(theta) * CMatrix::Identity(4, 4) + std::sin(theta) * m;
}

BellQuartet bell_states(double phi_prime) {
  const cxd ph = std::exp(-kI * phi_prime);
  BellQuartet q;
  q.psi_plus << 1, 0, 0, ph;
  q.psi_minus << 1, 0, 0, -ph;
  q.phi_plus << 0, 1, -kI, 0;
  q.phi_minus << 0, 1, kI, 0;
  q.psi_plus /= kSqrt2;
  q.psi_minus /= kSqrt2;
  q.phi_plus /= kSqrt2;
  q.phi_minus /= kSqrt2;
  return q;
}

BasisPair basis_e(cxd nu, double phi_prime) {
  const BellQuartet q = bell_states(phi_prime);
  const double norm = std::sqrt(1.0 + std::norm(nu));
  BasisPair out;
  out.nu = nu;
  out.phi_prime = phi_prime;
  out.e1 = (kron_vec(q.psi_plus, q.psi_plus) +
            nu * kron_vec(q.phi_plus, q.phi_plus)) /
           norm;
  out.e2 = -kI *
           (nu * std::exp(kI * phi_prime) * kron_vec(q.psi_minus, q.psi_minus) +
            std::exp(-kI * phi_prime) * kron_vec(q.phi_minus, q.phi_minus)) /
           norm;
  return out;
}

ReducedPair reduce_r(double theta, double phi, cxd nu, const Tolerance& tol) {
  const BasisPair basis = basis_e(nu, phi_prime_from_phi(phi));
  // The projector-form basis corresponds to epsilon = +1.
  const CMatrix r = r_from_tla(theta, phi, +1);
  const CMatrix r12 = embed_pair(r, 1, 2, 4);
  const CMatrix r23 = embed_pair(r, 2, 3, 4);

  Eigen::MatrixXcd e(16, 2);
  e.col(0) = basis.e1;
  e.col(1) = basis.e2;

  ReducedPair out;
  out.a2 = (e.adjoint() * r12 * e);
  out.b2 = (e.adjoint() * r23 * e);
  for (const CMatrix& op : {r12, r23}) {
    for (int j = 0; j < 2; ++j) {
      const CVector image = op * e.col(j);
      const double leak = (image - e * (e.adjoint() * image)).norm();
      if (leak > out.leakage) out.leakage = leak;
    }
  }
  if (out.leakage > tol.abs * 16)
    throw LeakageExceedsTolerance("reduce_r: invariant subspace broken");
  return out;
}

long fusion_dim(int n_half_anyons, FusionLabel total) {
  if (n_half_anyons < 0)
    throw DimensionMismatch("fusion_dim: n must be non-negative");
  // Path counting over 1/2 x {0, 1/2, 1} from the fusion table.
  long count[3] = {1, 0, 0};  // start in total charge 0
  for (int step = 0; step < n_half_anyons; ++step) {
    const long next_zero = count[1];
    const long next_half = count[0] + count[2];
    const long next_one = count[1];
    count[0] = next_zero;
    count[1] = next_half;
    count[2] = next_one;
  }
  switch (total) {
    case FusionLabel::kZero: return count[0];
    case FusionLabel::kHalf: return count[1];
    case FusionLabel::kOne: return count[2];
  }
  throw DimensionMismatch("fusion_dim: invalid label");
}

}  // namespace ybe
