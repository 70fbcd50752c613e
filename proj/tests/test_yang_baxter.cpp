#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ybe/decomposition.hpp"
#include "ybe/errors.hpp"
#include "ybe/yang_baxter.hpp"

using namespace ybe;

namespace {
const cxd kI(0, 1);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("braid_b at q=1 is the Bell transform, exactly") {
  CMatrix w(4, 4);
  w << 1, 0, 0, 1,
       0, 1, -1, 0,
       0, 1, 1, 0,
       -1, 0, 0, 1;
  w /= kSqrt2;
  CHECK(frobenius_distance(braid_b(0.0), w) == 0.0);
}

TEST_CASE("braid_b corner entries at phi = pi/2") {
  const CMatrix b = braid_b(kPi / 2);
  CHECK(std::abs(b(0, 3) - kI / kSqrt2) < 1e-15);
  CHECK(std::abs(b(3, 0) - kI / kSqrt2) < 1e-15);
}

TEST_CASE("braid_b is unitary with M^2 = -1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (int k = 0; k < 50; ++k) {
    const double phi = dist(rng);
    const CMatrix b = braid_b(phi);
    CHECK(is_unitary(b));
    const CMatrix m = kSqrt2 * b - CMatrix::Identity(4, 4);
    CHECK(frobenius_distance(m * m, -CMatrix::Identity(4, 4)) < 1e-13);
  }
}

TEST_CASE("braid relation residuals") {
  CHECK(verify_braid_relation(braid_b(0.7)).frobenius_residual < 1e-12);
  CHECK(verify_braid_relation(CMatrix::Identity(4, 4)).frobenius_residual ==
        0.0);
  // CNOT2 is not a braid solution; frozen independent value 2*sqrt(3)
  const double res = verify_braid_relation(cnot2()).frobenius_residual;
  CHECK(res == doctest::Approx(3.4641016151377544).epsilon(1e-12));
}

TEST_CASE("yang_baxterize limits and unitarization") {
  const CMatrix b = braid_b(0.9);
  SUBCASE("x = 0 recovers the braid matrix") {
    const BaxterizedMatrix r =
        yang_baxterize(b, std::exp(kI * kPi / 4.0), std::exp(-kI * kPi / 4.0),
                       0.0);
    CHECK(r.unitary);
    CHECK(frobenius_distance(r.matrix, b) < 1e-13);
  }
  SUBCASE("generic x matches (b + x b^-1)/sqrt(1+x^2) up to phase") {
    for (double x : {0.3, 1.0, 2.5}) {
      const BaxterizedMatrix r = yang_baxterize(
          b, std::exp(kI * kPi / 4.0), std::exp(-kI * kPi / 4.0), x);
      CHECK(r.unitary);
      const CMatrix want =
          (b + x * b.inverse()) / std::sqrt(1.0 + x * x);
      CHECK(phase_distance(r.matrix, want) < 1e-12);
    }
  }
  SUBCASE("identity input stays identity after normalization") {
    const BaxterizedMatrix r = yang_baxterize(CMatrix::Identity(4, 4), 1.0,
                                              1.0, 0.7);
    CHECK(r.unitary);
    CHECK(frobenius_distance(r.matrix, CMatrix::Identity(4, 4)) < 1e-13);
  }
}

TEST_CASE("r_matrix_4d structure") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  CHECK(frobenius_distance(r_matrix_4d(0.0, 0.3), CMatrix::Identity(4, 4)) ==
        0.0);
  for (int k = 0; k < 50; ++k) {
    const double theta = dist(rng), phi = dist(rng);
    const CMatrix r = r_matrix_4d(theta, phi);
    CHECK(is_unitary(r));
    CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
    // Euler form: cos(theta) I + sin(theta) M with theta-independent M
    const CMatrix m =
        (r_matrix_4d(kPi / 2, phi) - CMatrix::Zero(4, 4));
    CHECK(frobenius_distance(
              r, std::cos(theta) * CMatrix::Identity(4, 4) +
                     std::sin(theta) * m) < 1e-13);
  }
  // braid point: the (R)-matrix q convention is inverse to the (bri) one
  const double phi = 1.234;
  CHECK(frobenius_distance(r_matrix_4d(kPi / 4, phi), braid_b(-phi)) < 1e-15);
}

TEST_CASE("a_2d and b_2d closed forms") {
  CHECK(frobenius_distance(a_2d(0.0), CMatrix::Identity(2, 2)) == 0.0);
  CHECK(frobenius_distance(b_2d(0.0), CMatrix::Identity(2, 2)) == 0.0);
  Matrix2 want;
  want << 0, -kI, -kI, 0;  // -i sigma_x
  CHECK(frobenius_distance(b_2d(kPi / 2), want) < 1e-15);
  CHECK(is_unitary(a_2d(0.8)));
  CHECK(is_unitary(b_2d(0.8)));
  CHECK(std::abs(a_2d(0.8).determinant() - 1.0) < 1e-14);
  CHECK(std::abs(b_2d(0.8).determinant() - 1.0) < 1e-14);
}

TEST_CASE("spectral_to_angle values and unimodularity of the ratio") {
  CHECK(spectral_to_angle(SpectralPoint{0.0}, +1, Convention::kPlus) == 0.0);
  // light-cone point s = 1
  CHECK(spectral_to_angle(SpectralPoint{1.0}, +1, Convention::kPlus) ==
        doctest::Approx(-kPi / 4).epsilon(1e-12));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> dist(-0.99, 0.99);
  for (int k = 0; k < 200; ++k) {
    const double s = dist(rng);
    for (int eps : {+1, -1}) {
      const double theta =
          spectral_to_angle(SpectralPoint{s}, eps, Convention::kPlus);
      // definition check: e^{-2 i theta} equals the convention ratio
      const cxd ratio = (cxd(1 + s * s, 2.0 * eps * s)) /
                        (cxd(1 + s * s, -2.0 * eps * s));
      CHECK(std::abs(std::exp(-2.0 * kI * theta) - ratio) < 1e-12);
    }
  }
}

TEST_CASE("middle_param addition and pole") {
  CHECK(middle_param(SpectralPoint{0.0}, SpectralPoint{0.4}).s ==
        doctest::Approx(0.4));
  CHECK(middle_param(SpectralPoint{0.3}, SpectralPoint{0.3}).s ==
        doctest::Approx(0.6 / 1.09).epsilon(1e-12));
  CHECK_THROWS_AS(middle_param(SpectralPoint{1.0}, SpectralPoint{-1.0}),
                  PoleAtDenominatorZero);
}

TEST_CASE("spectral middle parameter is consistent with solve_theta2") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int k = 0; k < 100; ++k) {
    const double su = dist(rng), sv = dist(rng);
    const double t1 = spectral_to_angle(SpectralPoint{su}, +1,
                                        Convention::kPlus);
    const double t3 = spectral_to_angle(SpectralPoint{sv}, +1,
                                        Convention::kPlus);
    if (std::abs(std::cos(t1 - t3)) < 0.05) continue;
    const double tm = spectral_to_angle(middle_param(SpectralPoint{su},
                                                     SpectralPoint{sv}),
                                        +1, Convention::kPlus);
    const double ts = solve_theta2(t1, t3);
    const double diff = std::abs(std::remainder(tm - ts, kPi));
    CHECK(diff < 1e-8);
  }
}

TEST_CASE("solve_theta2 closed form") {
  CHECK(std::abs(solve_theta2(0.0, 0.0)) < 1e-14);
  CHECK(solve_theta2(kPi / 4, kPi / 4) ==
        doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK_THROWS_AS(solve_theta2(kPi / 4, -kPi / 4), SingularConstraint);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> dist(-1.2, 1.2);
  for (int k = 0; k < 200; ++k) {
    const double t1 = dist(rng), t3 = dist(rng);
    if (std::abs(std::cos(t1 - t3)) < 0.05) continue;
    const double t2 = solve_theta2(t1, t3);
    // direct residual of the angle constraint
    const cxd lhs = (std::exp(-2.0 * kI * t2) + 1.0) *
                    (kI - std::sin(t1 + t3) / std::cos(t1 - t3));
    CHECK(std::abs(lhs - 2.0 * kI) < 1e-12);
    // symmetry in the outer angles
    CHECK(std::abs(t2 - solve_theta2(t3, t1)) < 1e-12);
  }
}

TEST_CASE("2D and 4D YBE residuals with and without the constraint") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> dist(-1.2, 1.2);
  std::uniform_real_distribution<double> phis(-kPi, kPi);
  AngleParameters braid;
  braid.theta1 = braid.theta2 = braid.theta3 = kPi / 4;
  braid.phi = 0.7;
  CHECK(verify_ybe_2d(braid).frobenius_residual < 1e-12);
  CHECK(verify_ybe_4d(braid).frobenius_residual < 1e-12);

  for (int k = 0; k < 100; ++k) {
    AngleParameters an;
    an.theta1 = dist(rng);
    an.theta3 = dist(rng);
    if (std::abs(std::cos(an.theta1 - an.theta3)) < 0.05) continue;
    an.theta2 = solve_theta2(an.theta1, an.theta3);
    an.phi = phis(rng);
    CHECK(verify_ybe_2d(an).frobenius_residual < 1e-10);
    CHECK(verify_ybe_4d(an).frobenius_residual < 1e-10);
    CHECK(verify_ybe_2d(an).passed);
    CHECK(verify_ybe_4d(an).passed);
  }

  AngleParameters bad;
  bad.theta1 = bad.theta2 = bad.theta3 = 0.3;
  CHECK(verify_ybe_2d(bad).frobenius_residual > 1e-3);
  bad.theta2 = solve_theta2(0.3, 0.3) + 0.1;
  CHECK(verify_ybe_4d(bad).frobenius_residual > 1e-3);
}

TEST_CASE("concurrence of the evolved product state") {
  CVector up_up = CVector::Zero(4);
  up_up(0) = 1.0;
  CHECK(concurrence_after_r(kPi / 4, 0.3, up_up) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_after_r(0.0, 0.3, up_up) ==
        doctest::Approx(0.0).epsilon(1e-12));
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const double theta = dist(rng), phi = dist(rng);
    CHECK(std::abs(concurrence_after_r(theta, phi, up_up) -
                   std::abs(std::sin(2 * theta))) < 1e-12);
  }
}
