#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ybe/errors.hpp"
#include "ybe/matrix.hpp"

using namespace ybe;

namespace {

Matrix2 random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  const double a = dist(rng), b = dist(rng), c = dist(rng);
  const cxd i(0, 1);
  Matrix2 u;
  u << std::exp(i * a) * std::cos(c), std::exp(i * b) * std::sin(c),
       -std::exp(-i * b) * std::sin(c), std::exp(-i * a) * std::cos(c);
  return u;
}

/// Durand-Kerner root finder for a monic quartic, used as an independent
/// oracle for char_poly_4 properties.
std::array<cxd, 4> quartic_roots(const std::array<cxd, 5>& c) {
  std::array<cxd, 4> z{cxd(0.4, 0.9), cxd(-0.9, 0.4), cxd(-0.4, -0.9),
                       cxd(0.9, -0.4)};
  auto eval = [&](cxd x) {
    cxd p = c[4];
    for (int k = 3; k >= 0; --k) p = p * x + c[k];
    return p;
  };
  for (int it = 0; it < 200; ++it) {
    for (int k = 0; k < 4; ++k) {
      cxd denom = 1.0;
      for (int m = 0; m < 4; ++m)
        if (m != k) denom *= z[k] - z[m];
      z[k] -= eval(z[k]) / denom;
    }
  }
  return z;
}

}  // namespace

TEST_CASE("kron basic pattern and dimensions") {
  CMatrix a(2, 2), b(2, 2);
  a << 1, 0, 0, -1;  // sigma_z
  b << 0, 1, 1, 0;   // sigma_x
  const CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == cxd(1, 0));
  CHECK(k(1, 0) == cxd(1, 0));
  CHECK(k(2, 3) == cxd(-1, 0));
  CHECK(k(3, 2) == cxd(-1, 0));
  CHECK(k(0, 0) == cxd(0, 0));
}

TEST_CASE("embed_pair adjacent pair equals identity-padded kron") {
  std::mt19937_64 rng(7);
  Matrix2 a = random_su2(rng), b = random_su2(rng);
  const CMatrix op = kron(a, b);
  const CMatrix direct = kron(kron(CMatrix::Identity(2, 2), op),
                              CMatrix::Identity(2, 2));
  CHECK(frobenius_distance(embed_pair(op, 2, 3, 4), direct) < 1e-14);
}

TEST_CASE("embed_pair factorizes over arbitrary ordered site pairs") {
  std::mt19937_64 rng(11);
  const CMatrix id = CMatrix::Identity(2, 2);
  for (auto [i, j] : {std::pair{1, 3}, {3, 1}, {2, 3}, {3, 2}}) {
    Matrix2 a = random_su2(rng), b = random_su2(rng);
    // a acts on site i, b on site j, independently embedded
    CMatrix want = CMatrix::Identity(8, 8);
    CMatrix fa[3] = {id, id, id};
    fa[i - 1] = a;
    fa[j - 1] = b;
    want = kron(kron(fa[0], fa[1]), fa[2]);
    CHECK(frobenius_distance(embed_pair(kron(a, b), i, j, 3), want) < 1e-13);
  }
}

TEST_CASE("embed_pair rejects invalid site pairs") {
  const CMatrix op = CMatrix::Identity(4, 4);
  CHECK_THROWS_AS(embed_pair(op, 1, 1, 3), DimensionMismatch);
  CHECK_THROWS_AS(embed_pair(op, 0, 2, 3), DimensionMismatch);
  CHECK_THROWS_AS(embed_pair(op, 1, 4, 3), DimensionMismatch);
}

TEST_CASE("equal_up_to_global_phase orientation and residual") {
  const CMatrix id = CMatrix::Identity(4, 4);
  const cxd factor = std::exp(cxd(0, kPi / 3));
  const PhaseComparison cmp = equal_up_to_global_phase(id, factor * id);
  CHECK(cmp.equal);
  CHECK(cmp.phase == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(cmp.residual < 1e-14);

  CMatrix other = id;
  other(0, 0) = -1;
  CHECK_FALSE(equal_up_to_global_phase(id, other).equal);
}

TEST_CASE("char_poly_4 frozen examples") {
  const auto c_id = char_poly_4(CMatrix::Identity(4, 4));
  const double want_id[5] = {1, -4, 6, -4, 1};
  for (int k = 0; k < 5; ++k)
    CHECK(std::abs(c_id[k] - want_id[k]) < 1e-12);

  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = 1;
  d(1, 1) = cxd(0, 1);
  d(2, 2) = -1;
  d(3, 3) = cxd(0, -1);
  const auto c_d = char_poly_4(d);  // (x^4 - 1)
  CHECK(std::abs(c_d[0] + 1.0) < 1e-12);
  CHECK(std::abs(c_d[1]) < 1e-12);
  CHECK(std::abs(c_d[2]) < 1e-12);
  CHECK(std::abs(c_d[3]) < 1e-12);
  CHECK(std::abs(c_d[4] - 1.0) < 1e-12);
}

TEST_CASE("char_poly_4 of a unitary has unimodular roots") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = kron(random_su2(rng), random_su2(rng));
    const auto roots = quartic_roots(char_poly_4(u));
    for (const cxd& z : roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
  }
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(CMatrix::Identity(4, 4)));
  CMatrix m = CMatrix::Identity(4, 4);
  m(0, 0) = 2;
  CHECK_FALSE(is_unitary(m));
}

TEST_CASE("phase_distance sentinel on vanishing overlap") {
  CMatrix x(2, 2), y(2, 2);
  x << 1, 0, 0, -1;
  y << 1, 0, 0, 1;
  CHECK(phase_distance(x, y) > 1e8);  // tr(x^dag y) = 0
  CHECK(phase_distance(y, y) < 1e-14);
}
