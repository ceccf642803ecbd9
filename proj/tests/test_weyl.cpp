#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sml/errors.hpp"
#include "sml/weyl.hpp"

using namespace sml;
using namespace sml::weyl;

TEST_CASE("shift matrix is the cyclic permutation") {
  const auto x2 = shift(2);
  CHECK(std::abs(x2(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(x2(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x2(0, 0)) < 1e-15);
  CHECK(std::abs(x2(1, 1)) < 1e-15);

  const auto x3 = shift(3);
  for (int m = 0; m < 3; ++m) {
    CVector e = CVector::Zero(3);
    e(m) = 1.0;
    const CVector mapped = x3 * e;
    CHECK(std::abs(mapped((m + 1) % 3) - 1.0) < 1e-15);
  }

  DenseOperator p = DenseOperator::Identity(5, 5);
  const auto x5 = shift(5);
  for (int i = 0; i < 5; ++i) p = p * x5;
  CHECK((p - DenseOperator::Identity(5, 5)).norm() == 0.0);
}

TEST_CASE("clock matrix carries the root-of-unity diagonal") {
  const auto z2 = clock(2);
  CHECK(z2(0, 0) == cdouble(1.0, 0.0));
  CHECK(z2(1, 1) == cdouble(-1.0, 0.0));  // exact at the cardinal point

  const auto z3 = clock(3);
  const cdouble w = primitive_root(3);
  CHECK(std::abs(z3(1, 1) - w) < 1e-15);
  CHECK(std::abs(z3(2, 2) - w * w) < 1e-15);
}

TEST_CASE("clock shift = omega shift clock, exact to rounding, N <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const auto x = shift(n);
    const auto z = clock(n);
    const cdouble w = primitive_root(n);
    CHECK((z * x - w * x * z).norm() < 1e-14 * n);

    DenseOperator xn = DenseOperator::Identity(n, n), zn = xn;
    for (int i = 0; i < n; ++i) {
      xn *= x;
      zn *= z;
    }
    CHECK((xn - DenseOperator::Identity(n, n)).norm() < 1e-12);
    CHECK((zn - DenseOperator::Identity(n, n)).norm() < 1e-12);
  }
}

TEST_CASE("invalid N rejected") {
  CHECK_THROWS_AS(shift(1), ConfigError);
  CHECK_THROWS_AS(clock(0), ConfigError);
  CHECK_THROWS_AS(LatticeConfig(1, 2), ConfigError);
  CHECK_THROWS_AS(LatticeConfig(2, 0), ConfigError);
  CHECK_THROWS_AS(LatticeConfig(2, 40), ConfigError);  // blows the size budget
}

TEST_CASE("site embedding follows the site-1-leftmost convention") {
  LatticeConfig cfg(2, 2);
  const auto z1 = site_embed(clock(2), 1, cfg);
  // Z x I = diag(1, 1, -1, -1)
  CHECK(z1(0, 0) == cdouble(1.0, 0.0));
  CHECK(z1(1, 1) == cdouble(1.0, 0.0));
  CHECK(z1(2, 2) == cdouble(-1.0, 0.0));
  CHECK(z1(3, 3) == cdouble(-1.0, 0.0));

  // I x X in block form: swaps within each block
  const auto x2 = site_embed(shift(2), 2, cfg);
  CHECK(std::abs(x2(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x2(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(x2(3, 2) - 1.0) < 1e-15);
  CHECK(std::abs(x2(2, 0)) < 1e-15);
}

TEST_CASE("operators at disjoint sites commute") {
  LatticeConfig cfg(3, 2);
  DenseOperator a(3, 3), b(3, 3);
  a.setRandom();
  b.setRandom();
  const auto ea = site_embed(a, 1, cfg);
  const auto eb = site_embed(b, 2, cfg);
  CHECK(commutator(ea, eb).norm() < 1e-13 * ea.norm() * eb.norm());
}

TEST_CASE("site embedding scales the Frobenius norm by N^{(L-1)/2}") {
  LatticeConfig cfg(3, 3);
  DenseOperator a(3, 3);
  a.setRandom();
  const double expected = std::pow(3.0, 1.0) * a.norm();
  CHECK(std::abs(site_embed(a, 2, cfg).norm() - expected) < 1e-12 * expected);
}

TEST_CASE("embedding rejects out-of-range sites and wrong shapes") {
  LatticeConfig cfg(2, 3);
  CHECK_THROWS_AS(site_embed(clock(2), 0, cfg), IndexError);
  CHECK_THROWS_AS(site_embed(clock(2), 4, cfg), IndexError);
  CHECK_THROWS_AS(site_embed(clock(3), 1, cfg), ConfigError);
}

TEST_CASE("spin shift is the product of all site shifts") {
  LatticeConfig cfg(2, 2);
  const auto u = spin_shift(cfg);
  const DenseOperator expected = site_embed(shift(2), 1, cfg) * site_embed(shift(2), 2, cfg);
  CHECK((u - expected).norm() == 0.0);
}
