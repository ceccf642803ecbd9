#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sml/chiral_potts.hpp"
#include "sml/errors.hpp"
#include "sml/simdiag.hpp"
#include "sml/weyl.hpp"

using namespace sml;
using namespace sml::weyl;

TEST_CASE("an already-diagonal operator keeps the standard basis") {
  DenseOperator d = DenseOperator::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  const auto res = simultaneous_eigenbasis({d});
  CHECK(res.unitary);
  CHECK(res.max_offdiag < 1e-12);
  // columns are the standard basis up to order and phase
  for (int c = 0; c < 3; ++c) {
    double biggest = 0.0;
    for (int r = 0; r < 3; ++r) biggest = std::max(biggest, std::abs(res.basis(r, c)));
    CHECK(biggest > 1.0 - 1e-12);
  }
}

TEST_CASE("diagonal pair (Z x I, I x Z) yields the product eigenvalue lists") {
  LatticeConfig cfg(2, 2);
  const std::vector<DenseOperator> fam{clock_at(1, cfg), clock_at(2, cfg)};
  const auto res = simultaneous_eigenbasis(fam);
  REQUIRE(res.eigenvalues.size() == 2);

  // as multisets over the joint spectrum: (1,1), (1,-1), (-1,1), (-1,-1)
  std::vector<std::pair<int, int>> joint;
  for (int i = 0; i < 4; ++i)
    joint.push_back({res.eigenvalues[0](i).real() > 0 ? 1 : -1,
                     res.eigenvalues[1](i).real() > 0 ? 1 : -1});
  std::sort(joint.begin(), joint.end());
  const std::vector<std::pair<int, int>> expected{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  CHECK(joint == expected);
  const double unit =
      (res.basis.adjoint() * res.basis - DenseOperator::Identity(4, 4)).norm();
  CHECK(unit < 1e-9);
}

TEST_CASE("non-commuting inputs are rejected with the offending pair") {
  const auto x = shift(2);
  const auto z = clock(2);
  CHECK_THROWS_AS(simultaneous_eigenbasis({x, z}), CommutationError);
  try {
    simultaneous_eigenbasis({x, z});
  } catch (const CommutationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("0") != std::string::npos);
    CHECK(msg.find("1") != std::string::npos);
  }
}

TEST_CASE("commuting chiral Potts transfer pair is jointly diagonalized") {
  namespace cp = chiralpotts;
  const auto cpl = cp::Coupling::from_kprime(0.8);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  auto pt = [&] {
    return cp::sample_rapidity(3, cpl, std::polar(1.0, angle(rng)),
                               std::polar(1.0, angle(rng)));
  };
  const auto p = pt();
  const std::vector<DenseOperator> fam{cp::transfer_matrix(p, pt(), 2),
                                       cp::transfer_matrix(p, pt(), 2)};
  const auto res = simultaneous_eigenbasis(fam, 1e-9, 5);
  CHECK(res.max_offdiag < 1e-8);
}

TEST_CASE("random commuting Hermitian family gets a unitary joint basis") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // build commuting Hermitians from a shared unitary eigenbasis
  DenseOperator g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cdouble(u(rng), u(rng));
  Eigen::HouseholderQR<DenseOperator> qr(g);
  DenseOperator q = qr.householderQ();
  auto herm = [&](std::initializer_list<double> eigs) {
    DenseOperator d = DenseOperator::Zero(4, 4);
    int i = 0;
    for (double e : eigs) d(i, i) = e, ++i;
    return DenseOperator(q * d * q.adjoint());
  };
  const std::vector<DenseOperator> fam{herm({1, 1, 2, 3}), herm({5, -1, -1, 2})};
  const auto res = simultaneous_eigenbasis(fam);
  CHECK(res.unitary);
  CHECK(res.max_offdiag < 1e-9);
  CHECK((res.basis.adjoint() * res.basis - DenseOperator::Identity(4, 4)).norm() < 1e-9);
}

TEST_CASE("commuting unitary family goes through the Schur path with unitary basis") {
  LatticeConfig cfg(3, 2);
  const DenseOperator u = kron(clock(3), shift(3));  // unitary, not Hermitian
  const DenseOperator u2 = u * u;
  const auto res = simultaneous_eigenbasis({u, u2});
  CHECK(res.unitary);
  CHECK(res.max_offdiag < 1e-9);
  CHECK((res.basis.adjoint() * res.basis - DenseOperator::Identity(9, 9)).norm() < 1e-9);
  // eigenvalue consistency: the second list is the square of the first
  for (int i = 0; i < 9; ++i)
    CHECK(std::abs(res.eigenvalues[1](i) - res.eigenvalues[0](i) * res.eigenvalues[0](i)) <
          1e-9);
}

TEST_CASE("empty and mismatched families are configuration errors") {
  CHECK_THROWS_AS(simultaneous_eigenbasis({}), ConfigError);
  CHECK_THROWS_AS(
      simultaneous_eigenbasis({DenseOperator::Identity(2, 2), DenseOperator::Identity(3, 3)}),
      ConfigError);
}
