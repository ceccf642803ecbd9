#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <map>

#include "doctest.h"
#include "sml/errors.hpp"
#include "sml/orbifold.hpp"

using namespace sml;
using namespace sml::orbifold;

TEST_CASE("A_1(2) is {I, -I}") {
  const auto g = build_Ar(2, 1);
  CHECK(g.order() == 2);
  std::vector<std::vector<int>> expect{{0, 0}, {1, 1}};
  auto elems = g.elements;
  std::sort(elems.begin(), elems.end());
  CHECK(elems == expect);
  CHECK((g.realize({1, 1}) + DenseOperator::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("|A_r(n)| = (r+1)^{n-1}") {
  for (int r = 1; r <= 4; ++r) {
    long expect = 1;
    for (int n = 2; n <= 5; ++n) {
      expect = 1;
      for (int i = 0; i < n - 1; ++i) expect *= (r + 1);
      CHECK(build_Ar(n, r).order() == expect);
    }
  }
  CHECK(build_Ar(3, 2).order() == 9);
}

TEST_CASE("realized A_r matrices are special and closed") {
  const auto g = build_Ar(3, 2);
  FiniteMatrixGroup mg{3, {}};
  for (const auto& e : g.elements) {
    const auto m = g.realize(e);
    CHECK(std::abs(m.determinant() - cdouble(1.0, 0.0)) < 1e-10);
    mg.elements.push_back(m);
  }
  CHECK(is_closed(mg));
}

TEST_CASE("abelian orbifold Euler characteristic equals the order") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 2}, {5, 1}}) {
    const auto g = build_Ar(n, r);
    const auto euler = orbifold_euler_linear(g);
    CHECK(euler.is_integer());
    CHECK(euler.num() == g.order());
    const auto counts = class_and_rep_counts(g);
    CHECK(counts.conjugacy_classes == g.order());
    CHECK(counts.irreducible_representations == g.order());
  }
}

TEST_CASE("quaternion group: order 8, five classes, chi = 5") {
  const auto q8 = quaternion_group();
  CHECK(q8.degree == 2);
  CHECK(q8.order() == 8);
  CHECK(is_closed(q8));

  // independent oracle: the centralizer of +-1 is everything (8 each), the
  // centralizer of the six unit quaternions is {+-1, +-g} (4 each); the pair
  // count is 2*8 + 6*4 = 40
  long commuting = 0;
  for (const auto& a : q8.elements)
    for (const auto& b : q8.elements)
      if ((a * b - b * a).norm() < 1e-9) ++commuting;
  CHECK(commuting == 40);

  const auto euler = orbifold_euler_linear(q8);
  CHECK(euler == Rational(5));
  const auto counts = class_and_rep_counts(q8);
  CHECK(counts.conjugacy_classes == 5);
  CHECK(counts.irreducible_representations == 5);
}

TEST_CASE("quaternion classes match the abstract group table") {
  // conjugacy classes of Q8 as quaternion units: {1}, {-1}, {+-i}, {+-j}, {+-k};
  // multiplication table built from the symbolic units, no matrices involved
  struct Unit {
    int sign;  // +1 or -1
    int axis;  // 0 = 1, 1 = i, 2 = j, 3 = k
    bool operator<(const Unit& o) const {
      return axis != o.axis ? axis < o.axis : sign < o.sign;
    }
    bool operator==(const Unit& o) const { return sign == o.sign && axis == o.axis; }
  };
  auto mul = [](Unit a, Unit b) -> Unit {
    static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {a.sign * b.sign * sgn[a.axis][b.axis], tab[a.axis][b.axis]};
  };
  auto inv = [&](Unit a) -> Unit {
    return a.axis == 0 ? a : Unit{-a.sign, a.axis};
  };
  std::vector<Unit> all;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) all.push_back({sign, axis});

  std::map<std::vector<Unit>, int> classes;
  for (const auto& g : all) {
    std::vector<Unit> orbit;
    for (const auto& h : all) {
      const Unit c = mul(mul(h, g), inv(h));
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(c);
    }
    std::sort(orbit.begin(), orbit.end());
    classes[orbit]++;
  }
  CHECK(classes.size() == 5);
}

TEST_CASE("trivial group has chi = 1") {
  FiniteMatrixGroup triv{2, {DenseOperator::Identity(2, 2)}};
  CHECK(orbifold_euler_linear(triv) == Rational(1));
  const auto counts = class_and_rep_counts(triv);
  CHECK(counts.conjugacy_classes == 1);
}

TEST_CASE("abelian fast path agrees with the literal matrix pair count") {
  const auto g = build_Ar(3, 2);
  FiniteMatrixGroup mg{3, {}};
  for (const auto& e : g.elements) mg.elements.push_back(g.realize(e));
  CHECK(orbifold_euler_linear(mg) == orbifold_euler_linear(g));
}

TEST_CASE("group closure from generators enforces budgets and SL flag") {
  DenseOperator bad(2, 2);
  bad << 2.0, 0.0, 0.0, 1.0;  // infinite order
  CHECK_THROWS_AS(group_from_generators({bad}, false, 100), ConfigError);
  CHECK_THROWS_AS(group_from_generators({bad}, true, 100), DomainError);
}

TEST_CASE("hypersurface identity x^{r+1} = prod y_j") {
  const auto chk = hypersurface_check(4, 1, {1.0, 2.0, 3.0, 4.0});
  CHECK(std::abs(chk.residual) == 0.0);  // 24^2 = 576 = 1*4*9*16 exactly
  CHECK(chk.invariance_defect < 1e-12 * 600.0);

  const auto c2 = hypersurface_check(3, 2, {cdouble(0.4, 0.9), cdouble(-0.8, 0.1),
                                            cdouble(0.2, -0.5)});
  CHECK(std::abs(c2.residual) < 1e-12);
  CHECK(c2.invariance_defect < 1e-12);

  CHECK_THROWS_AS(hypersurface_check(3, 1, {1.0}), ConfigError);
}

TEST_CASE("exceptional divisor counts r(r+1)(r+2)/6") {
  const std::array<long, 4> expect{1, 4, 10, 20};
  for (int r = 1; r <= 4; ++r) CHECK(exceptional_divisor_count(r) == expect[r - 1]);
  CHECK(exceptional_divisor_count(10) == 220);
  CHECK_THROWS_AS(exceptional_divisor_count(0), ConfigError);
}

TEST_CASE("enumeration budgets are honored") {
  CHECK_THROWS_AS(build_Ar(10, 8, 1000), ConfigError);
  CHECK_THROWS_AS(build_Ar(1, 2), ConfigError);
}
