#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sml/errors.hpp"
#include "sml/sca.hpp"

using namespace sml;
using namespace sml::n2;

namespace {

Rational coeff(const SCAElement& e, const SCAMode& m) {
  auto it = e.find(m);
  return it == e.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("[L_1, L_{-1}] = 2 L_0 with no central term") {
  const auto r = sca_bracket(SCAMode::l(1), SCAMode::l(-1));
  CHECK(coeff(r, SCAMode::l(0)) == Rational(2));
  CHECK(coeff(r, SCAMode::central()) == Rational(0));
}

TEST_CASE("[L_2, L_{-2}] = 4 L_0 + c/2") {
  const auto r = sca_bracket(SCAMode::l(2), SCAMode::l(-2));
  CHECK(coeff(r, SCAMode::l(0)) == Rational(4));
  CHECK(coeff(r, SCAMode::central()) == Rational(1, 2));  // (m^3 - m)/12 at m = 2
}

TEST_CASE("{G+_{1/2}, G-_{-1/2}} = 2 L_0 + J_0") {
  const auto r = sca_bracket(SCAMode::gplus2(1), SCAMode::gminus2(-1));
  CHECK(coeff(r, SCAMode::l(0)) == Rational(2));
  CHECK(coeff(r, SCAMode::j(0)) == Rational(1));
  CHECK(coeff(r, SCAMode::central()) == Rational(0));  // p^2 - 1/4 = 0 at p = 1/2
}

TEST_CASE("same-sign supercharges anticommute to zero") {
  CHECK(sca_bracket(SCAMode::gplus2(1), SCAMode::gplus2(3)).empty());
  CHECK(sca_bracket(SCAMode::gminus2(-1), SCAMode::gminus2(-1)).empty());
}

TEST_CASE("bracket symmetry: commutator vs anticommutator") {
  // even-even and even-odd brackets are antisymmetric
  const auto lj = sca_bracket(SCAMode::l(2), SCAMode::j(-1));
  const auto jl = sca_bracket(SCAMode::j(-1), SCAMode::l(2));
  for (const auto& [m, c] : lj) CHECK(coeff(jl, m) == -c);

  // odd-odd brackets are symmetric
  const auto pm = sca_bracket(SCAMode::gplus2(3), SCAMode::gminus2(-1));
  const auto mp = sca_bracket(SCAMode::gminus2(-1), SCAMode::gplus2(3));
  for (const auto& [m, c] : pm) CHECK(coeff(mp, m) == c);
}

TEST_CASE("central element is central") {
  for (const auto& m : mode_window(2)) {
    CHECK(sca_bracket(SCAMode::central(), m).empty());
    CHECK(sca_bracket(m, SCAMode::central()).empty());
  }
}

TEST_CASE("current algebra: [J_m, J_n] and [L_m, J_n]") {
  const auto jj = sca_bracket(SCAMode::j(3), SCAMode::j(-3));
  CHECK(coeff(jj, SCAMode::central()) == Rational(1));  // c m / 3 at m = 3

  const auto lj = sca_bracket(SCAMode::l(1), SCAMode::j(2));
  CHECK(coeff(lj, SCAMode::j(3)) == Rational(-2));
}

TEST_CASE("supercurrents carry charge +-1 and weight m/2 - p") {
  const auto jg = sca_bracket(SCAMode::j(1), SCAMode::gminus2(1));
  CHECK(coeff(jg, SCAMode::gminus2(3)) == Rational(-1));

  const auto lg = sca_bracket(SCAMode::l(2), SCAMode::gplus2(-1));  // m=2, p=-1/2
  CHECK(coeff(lg, SCAMode::gplus2(3)) == Rational(3, 2));           // m/2 - p = 3/2
}

TEST_CASE("graded Jacobi identity holds exactly on windows 1..3") {
  CHECK(jacobi_residual(1) == Rational(0));
  CHECK(jacobi_residual(2) == Rational(0));
  CHECK(jacobi_residual(3) == Rational(0));
  CHECK_THROWS_AS(jacobi_residual(0), ConfigError);
}

TEST_CASE("a corrupted structure constant breaks the Jacobi identity") {
  // negative control: recompute one Leibniz residual with {G+,G-} -> 2L + 2(p-q)J
  const SCAMode x = SCAMode::l(1), y = SCAMode::gplus2(3), z = SCAMode::gminus2(-1);
  auto corrupt_bracket = [](const SCAMode& a, const SCAMode& b) {
    SCAElement e = sca_bracket(a, b);
    if ((a.kind == ModeKind::Gplus && b.kind == ModeKind::Gminus) ||
        (a.kind == ModeKind::Gminus && b.kind == ModeKind::Gplus)) {
      const SCAMode jmode{ModeKind::J, a.idx2 + b.idx2};
      auto it = e.find(jmode);
      if (it != e.end()) it->second = it->second * Rational(2);
    }
    return e;
  };

  // [x,[y,z]] - [[x,y],z] - [y,[x,z]] with the corrupted odd-odd bracket
  SCAElement r = bracket({{x, Rational(1)}}, corrupt_bracket(y, z));
  r = add(r, scale(bracket(sca_bracket(x, y), {{z, Rational(1)}}), Rational(-1)));
  SCAElement t;
  for (const auto& [mx, cx] : sca_bracket(x, z))
    for (const auto& [m, c] : corrupt_bracket(y, mx)) t[m] += c * cx;
  r = add(r, scale(t, Rational(-1)));
  CHECK(max_abs_coeff(r) != Rational(0));
}

TEST_CASE("mode window contents") {
  const auto modes = mode_window(2);
  // L, J for m in -2..2, G+- for p in {-3/2,-1/2,1/2,3/2}, plus c
  CHECK(modes.size() == 5 + 5 + 4 + 4 + 1);
}
