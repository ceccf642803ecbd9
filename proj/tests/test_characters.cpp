#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sml/errors.hpp"
#include "sml/n2_characters.hpp"

using namespace sml;
using namespace sml::n2;

TEST_CASE("discrete-series data is exact rational") {
  const auto vac = hw_data({1, 0, 0});
  CHECK(vac.c == Rational(1));
  CHECK(vac.h == Rational(0));
  CHECK(vac.Q == Rational(0));

  const auto d = hw_data({1, 1, 1});
  CHECK(d.c == Rational(1));
  CHECK(d.h == Rational(2, 3));
  CHECK(d.Q == Rational(1, 3));
  CHECK(conformal_weight_quarter({1, 1, 1}) == Rational(1, 6));

  const auto big = hw_data({3, 2, -2});
  CHECK(big.c == Rational(9, 5));
  CHECK(big.h == Rational(4, 5));
  CHECK(big.Q == Rational(-2, 5));
}

TEST_CASE("bad labels are rejected") {
  CHECK_THROWS_AS(hw_data({2, 1, 0}), DomainError);   // l - m odd
  CHECK_THROWS_AS(hw_data({1, 2, 0}), DomainError);   // l > k
  CHECK_THROWS_AS(hw_data({1, 0, 2}), DomainError);   // |m| > l
  CHECK_THROWS_AS(hw_data({0, 0, 0}), DomainError);   // k < 1
}

TEST_CASE("NS twist equals the dedicated entry point") {
  const DiscreteLabel lab{1, 1, 1};
  const ModularPoint pt{cdouble(0.0, 1.3), cdouble(0.137, 0.211)};
  CHECK(character(lab, {0.0, 0.0}, pt) == ns_character(lab, pt));
  CHECK(sector_twist(Sector::Ramond).a == -0.5);
  CHECK(sector_twist(Sector::Ramond).b == -0.5);
}

TEST_CASE("character value is finite and truncation-stable") {
  const DiscreteLabel lab{1, 1, 1};
  const ModularPoint pt{cdouble(0.0, 1.3), cdouble(0.137, 0.211)};
  const cdouble v30 = character(lab, ns_twist(), pt, 30);
  const cdouble v40 = character(lab, ns_twist(), pt, 40);
  CHECK(std::isfinite(std::abs(v30)));
  CHECK(std::abs(v40 - v30) < 1e-10);

  const cdouble r = character(lab, ramond_twist(), pt, 30);
  CHECK(std::isfinite(std::abs(r)));
}

TEST_CASE("z -> z + 1 rotates the character by the composite theta phase") {
  // predicted phase: 2 pi (a - 1 + (m - 2a)/(k+2)) from the three z-dependent factors
  for (const auto& lab : {DiscreteLabel{1, 1, 1}, DiscreteLabel{2, 2, 0}, DiscreteLabel{3, 1, -1}}) {
    for (const auto& tw : {ns_twist(), ramond_twist()}) {
      const ModularPoint pt{cdouble(0.0, 0.9), cdouble(0.21, 0.13)};
      const ModularPoint pt1{pt.tau, pt.z + 1.0};
      const double phase =
          2.0 * std::numbers::pi *
          (tw.a - 1.0 + (lab.m - 2.0 * tw.a) / double(lab.k + 2));
      const cdouble rot = std::exp(cdouble(0.0, phase));
      const cdouble lhs = character(lab, tw, pt1);
      const cdouble rhs = rot * character(lab, tw, pt);
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    }
  }
}

TEST_CASE("vacuum expansion starts at q^{-1/24} with unit coefficient") {
  const auto exp = expand_character({1, 0, 0}, Sector::NS, 4);
  CHECK(exp.leading_exponent == Rational(-1, 24));
  CHECK(exp.leading_charge == Rational(0));
  REQUIRE(!exp.terms.empty());
  CHECK(std::abs(exp.terms[0].coeff - cdouble(1.0, 0.0)) < 1e-12);

  // NS character coefficients are multiplicities: real nonnegative integers
  for (const auto& t : exp.terms) {
    CHECK(std::abs(t.coeff.imag()) < 1e-10);
    CHECK(std::abs(t.coeff.real() - std::round(t.coeff.real())) < 1e-9);
    CHECK(t.coeff.real() > -1e-9);
    // charges live on Q + Z
    CHECK((t.charge - hw_data({1, 0, 0}).Q).is_integer());
  }
}

TEST_CASE("series expansion reproduces the numeric character value") {
  const DiscreteLabel lab{2, 2, 0};
  const auto exp = expand_character(lab, Sector::NS, 6);
  const double tau_im = 1.1;
  const cdouble q = std::exp(cdouble(0.0, 2.0 * std::numbers::pi) * cdouble(0.0, tau_im));
  const cdouble y = std::exp(cdouble(0.0, 2.0 * std::numbers::pi) * cdouble(0.31, 0.0));

  cdouble series = 0.0;
  for (const auto& t : exp.terms)
    series += t.coeff * std::pow(q, t.exponent.to_double()) *
              std::pow(y, t.charge.to_double());
  const cdouble direct = character(lab, ns_twist(), {cdouble(0.0, tau_im), 0.31});
  // truncation error is of order |q|^{lead + orders}
  const double trunc =
      std::pow(std::abs(q), exp.leading_exponent.to_double() + 6.0) * 20.0;
  CHECK(std::abs(series - direct) < trunc + 1e-12);
}

TEST_CASE("leading behavior: vacuum and charged labels") {
  const auto vac = leading_behavior({1, 0, 0}, ns_twist());
  CHECK(vac.exponent == Rational(-1, 24));
  CHECK(vac.charge == Rational(0));
  CHECK(vac.charge_matches);
  CHECK(vac.convention == HConvention::Both);  // h = 0 in either normalization

  const auto lb = leading_behavior({1, 1, 1}, ns_twist());
  CHECK(lb.charge == Rational(1, 3));
  CHECK(lb.charge_matches);
  // the theta-quotient character realizes the quarter-normalized weight
  CHECK(lb.exponent == Rational(1, 8));
  CHECK(lb.convention == HConvention::Quarter);
}

TEST_CASE("numeric leading extraction agrees with the exact series") {
  for (const auto& lab :
       {DiscreteLabel{2, 1, -1}, DiscreteLabel{2, 2, 2}, DiscreteLabel{3, 2, 0}}) {
    const auto exp = expand_character(lab, Sector::NS, 2);
    const auto lb = leading_behavior(lab, ns_twist());
    CHECK(lb.exponent == exp.leading_exponent);
    CHECK(lb.charge == exp.leading_charge);
  }
}

TEST_CASE("a denominator theta zero is reported as a pole") {
  // theta^{(s,t)}(z, tau') vanishes on z = (1/2 - s) tau' + (1/2 - t) + lattice;
  // for the vacuum NS character the first denominator has s = 1/2 + 1/6 at 3 tau
  const cdouble tau(0.0, 1.3);
  const cdouble z_zero = (0.5 - (0.5 + 1.0 / 6.0)) * (3.0 * tau) + 0.5;
  CHECK_THROWS_AS(character({1, 0, 0}, ns_twist(), {tau, z_zero}), PoleError);
}

TEST_CASE("expansion rejects nonsense orders") {
  CHECK_THROWS_AS(expand_character({1, 0, 0}, Sector::NS, 0), ConfigError);
}
