#pragma once

#include <vector>

#include "sml/qseries.hpp"
#include "sml/rational.hpp"
#include "sml/theta.hpp"

namespace sml::n2 {

// Discrete-series label: k >= 1, l - m even, |m| <= l <= k.
struct DiscreteLabel {
  int k, l, m;
};

void validate(const DiscreteLabel& lab);  // throws DomainError on a bad label

// Exact quantum numbers c = 3k/(k+2), h = (l^2 + 2l - m^2)/(k+2), Q = m/(k+2).
struct HWData {
  Rational c, h, Q;
};

HWData hw_data(const DiscreteLabel& lab);

// Alternate normalization of the conformal weight carrying a 1/4 on the level
// term: (l(l+2) - m^2)/(4(k+2)). The leading-behavior oracle decides which
// normalization the theta-quotient character actually realizes.
Rational conformal_weight_quarter(const DiscreteLabel& lab);

// Character twist (a, b), both in [-1/2, 1/2].
struct TwistPair {
  double a = 0.0;
  double b = 0.0;
};

inline TwistPair ns_twist() { return {0.0, 0.0}; }
inline TwistPair ramond_twist() { return {-0.5, -0.5}; }

// The twisted discrete-series character as a theta quotient:
//
//            pref * Theta^{(1/2+(l+1)/(k+2), 1/2)}(0,(k+2)tau) * Theta^{(a,b)}(z,tau)
//  Ch(z,t) = -------------------------------------------------------------------------
//            Theta^{(1/2+(l-m+1+2a)/(2(k+2)), b)} * Theta^{(1/2-(l+m+1-2a)/(2(k+2)), b)}
//
// with both denominator factors at (z, (k+2)tau) and pref = exp(i pi (1/2 - (l+1)/(k+2))).
// terms <= 0 selects the truncation automatically from the tail-bound rule.
cdouble character(const DiscreteLabel& lab, const TwistPair& twist, const ModularPoint& pt,
                  int terms = 0);

cdouble ns_character(const DiscreteLabel& lab, const ModularPoint& pt, int terms = 0);

enum class Sector { NS, Ramond };
TwistPair sector_twist(Sector s);

struct ExpansionTerm {
  Rational exponent;  // q-exponent
  Rational charge;    // y-exponent
  cdouble coeff;
};

struct CharacterExpansion {
  std::vector<ExpansionTerm> terms;  // sorted by exponent, then charge
  Rational leading_exponent;
  Rational leading_charge;
};

// Exact-exponent q,y-expansion of the character through `orders` integer
// q-levels above the leading exponent. Exponents land on the lattice
// Z/(24(k+2)), charges on Z/(2(k+2)).
CharacterExpansion expand_character(const DiscreteLabel& lab, Sector sector, int orders);

// Which h-normalization the extracted leading exponent matches.
enum class HConvention { Unit, Quarter, Both, Neither };

struct LeadingBehavior {
  Rational exponent;      // snapped leading q-exponent
  Rational charge;        // snapped leading charge
  double raw_exponent;    // before snapping
  double raw_charge;
  double stability;       // spread of the exponent across radius pairs
  HConvention convention; // comparison against h - c/24 (NS twist only)
  bool charge_matches;    // leading charge equals Q of hw_data
};

// Numerical extraction of the smallest q-exponent and its charge: the
// character is sampled on a circle in y at small |q|, Fourier-analyzed in z,
// and channel magnitudes compared across |q| radii. Independent of the series
// expansion path.
LeadingBehavior leading_behavior(const DiscreteLabel& lab, const TwistPair& twist,
                                 const std::vector<double>& q_radii = {1e-3, 1e-4, 1e-5},
                                 int z_samples = 32);

}  // namespace sml::n2
