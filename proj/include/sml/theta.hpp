#pragma once

#include <complex>

#include "sml/errors.hpp"

namespace sml::n2 {

using cdouble = std::complex<double>;

// Theta characteristic (s, t), both real.
struct ThetaChar {
  double s = 0.0;
  double t = 0.0;
};

// Point of evaluation: tau in the upper half plane, z anywhere.
struct ModularPoint {
  cdouble tau;
  cdouble z;

  cdouble q() const;  // exp(2 pi i tau)
  cdouble y() const;  // exp(2 pi i z)
};

struct ValueWithBound {
  cdouble value;
  double tail_bound;  // bound on the truncated tail
};

// theta^{(s,t)}(z, tau) = sum_{n in Z} exp(pi i (n+s)^2 tau + 2 pi i (n+s)(z+t)),
// truncated to |n+s| <= terms.
ValueWithBound theta_with_bound(const ThetaChar& chr, const ModularPoint& pt, int terms);
cdouble theta(const ThetaChar& chr, const ModularPoint& pt, int terms);

// Number of terms for |q|^{(terms - |s|)^2} < 1e-16 at this point.
int default_terms(const ThetaChar& chr, const ModularPoint& pt);

// eta(tau) = q^{1/24} prod_{n=1}^{terms} (1 - q^n)
ValueWithBound eta_with_bound(cdouble tau, int terms);
cdouble eta(cdouble tau, int terms);

// Theta^{(s,t)} = theta^{(s,t)} / eta^3
cdouble big_theta(const ThetaChar& chr, const ModularPoint& pt, int terms);

}  // namespace sml::n2
