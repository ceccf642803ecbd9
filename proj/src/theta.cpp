#include "sml/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sml::n2 {

namespace {
constexpr double kPi = std::numbers::pi;

void require_upper_half(cdouble tau) {
  if (tau.imag() <= 0.0) throw DomainError("theta/eta: Im(tau) must be positive");
}
}  // namespace

cdouble ModularPoint::q() const { return std::exp(cdouble(0.0, 2.0 * kPi) * tau); }
cdouble ModularPoint::y() const { return std::exp(cdouble(0.0, 2.0 * kPi) * z); }

ValueWithBound theta_with_bound(const ThetaChar& chr, const ModularPoint& pt, int terms) {
  require_upper_half(pt.tau);
  if (terms < 1) throw ConfigError("theta: terms must be >= 1");

  const cdouble ipi(0.0, kPi);
  cdouble sum = 0.0;
  // n with |n + s| <= terms; summed symmetrically so odd characteristics
  // cancel exactly at z = 0
  const auto nlo = static_cast<long>(std::ceil(-terms - chr.s));
  const auto nhi = static_cast<long>(std::floor(terms - chr.s));
  for (long n = nlo; n <= nhi; ++n) {
    const double u = double(n) + chr.s;
    sum += std::exp(ipi * (u * u) * pt.tau + 2.0 * ipi * u * (pt.z + chr.t));
  }

  // tail: |term(u)| = exp(-pi u^2 Im tau - 2 pi u Im(z)); the first omitted
  // terms dominate a geometric series once the ratio drops below 1
  const double imt = pt.tau.imag(), imz = pt.z.imag();
  auto mag = [&](double u) { return std::exp(-kPi * u * u * imt - 2.0 * kPi * u * imz); };
  const double up = double(nhi + 1) + chr.s, um = double(nlo - 1) + chr.s;
  const double rp = mag(up + 1.0) / mag(up), rm = mag(um - 1.0) / mag(um);
  double bound = 0.0;
  bound += (rp < 1.0) ? mag(up) / (1.0 - rp) : std::numeric_limits<double>::infinity();
  bound += (rm < 1.0) ? mag(um) / (1.0 - rm) : std::numeric_limits<double>::infinity();
  return {sum, bound};
}

cdouble theta(const ThetaChar& chr, const ModularPoint& pt, int terms) {
  return theta_with_bound(chr, pt, terms).value;
}

int default_terms(const ThetaChar& chr, const ModularPoint& pt) {
  require_upper_half(pt.tau);
  const double imt = pt.tau.imag();
  const double imz = std::abs(pt.z.imag());
  const double s = std::abs(chr.s);
  // smallest T with |q|^{(T-|s|)^2} e^{2 pi (T+|s|) |Im z|} < 1e-16; the z term
  // matters away from the real axis
  for (int t = 4; t < 10000; ++t) {
    const double u = t - s;
    const double log_mag = -kPi * u * u * imt + 2.0 * kPi * (t + s) * imz;
    if (log_mag < -16.0 * std::numbers::ln10) return t + 1;
  }
  throw ConfigError("default_terms: cannot reach the tail target at this point");
}

ValueWithBound eta_with_bound(cdouble tau, int terms) {
  require_upper_half(tau);
  if (terms < 1) throw ConfigError("eta: terms must be >= 1");
  const cdouble q = std::exp(cdouble(0.0, 2.0 * kPi) * tau);
  cdouble prod = 1.0;
  cdouble qn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    prod *= (1.0 - qn);
  }
  const cdouble pref = std::exp(cdouble(0.0, 2.0 * kPi) * tau / 24.0);
  // |log prod tail| <= sum_{n > terms} |q|^n / (1 - |q|)
  const double aq = std::abs(q);
  const double tail = std::pow(aq, terms + 1) / ((1.0 - aq) * (1.0 - aq));
  return {pref * prod, std::abs(pref * prod) * tail * 2.0};
}

cdouble eta(cdouble tau, int terms) { return eta_with_bound(tau, terms).value; }

cdouble big_theta(const ThetaChar& chr, const ModularPoint& pt, int terms) {
  const cdouble e = eta(pt.tau, terms);
  const cdouble e3 = e * e * e;
  return theta(chr, pt, terms) / e3;
}

}  // namespace sml::n2
