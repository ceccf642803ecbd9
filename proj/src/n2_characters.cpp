#include "sml/n2_characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sml::n2 {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const DiscreteLabel& lab) {
  if (lab.k < 1) throw DomainError("DiscreteLabel: k must be >= 1");
  if ((lab.l - lab.m) % 2 != 0)
    throw DomainError("DiscreteLabel: l - m must be even");
  if (std::abs(lab.m) > lab.l || lab.l > lab.k)
    throw DomainError("DiscreteLabel: need |m| <= l <= k");
}

HWData hw_data(const DiscreteLabel& lab) {
  validate(lab);
  const std::int64_t k = lab.k, l = lab.l, m = lab.m;
  return {Rational(3 * k, k + 2), Rational(l * l + 2 * l - m * m, k + 2),
          Rational(m, k + 2)};
}

Rational conformal_weight_quarter(const DiscreteLabel& lab) {
  validate(lab);
  const std::int64_t k = lab.k, l = lab.l, m = lab.m;
  return Rational(l * (l + 2) - m * m, 4 * (k + 2));
}

TwistPair sector_twist(Sector s) {
  return s == Sector::NS ? ns_twist() : ramond_twist();
}

namespace {

// magnitude of the largest single series term; the scale against which a
// computed theta value counts as a zero hit
double theta_term_scale(const ThetaChar& chr, const ModularPoint& pt) {
  const double imt = pt.tau.imag(), imz = pt.z.imag();
  const long n0 = std::llround(-chr.s);
  double peak = 0.0;
  for (long n = n0 - 2; n <= n0 + 2; ++n) {
    const double u = double(n) + chr.s;
    peak = std::max(peak, std::exp(-kPi * u * u * imt - 2.0 * kPi * u * imz));
  }
  return peak;
}

}  // namespace

cdouble character(const DiscreteLabel& lab, const TwistPair& twist, const ModularPoint& pt,
                  int terms) {
  validate(lab);
  const double kk = lab.k + 2.0;
  const ModularPoint pt_scaled_z0{kk * pt.tau, 0.0};
  const ModularPoint pt_scaled{kk * pt.tau, pt.z};

  const ThetaChar c_num{0.5 + (lab.l + 1) / kk, 0.5};
  const ThetaChar c_tw{twist.a, twist.b};
  const ThetaChar c_d1{0.5 + (lab.l - lab.m + 1 + 2 * twist.a) / (2 * kk), twist.b};
  const ThetaChar c_d2{0.5 - (lab.l + lab.m + 1 - 2 * twist.a) / (2 * kk), twist.b};

  auto nt = [&](const ThetaChar& c, const ModularPoint& p) {
    return terms > 0 ? terms : default_terms(c, p);
  };
  const cdouble num1 = big_theta(c_num, pt_scaled_z0, nt(c_num, pt_scaled_z0));
  const cdouble num2 = big_theta(c_tw, pt, nt(c_tw, pt));
  const cdouble th_d1 = theta(c_d1, pt_scaled, nt(c_d1, pt_scaled));
  const cdouble th_d2 = theta(c_d2, pt_scaled, nt(c_d2, pt_scaled));
  if (std::abs(th_d1) < 1e-12 * theta_term_scale(c_d1, pt_scaled) ||
      std::abs(th_d2) < 1e-12 * theta_term_scale(c_d2, pt_scaled))
    throw PoleError("character: denominator theta vanishes at the evaluation point");
  const cdouble e = eta(pt_scaled.tau, std::max(64, nt(c_d1, pt_scaled)));
  const cdouble den1 = th_d1 / (e * e * e);
  const cdouble den2 = th_d2 / (e * e * e);

  const cdouble pref = std::exp(cdouble(0.0, kPi * (0.5 - (lab.l + 1) / kk)));
  return pref * num1 * num2 / (den1 * den2);
}

cdouble ns_character(const DiscreteLabel& lab, const ModularPoint& pt, int terms) {
  return character(lab, ns_twist(), pt, terms);
}

// ---------------------------------------------------------------------------
// exact expansion
// ---------------------------------------------------------------------------

namespace {

// theta^{(s,t)}(z or 0, K tau) as a lattice series; all omitted terms lie
// strictly above emax.
QYSeries theta_series(const Rational& s, const Rational& t, long K, bool with_z,
                      long qden, long yden, long emax) {
  QYSeries out(qden, yden, emax + 1);
  auto exponent_units = [&](long n) -> Rational {
    const Rational u = Rational(n) + s;
    return Rational(K) * u * u * Rational(qden, 2);
  };
  // scan outward from the minimizer of (n+s)^2
  const long n0 = std::llround(-s.to_double());
  for (int dir : {+1, -1}) {
    for (long i = 0;; ++i) {
      const long n = dir > 0 ? n0 + i : n0 - 1 - i;
      const Rational eu = exponent_units(n);
      if (!eu.is_integer())
        throw EvaluationError("theta_series: exponent off the lattice");
      if (eu.num() > emax) break;
      const Rational u = Rational(n) + s;
      const Rational yu = u * Rational(yden);
      if (!yu.is_integer())
        throw EvaluationError("theta_series: charge off the lattice");
      const Rational phase = u * t;  // coefficient exp(2 pi i (n+s) t)
      const cdouble coeff = std::polar(1.0, 2.0 * kPi * phase.to_double());
      out.add_term(eu.num(), with_z ? yu.num() : 0, coeff);
    }
  }
  return out;
}

// eta(K tau)^3 = q^{K/8} prod (1 - q^{Kn})^3, exact through emax
QYSeries eta3_series(long K, long qden, long yden, long emax) {
  const Rational lead = Rational(K * qden, 8);
  if (!lead.is_integer()) throw EvaluationError("eta3_series: exponent off the lattice");
  QYSeries out(qden, yden, emax + 1);
  out.add_term(lead.num(), 0, 1.0);
  for (long n = 1; K * n * qden <= emax - lead.num(); ++n) {
    QYSeries binom(qden, yden, emax + 1 - lead.num());
    binom.add_term(0, 0, 1.0);
    binom.add_term(K * n * qden, 0, -1.0);
    for (int rep = 0; rep < 3; ++rep) {
      out = out.mul(binom);
      out.truncate(emax + 1);
    }
  }
  // the truncated product is exact through emax: every dropped binomial
  // contributes only above emax
  QYSeries fixed(qden, yden, emax + 1);
  for (const auto& [e, row] : out.rows())
    for (const auto& [f, c] : row) fixed.add_term(e, f, c);
  return fixed;
}

Rational theta_lead_units(const Rational& s, long K, long qden) {
  const long n0 = std::llround(-s.to_double());
  Rational best;
  bool first = true;
  for (long n = n0 - 1; n <= n0 + 1; ++n) {
    const Rational u = Rational(n) + s;
    const Rational e = Rational(K) * u * u * Rational(qden, 2);
    if (first || e < best) {
      best = e;
      first = false;
    }
  }
  return best;
}

}  // namespace

CharacterExpansion expand_character(const DiscreteLabel& lab, Sector sector, int orders) {
  validate(lab);
  if (orders < 1) throw ConfigError("expand_character: orders must be >= 1");
  const long kk = lab.k + 2;
  const long qden = 24 * kk;
  const long yden = 2 * kk;

  const Rational half(1, 2);
  const Rational a(sector == Sector::NS ? 0 : -1, 2);
  const Rational b = a;

  const Rational s_num = half + Rational(lab.l + 1, kk);
  const Rational s_d1 = half + Rational(lab.l - lab.m + 1, 2 * kk) + a / Rational(kk);
  const Rational s_d2 = half - Rational(lab.l + lab.m + 1, 2 * kk) + a / Rational(kk);

  // every factor is generated with the same relative span S above its own
  // leading exponent, so the final product is exact through lead + S
  const long span = (orders + 1) * qden;
  auto emax_for = [&](const Rational& lead) { return lead.num() + span; };

  const Rational lead_num1 = theta_lead_units(s_num, kk, qden);
  const Rational lead_num2 = theta_lead_units(a, 1, qden);
  const Rational lead_d1 = theta_lead_units(s_d1, kk, qden);
  const Rational lead_d2 = theta_lead_units(s_d2, kk, qden);

  QYSeries th_num = theta_series(s_num, half, kk, false, qden, yden, emax_for(lead_num1));
  QYSeries th_tw = theta_series(a, b, 1, true, qden, yden, emax_for(lead_num2));
  QYSeries th_d1 = theta_series(s_d1, b, kk, true, qden, yden, emax_for(lead_d1));
  QYSeries th_d2 = theta_series(s_d2, b, kk, true, qden, yden, emax_for(lead_d2));
  QYSeries eta_k3 = eta3_series(kk, qden, yden, kk * qden / 8 + span);
  QYSeries eta_13 = eta3_series(1, qden, yden, qden / 8 + span);

  QYSeries series = th_num.mul(th_tw).mul(eta_k3).mul(eta_13.reciprocal());
  series = series.mul(th_d1.reciprocal()).mul(th_d2.reciprocal());
  const cdouble pref =
      std::exp(cdouble(0.0, kPi * (0.5 - double(lab.l + 1) / double(kk))));
  series = series.scaled(pref);
  series.prune(1e-12);

  if (series.empty())
    throw EvaluationError("expand_character: series vanished (orders too small?)");
  const long lead = series.leading_exponent();
  series.truncate(std::min(series.valid_to(), lead + long(orders) * qden + 1));

  CharacterExpansion out;
  for (const auto& [e, row] : series.rows())
    for (const auto& [f, c] : row)
      out.terms.push_back({Rational(e, qden), Rational(f, yden), c});
  const auto& lead_row = series.rows().begin()->second;
  auto best = lead_row.begin();
  for (auto it = lead_row.begin(); it != lead_row.end(); ++it)
    if (std::abs(it->second) > std::abs(best->second)) best = it;
  out.leading_exponent = Rational(lead, qden);
  out.leading_charge = Rational(best->first, yden);
  return out;
}

// ---------------------------------------------------------------------------
// numerical leading-behavior extraction
// ---------------------------------------------------------------------------

LeadingBehavior leading_behavior(const DiscreteLabel& lab, const TwistPair& twist,
                                 const std::vector<double>& q_radii, int z_samples) {
  validate(lab);
  if (q_radii.size() < 2)
    throw ConfigError("leading_behavior: need at least two |q| radii");
  const int M = z_samples;
  const long kk = lab.k + 2;
  const HWData hw = hw_data(lab);

  // fractional charge from quasi-periodicity in z -> z + 1, measured at the
  // largest radius
  const double tau0_im = std::log(1.0 / q_radii.front()) / (2.0 * kPi);
  const cdouble tau0(0.0, tau0_im);
  const double z_probe = 0.2183;
  const cdouble f0 = character(lab, twist, {tau0, z_probe});
  const cdouble f1 = character(lab, twist, {tau0, z_probe + 1.0});
  double q0_frac = std::arg(f1 / f0) / (2.0 * kPi);  // charge mod 1 in (-1/2, 1/2]
  double q0_delta = 0.0;
  const Rational q0 = snap_to_denominator(q0_frac, 2 * kk, &q0_delta);
  if (q0_delta > 1e-6)
    throw EvaluationError("leading_behavior: fractional charge " +
                          sci(q0_frac) + " is off the Z/(2(k+2)) grid");

  // Fourier channels at every radius
  std::vector<std::vector<cdouble>> chan(q_radii.size());
  const int half = M / 2;
  for (size_t r = 0; r < q_radii.size(); ++r) {
    const cdouble tau(0.0, std::log(1.0 / q_radii[r]) / (2.0 * kPi));
    std::vector<cdouble> g(M);
    for (int j = 0; j < M; ++j) {
      const double z = (j + 0.31) / M;
      g[j] = character(lab, twist, {tau, z}) *
             std::exp(cdouble(0.0, -2.0 * kPi * q0.to_double() * z));
    }
    chan[r].assign(M, 0.0);
    for (int n = -half; n < half; ++n) {
      cdouble acc = 0.0;
      for (int j = 0; j < M; ++j) {
        const double z = (j + 0.31) / M;
        acc += g[j] * std::exp(cdouble(0.0, -2.0 * kPi * n * z));
      }
      chan[r][n + half] = acc / double(M);
    }
  }

  // per-channel exponent estimates from consecutive radius pairs; the leading
  // channel is the one with the smallest exponent at the two smallest radii
  const size_t R = q_radii.size();
  auto estimate = [&](size_t r1, size_t r2, int idx) {
    return std::log(std::abs(chan[r1][idx]) / std::abs(chan[r2][idx])) /
           std::log(q_radii[r1] / q_radii[r2]);
  };
  double floor_mag = 0.0;
  for (int idx = 0; idx < M; ++idx)
    floor_mag = std::max(floor_mag, std::abs(chan[R - 1][idx]));
  floor_mag *= 1e-10;

  int best_idx = -1;
  double best_e = 0.0;
  for (int idx = 0; idx < M; ++idx) {
    if (std::abs(chan[R - 1][idx]) < floor_mag || std::abs(chan[R - 2][idx]) < floor_mag)
      continue;
    const double e = estimate(R - 2, R - 1, idx);
    if (best_idx < 0 || e < best_e) {
      best_e = e;
      best_idx = idx;
    }
  }
  if (best_idx < 0) throw EvaluationError("leading_behavior: no usable Fourier channel");

  LeadingBehavior out;
  out.raw_exponent = best_e;
  out.raw_charge = q0.to_double() + (best_idx - half);

  // stability across radius pairs, including the largest-radius pair
  double spread = 0.0;
  std::vector<double> estimates;
  for (size_t r = 0; r + 1 < R; ++r) {
    if (std::abs(chan[r][best_idx]) < floor_mag || std::abs(chan[r + 1][best_idx]) < floor_mag)
      continue;
    estimates.push_back(estimate(r, r + 1, best_idx));
  }
  for (double e1 : estimates)
    for (double e2 : estimates) spread = std::max(spread, std::abs(e1 - e2));
  out.stability = spread;

  double snap_delta = 0.0;
  out.exponent = snap_to_denominator(best_e, 24 * kk, &snap_delta);
  out.charge = q0 + Rational(best_idx - half);
  const double grid = 1.0 / (24.0 * kk);
  if (snap_delta > 0.45 * grid || spread > grid)
    throw EvaluationError("leading_behavior: exponent extraction unstable (estimate " +
                          sci(best_e) + ", spread " + sci(spread) +
                          ")");

  out.charge_matches = (out.charge == hw.Q);
  const bool is_ns = twist.a == 0.0 && twist.b == 0.0;
  if (is_ns) {
    const Rational e_unit = hw.h - hw.c / Rational(24);
    const Rational e_quarter = conformal_weight_quarter(lab) - hw.c / Rational(24);
    const bool mu = (out.exponent == e_unit);
    const bool mq = (out.exponent == e_quarter);
    out.convention = mu && mq  ? HConvention::Both
                     : mu      ? HConvention::Unit
                     : mq      ? HConvention::Quarter
                               : HConvention::Neither;
  } else {
    out.convention = HConvention::Neither;
  }
  return out;
}

}  // namespace sml::n2
