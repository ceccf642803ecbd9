#include "sml/qseries.hpp"

#include <cmath>

#include "sml/errors.hpp"

namespace sml::n2 {

void QYSeries::add_term(long e, long f, std::complex<double> c) {
  if (e >= valid_to_) return;
  rows_[e][f] += c;
}

long QYSeries::leading_exponent() const {
  if (rows_.empty()) throw EvaluationError("QYSeries: leading exponent of empty series");
  return rows_.begin()->first;
}

void QYSeries::truncate(long bound) {
  rows_.erase(rows_.lower_bound(bound), rows_.end());
  valid_to_ = std::min(valid_to_, bound);
}

QYSeries QYSeries::mul(const QYSeries& other) const {
  if (qden_ != other.qden_ || yden_ != other.yden_)
    throw ConfigError("QYSeries: exponent lattices differ");
  if (rows_.empty() || other.rows_.empty())
    return QYSeries(qden_, yden_, std::min(valid_to_, other.valid_to_));

  const long lead_a = leading_exponent(), lead_b = other.leading_exponent();
  const long valid = std::min(valid_to_ + lead_b, other.valid_to_ + lead_a);
  QYSeries out(qden_, yden_, valid);
  for (const auto& [ea, rowa] : rows_) {
    if (ea + lead_b >= valid) break;
    for (const auto& [eb, rowb] : other.rows_) {
      if (ea + eb >= valid) break;
      for (const auto& [fa, ca] : rowa)
        for (const auto& [fb, cb] : rowb) out.add_term(ea + eb, fa + fb, ca * cb);
    }
  }
  return out;
}

QYSeries QYSeries::reciprocal() const {
  if (rows_.empty()) throw EvaluationError("QYSeries: reciprocal of empty series");
  const auto& lead_row = rows_.begin()->second;
  if (lead_row.size() != 1)
    throw EvaluationError(
        "QYSeries: reciprocal requires a single-monomial leading coefficient "
        "(twisted sector with a tied leading theta term?)");
  const long e0 = rows_.begin()->first;
  const long f0 = lead_row.begin()->first;
  const std::complex<double> c0 = lead_row.begin()->second;

  // B = c0 q^{e0} y^{f0} (1 + R);  1/B = c0^{-1} q^{-e0} y^{-f0} sum_j (-R)^j
  const long valid_rel = valid_to_ - e0;  // validity window of 1 + R
  if (valid_rel <= 0) return QYSeries(qden_, yden_, -e0);

  QYSeries r(qden_, yden_, valid_rel);
  for (const auto& [e, row] : rows_) {
    if (e == e0) continue;
    for (const auto& [f, c] : row) r.add_term(e - e0, f - f0, c / c0);
  }

  QYSeries acc(qden_, yden_, valid_rel);
  acc.add_term(0, 0, 1.0);
  if (!r.empty()) {
    if (r.leading_exponent() <= 0)
      throw EvaluationError("QYSeries: reciprocal leading term is not minimal");
    QYSeries power = acc;  // (-R)^0
    const QYSeries neg_r = r.scaled(-1.0);
    while (true) {
      power = power.mul(neg_r);
      power.truncate(valid_rel);
      if (power.empty()) break;
      for (const auto& [e, row] : power.rows())
        for (const auto& [f, c] : row) acc.add_term(e, f, c);
    }
  }

  QYSeries out(qden_, yden_, valid_rel - e0);
  for (const auto& [e, row] : acc.rows())
    for (const auto& [f, c] : row) out.add_term(e - e0, f - f0, c / c0);
  return out;
}

QYSeries QYSeries::scaled(std::complex<double> c) const {
  QYSeries out(qden_, yden_, valid_to_);
  for (const auto& [e, row] : rows_)
    for (const auto& [f, v] : row) out.add_term(e, f, v * c);
  return out;
}

void QYSeries::prune(double floor) {
  double peak = 0.0;
  for (const auto& [e, row] : rows_)
    for (const auto& [f, c] : row) peak = std::max(peak, std::abs(c));
  for (auto it = rows_.begin(); it != rows_.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = (std::abs(jt->second) < floor * peak) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? rows_.erase(it) : std::next(it);
  }
}

}  // namespace sml::n2
