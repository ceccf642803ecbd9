#pragma once

#include <complex>
#include <map>

#include "sml/rational.hpp"

namespace sml::n2 {

// Truncated bivariate Laurent series  sum c_{e,f} q^{e/qden} y^{f/yden}
// on a fixed exponent lattice. Coefficients are exact for q-exponents
// e < valid_to; multiplication and division track that bound.
class QYSeries {
 public:
  using Row = std::map<long, std::complex<double>>;  // y-step -> coefficient

  QYSeries(long qden, long yden, long valid_to)
      : qden_(qden), yden_(yden), valid_to_(valid_to) {}

  long qden() const { return qden_; }
  long yden() const { return yden_; }
  long valid_to() const { return valid_to_; }
  const std::map<long, Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  void add_term(long e, long f, std::complex<double> c);
  long leading_exponent() const;  // smallest stored q-step
  void truncate(long bound);      // drop rows with e >= bound

  QYSeries mul(const QYSeries& other) const;
  QYSeries reciprocal() const;  // leading row must be a single monomial
  QYSeries div(const QYSeries& other) const { return mul(other.reciprocal()); }
  QYSeries scaled(std::complex<double> c) const;

  // drop terms below a relative magnitude floor (numerical dust from cancellations)
  void prune(double floor = 1e-14);

 private:
  long qden_, yden_, valid_to_;
  std::map<long, Row> rows_;
};

}  // namespace sml::n2
