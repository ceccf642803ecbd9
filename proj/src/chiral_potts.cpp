#include "sml/chiral_potts.hpp"

#include <cmath>
#include <string>

#include "sml/errors.hpp"
#include "sml/weyl.hpp"

namespace sml::chiralpotts {

namespace {

// N-th root of z on branch `br`: principal root times omega^br.
cdouble nth_root(cdouble z, int N, int br) {
  if (z == cdouble(0.0, 0.0)) return 0.0;
  const double r = std::pow(std::abs(z), 1.0 / N);
  const double phi = std::arg(z) / N;
  cdouble root = std::polar(r, phi);
  const cdouble w = weyl::primitive_root(N);
  int m = ((br % N) + N) % N;
  for (int i = 0; i < m; ++i) root *= w;
  return root;
}

cdouble powN(cdouble z, int N) {
  cdouble out = 1.0;
  for (int i = 0; i < N; ++i) out *= z;
  return out;
}

}  // namespace

Coupling::Coupling(double k_, double kprime_) : k(k_), kprime(kprime_) {
  if (std::abs(k * k + kprime * kprime - 1.0) > 1e-12)
    throw ConfigError("Coupling: k^2 + k'^2 must equal 1");
}

Coupling Coupling::from_kprime(double kprime_) {
  if (std::abs(kprime_) > 1.0)
    throw DomainError("Coupling: |k'| must be <= 1 for a real k");
  return Coupling(std::sqrt(1.0 - kprime_ * kprime_), kprime_);
}

RapidityPoint::RapidityPoint(int N_, cdouble a_, cdouble b_, cdouble c_, cdouble d_,
                             Coupling cpl)
    : N(N_), a(a_), b(b_), c(c_), d(d_), coupling(cpl) {
  if (N < 2) throw ConfigError("RapidityPoint: N must be >= 2");
  if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0)
    throw ConfigError("RapidityPoint: all four components vanish");
  normalize();
}

void RapidityPoint::normalize() {
  double m = std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  a /= m;
  b /= m;
  c /= m;
  d /= m;
}

std::array<cdouble, 4> curve_residual(const RapidityPoint& p) {
  const cdouble A = powN(p.a, p.N), B = powN(p.b, p.N), C = powN(p.c, p.N),
                D = powN(p.d, p.N);
  const double k = p.coupling.k, kp = p.coupling.kprime;
  return {k * A + kp * C - D, k * B + kp * D - C, A + kp * B - k * D, kp * A + B - k * C};
}

RapidityPoint sample_rapidity(int N, const Coupling& cpl, cdouble B, cdouble D,
                              const RootBranches& br) {
  if (B == 0.0 && D == 0.0)
    throw ConfigError("sample_rapidity: (B, D) = (0, 0) gives the zero vector");
  const cdouble A = cpl.k * D - cpl.kprime * B;
  const cdouble C = cpl.k * B + cpl.kprime * D;
  return RapidityPoint(N, nth_root(A, N, br.a), nth_root(B, N, br.b), nth_root(C, N, br.c),
                       nth_root(D, N, br.d), cpl);
}

RapidityPoint superintegrable_point(int N, const Coupling& cpl, int branch_ab, int branch_cd) {
  if (std::abs(cpl.k) < 1e-14 || std::abs(1.0 + cpl.kprime) < 1e-14)
    throw DomainError("superintegrable_point: degenerate coupling (k = 0)");
  const cdouble ab = nth_root(cpl.k / (1.0 + cpl.kprime), N, branch_ab);
  const cdouble cd = nth_root(1.0, N, branch_cd);
  return RapidityPoint(N, ab, ab, cd, cd, cpl);
}

cdouble WeightTable::w(long n) const { return W[((n % N) + N) % N]; }
cdouble WeightTable::wbar(long n) const { return Wbar[((n % N) + N) % N]; }

WeightTable weights(const RapidityPoint& p, const RapidityPoint& q) {
  const int N = p.N;
  if (q.N != N) throw ConfigError("weights: rapidities live at different N");
  const cdouble w = weyl::primitive_root(N);

  WeightTable tab{N, std::vector<cdouble>(N), std::vector<cdouble>(N)};
  tab.W[0] = 1.0;
  tab.Wbar[0] = 1.0;
  cdouble wj = 1.0;
  cdouble prodW = 1.0, prodWbar = 1.0;
  for (int j = 1; j <= N - 1; ++j) {
    wj *= w;
    const cdouble denW = p.b * q.d - p.c * q.a * wj;
    const cdouble denWbar = p.c * q.b - p.b * q.c * wj;
    if (std::abs(denW) < 1e-14)
      throw PoleError("weights: b_p d_q - c_p a_q w^j vanishes at j = " + std::to_string(j));
    if (std::abs(denWbar) < 1e-14)
      throw PoleError("weights: c_p b_q - b_p c_q w^j vanishes at j = " + std::to_string(j));
    prodW *= (p.d * q.b - p.a * q.c * wj) / denW;
    prodWbar *= (w * p.a * q.d - p.d * q.a * wj) / denWbar;
    tab.W[j] = prodW;
    tab.Wbar[j] = prodWbar;
  }
  return tab;
}

std::array<cdouble, 2> full_period_factors(const RapidityPoint& p, const RapidityPoint& q) {
  const int N = p.N;
  const cdouble w = weyl::primitive_root(N);
  cdouble wj = 1.0;
  cdouble fW = 1.0, fWbar = 1.0;
  for (int j = 1; j <= N; ++j) {
    wj *= w;
    const cdouble denW = p.b * q.d - p.c * q.a * wj;
    const cdouble denWbar = p.c * q.b - p.b * q.c * wj;
    if (std::abs(denW) < 1e-14 || std::abs(denWbar) < 1e-14)
      throw PoleError("full_period_factors: weight denominator vanishes at j = " +
                      std::to_string(j));
    fW *= (p.d * q.b - p.a * q.c * wj) / denW;
    fWbar *= (w * p.a * q.d - p.d * q.a * wj) / denWbar;
  }
  return {fW, fWbar};
}

DenseOperator transfer_matrix(const RapidityPoint& p, const RapidityPoint& q, int L) {
  const int N = p.N;
  weyl::LatticeConfig cfg(N, L);  // validates the size budget
  const WeightTable tab = weights(p, q);
  const long dim = cfg.dim();

  std::vector<int> s(L), sp(L);
  auto unpack = [&](long idx, std::vector<int>& out) {
    for (int l = L - 1; l >= 0; --l) {
      out[l] = static_cast<int>(idx % N);
      idx /= N;
    }
  };

  DenseOperator t(dim, dim);
  for (long row = 0; row < dim; ++row) {
    unpack(row, s);
    for (long col = 0; col < dim; ++col) {
      unpack(col, sp);
      cdouble v = 1.0;
      for (int l = 0; l < L; ++l) {
        v *= tab.wbar(s[l] - sp[l]);
        v *= tab.w(s[l] - sp[(l + 1) % L]);
      }
      t(row, col) = v;
    }
  }
  return t;
}

HyperellipticCoords hyperelliptic_coords(const RapidityPoint& p) {
  if (std::abs(p.c) < 1e-14 || std::abs(p.d) < 1e-14)
    throw DomainError("hyperelliptic_coords: c or d vanishes");
  const cdouble t = (p.a * p.b) / (p.c * p.d);
  const cdouble lambda = powN(p.d / p.c, p.N);
  const double k = p.coupling.k, kp = p.coupling.kprime;
  const cdouble residual =
      powN(t, p.N) - (1.0 - kp * lambda) * (1.0 - kp / lambda) / (k * k);
  return {t, lambda, residual};
}

RapidityPoint apply_R(const RapidityPoint& p) {
  const cdouble w = weyl::primitive_root(p.N);
  return RapidityPoint(p.N, p.b, w * p.a, p.d, p.c, p.coupling);
}

double order_parameter_conjecture(int N, int j, double kprime) {
  if (N < 2) throw ConfigError("order_parameter_conjecture: N must be >= 2");
  if (j < 0 || j > N - 1)
    throw DomainError("order_parameter_conjecture: j outside 0..N-1");
  if (std::abs(kprime) > 1.0)
    throw DomainError("order_parameter_conjecture: |k'| must be <= 1");
  const double expo = double(j) * double(N - j) / (2.0 * N * N);
  return std::pow(1.0 - kprime * kprime, expo);
}

}  // namespace sml::chiralpotts
