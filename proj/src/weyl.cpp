#include "sml/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sml/errors.hpp"

namespace sml::weyl {

cdouble root_of_unity(int N, long m) {
  const long mm = ((m % N) + N) % N;
  if (mm == 0) return {1.0, 0.0};
  if (2 * mm == N) return {-1.0, 0.0};
  if (4 * mm == N) return {0.0, 1.0};
  if (4 * mm == 3L * N) return {0.0, -1.0};
  const double arg = 2.0 * std::numbers::pi * double(mm) / N;
  return {std::cos(arg), std::sin(arg)};
}

cdouble primitive_root(int N) { return root_of_unity(N, 1); }

LatticeConfig::LatticeConfig(int n_states, int length)
    : N(n_states), L(length), omega(primitive_root(n_states)) {
  if (N < 2) throw ConfigError("LatticeConfig: N must be >= 2, got " + std::to_string(N));
  if (L < 1) throw ConfigError("LatticeConfig: L must be >= 1, got " + std::to_string(L));
  if (dim() > kMaxDenseDim)
    throw ConfigError("LatticeConfig: N^L = " + std::to_string(dim()) +
                      " exceeds the dense size budget " + std::to_string(kMaxDenseDim));
}

long LatticeConfig::dim() const {
  long d = 1;
  for (int l = 0; l < L; ++l) {
    d *= N;
    if (d > kMaxDenseDim) return d;  // caller checks the budget
  }
  return d;
}

DenseOperator shift(int N) {
  if (N < 2) throw ConfigError("shift: N must be >= 2, got " + std::to_string(N));
  DenseOperator x = DenseOperator::Zero(N, N);
  for (int m = 0; m < N; ++m) x((m + 1) % N, m) = 1.0;
  return x;
}

DenseOperator clock(int N) {
  if (N < 2) throw ConfigError("clock: N must be >= 2, got " + std::to_string(N));
  DenseOperator z = DenseOperator::Zero(N, N);
  for (int m = 0; m < N; ++m) z(m, m) = root_of_unity(N, m);
  return z;
}

DenseOperator site_embed(const DenseOperator& op, int site, const LatticeConfig& cfg) {
  if (site < 1 || site > cfg.L)
    throw IndexError("site_embed: site " + std::to_string(site) + " outside 1.." +
                     std::to_string(cfg.L));
  if (op.rows() != cfg.N || op.cols() != cfg.N)
    throw ConfigError("site_embed: operator must be N x N");
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int l = 1; l <= cfg.L; ++l) {
    if (l == site)
      out = kron(out, op);
    else
      out = kron(out, DenseOperator::Identity(cfg.N, cfg.N));
  }
  return out;
}

DenseOperator shift_at(int site, const LatticeConfig& cfg) {
  return site_embed(shift(cfg.N), site, cfg);
}

DenseOperator clock_at(int site, const LatticeConfig& cfg) {
  return site_embed(clock(cfg.N), site, cfg);
}

DenseOperator spin_shift(const LatticeConfig& cfg) {
  DenseOperator u = DenseOperator::Identity(cfg.dim(), cfg.dim());
  for (int l = 1; l <= cfg.L; ++l) u = u * shift_at(l, cfg);
  return u;
}

}  // namespace sml::weyl
