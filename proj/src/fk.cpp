#include "sml/fk.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sml/errors.hpp"
#include "sml/weyl.hpp"

namespace sml::fk {

namespace {

cdouble powN(cdouble z, int N) {
  cdouble out = 1.0;
  for (int i = 0; i < std::abs(N); ++i) out *= z;
  return N >= 0 ? out : 1.0 / out;
}

cdouble nth_root(cdouble z, int N, int br) {
  if (z == cdouble(0.0, 0.0)) return 0.0;
  cdouble root = std::polar(std::pow(std::abs(z), 1.0 / N), std::arg(z) / N);
  const cdouble w = weyl::primitive_root(N);
  int m = ((br % N) + N) % N;
  for (int i = 0; i < m; ++i) root *= w;
  return root;
}

long checked_dim(int N, int L) {
  long d = 1;
  for (int j = 0; j < L; ++j) {
    d *= N;
    if (d > kMaxDenseDim)
      throw ConfigError("fk: N^L exceeds the dense size budget");
  }
  return d;
}

// 2x2 scalar matrix acting on the auxiliary space
using Aux2 = std::array<std::array<cdouble, 2>, 2>;

LOperator aux_mul_left(const Aux2& m, const LOperator& l) {
  LOperator out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block[i][j] = m[i][0] * l.block[0][j] + m[i][1] * l.block[1][j];
  return out;
}

LOperator aux_mul_right(const LOperator& l, const Aux2& m) {
  LOperator out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block[i][j] = l.block[i][0] * m[0][j] + l.block[i][1] * m[1][j];
  return out;
}

// chain two aux-block operators: auxiliary indices multiply as 2x2 matrices,
// quantum entries combine by Kronecker product (left factor most significant)
LOperator chain(const LOperator& p, const LOperator& q) {
  LOperator out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block[i][j] = kron(p.block[i][0], q.block[0][j]) + kron(p.block[i][1], q.block[1][j]);
  return out;
}

DenseOperator aux_trace(const LOperator& l) { return l.block[0][0] + l.block[1][1]; }

LOperator chained_L(const InhomogeneitySet& hs, cdouble x) {
  checked_dim(hs.N, hs.L());
  LOperator prod = build_L(hs.sites[0], x, hs.N);
  for (int j = 1; j < hs.L(); ++j) prod = chain(prod, build_L(hs.sites[j], x, hs.N));
  return prod;
}

}  // namespace

WeylTriple build_weyl_triple(int N, cdouble alpha, cdouble beta, cdouble gamma, double tol) {
  if (N < 2) throw ConfigError("build_weyl_triple: N must be >= 2");
  const cdouble w = weyl::primitive_root(N);
  const DenseOperator z = weyl::clock(N);
  const DenseOperator x = weyl::shift(N);
  const DenseOperator zx = z * x;

  WeylTriple t{N, alpha * z, beta * x, gamma * zx.inverse()};

  auto rel = [&](const DenseOperator& p, const DenseOperator& q) {
    return (p * q - w * q * p).norm();
  };
  const double scale = std::max({t.U.norm() * t.V.norm(), t.V.norm() * t.W.norm(),
                                 t.W.norm() * t.U.norm(), 1.0});
  const double r = std::max({rel(t.U, t.V), rel(t.V, t.W), rel(t.W, t.U)});

  DenseOperator un = DenseOperator::Identity(N, N), vn = un, wn = un, zxn = un;
  for (int i = 0; i < N; ++i) {
    un = un * t.U;
    vn = vn * t.V;
    wn = wn * t.W;
    zxn = zxn * zx;
  }
  const double rpow = std::max({(un - powN(alpha, N) * DenseOperator::Identity(N, N)).norm(),
                                (vn - powN(beta, N) * DenseOperator::Identity(N, N)).norm(),
                                (wn - powN(gamma, N) * zxn.inverse()).norm()});

  if (r > tol * scale || rpow > tol * scale)
    throw EvaluationError("build_weyl_triple: relation residual " + sci(r) +
                          " above tolerance (internal self-test)");
  return t;
}

DenseOperator build_HFK(const FKParams& p) {
  if (p.N < 2) throw ConfigError("build_HFK: N must be >= 2");
  // flux P/N: the commutation constant is omega^P, realized on clock^P
  const DenseOperator z = weyl::clock(p.N);
  DenseOperator zp = DenseOperator::Identity(p.N, p.N);
  const int pmod = ((p.P % p.N) + p.N) % p.N;
  for (int i = 0; i < pmod; ++i) zp = zp * z;
  const DenseOperator x = weyl::shift(p.N);

  const DenseOperator u = p.alpha * zp;
  const DenseOperator v = p.beta * x;
  const DenseOperator wop = p.gamma * (zp * x).inverse();

  const long n = p.N;
  DenseOperator h = DenseOperator::Zero(n, n);
  h += p.mu * (u + u.inverse());
  h += p.nu * (v + v.inverse());
  h += p.rho * (wop + wop.inverse());
  return h;
}

LOperator build_L(const SiteParam& h, cdouble x, int N) {
  const DenseOperator z = weyl::clock(N);
  const DenseOperator xx = weyl::shift(N);
  LOperator l;
  l.block[0][0] = h.a * z * xx;
  l.block[0][1] = x * h.b * xx;
  l.block[1][0] = x * h.c * z;
  l.block[1][1] = h.d * DenseOperator::Identity(N, N);
  return l;
}

DenseOperator transfer(const InhomogeneitySet& hs, cdouble x) {
  return aux_trace(chained_L(hs, x));
}

double gauge_transfer_check(const InhomogeneitySet& hs, cdouble x,
                            const std::vector<cdouble>& xi) {
  const int L = hs.L();
  if (static_cast<int>(xi.size()) != L)
    throw ConfigError("gauge_transfer_check: need one xi per site");

  auto gauge = [](cdouble v) { return Aux2{{{1.0, v - 1.0}, {1.0, v}}}; };
  auto gauge_inv = [](cdouble v) {  // det = 1
    return Aux2{{{v, 1.0 - v}, {-1.0, 1.0}}};
  };

  LOperator prod;
  for (int j = 0; j < L; ++j) {
    LOperator lt = aux_mul_left(gauge(xi[j]), build_L(hs.sites[j], x, hs.N));
    lt = aux_mul_right(lt, gauge_inv(xi[(j + 1) % L]));
    prod = (j == 0) ? lt : chain(prod, lt);
  }
  return (aux_trace(prod) - transfer(hs, x)).norm();
}

std::vector<cdouble> curve_residual(const CurvePoint& p, const InhomogeneitySet& hs) {
  const int L = hs.L(), N = hs.N;
  if (static_cast<int>(p.xi.size()) != L)
    throw ConfigError("curve_residual: point size does not match the site count");
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  const cdouble xN = powN(p.x, N);

  std::vector<cdouble> res(L);
  for (int j = 0; j < L; ++j) {
    const SiteParam& h = hs.sites[j];
    const cdouble uj = powN(p.xi[j], N);
    const cdouble ujn = powN(p.xi[(j + 1) % L], N);
    const cdouble den = ujn * xN * powN(h.c, N) - powN(h.d, N);
    if (std::abs(den) < 1e-14)
      throw PoleError("curve_residual: denominator vanishes at site " + std::to_string(j));
    res[j] = uj - sign * (ujn * powN(h.a, N) - xN * powN(h.b, N)) / den;
  }
  return res;
}

SampledPoint sample_curve_point(const InhomogeneitySet& hs, cdouble x, cdouble xi0,
                                const std::vector<int>& branches) {
  const int L = hs.L(), N = hs.N;
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  const cdouble xN = powN(x, N);

  CurvePoint p;
  p.x = x;
  p.xi.assign(L, 0.0);
  p.xi[0] = xi0;

  cdouble u = powN(xi0, N);
  for (int j = 0; j + 1 < L; ++j) {
    const SiteParam& h = hs.sites[j];
    // invert relation j for xi_{j+1}^N
    const cdouble den = xN * powN(h.c, N) * u - sign * powN(h.a, N);
    if (std::abs(den) < 1e-14)
      throw PoleError("sample_curve_point: forward solve pole at site " + std::to_string(j));
    u = (powN(h.d, N) * u - sign * xN * powN(h.b, N)) / den;
    const int br = j < static_cast<int>(branches.size()) ? branches[j] : 0;
    p.xi[j + 1] = nth_root(u, N, br);
  }

  // wrap-around relation j = L-1 is the closure constraint
  const SiteParam& hl = hs.sites[L - 1];
  const cdouble den = powN(p.xi[0], N) * xN * powN(hl.c, N) - powN(hl.d, N);
  if (std::abs(den) < 1e-14)
    throw PoleError("sample_curve_point: closure relation pole at site " +
                    std::to_string(L - 1));
  const cdouble closure =
      powN(p.xi[L - 1], N) -
      sign * (powN(p.xi[0], N) * powN(hl.a, N) - xN * powN(hl.b, N)) / den;
  return {p, closure};
}

std::array<cdouble, 2> closure_xi0_pow(const InhomogeneitySet& hs, cdouble x) {
  const int L = hs.L(), N = hs.N;
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  const cdouble xN = powN(x, N);

  // compose the per-site Moebius maps u_{j+1} = (d^N u - s x^N b^N)/(x^N c^N u - s a^N)
  cdouble m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  for (int j = 0; j < L; ++j) {
    const SiteParam& h = hs.sites[j];
    const cdouble a = powN(h.d, N), b = -sign * xN * powN(h.b, N);
    const cdouble c = xN * powN(h.c, N), d = -sign * powN(h.a, N);
    const cdouble n00 = a * m00 + b * m10, n01 = a * m01 + b * m11;
    const cdouble n10 = c * m00 + d * m10, n11 = c * m01 + d * m11;
    m00 = n00;
    m01 = n01;
    m10 = n10;
    m11 = n11;
  }

  // fixed points of (m00 u + m01)/(m10 u + m11)
  if (std::abs(m10) < 1e-300) {
    if (std::abs(m00 - m11) < 1e-300)
      throw EvaluationError("closure_xi0_pow: degenerate closure map");
    const cdouble u = m01 / (m11 - m00);
    return {u, u};
  }
  // root pair of m10 u^2 + (m11 - m00) u - m01; the smaller root comes from
  // the product m01/m10 to dodge cancellation
  const cdouble half = (m00 - m11) / (2.0 * m10);
  cdouble disc = std::sqrt(half * half + m01 / m10);
  if (std::real(half * std::conj(disc)) < 0.0) disc = -disc;
  const cdouble u1 = half + disc;
  const cdouble u2 = std::abs(u1) > 1e-300 ? (-m01 / m10) / u1 : half - disc;
  return {u1, u2};
}

CurvePoint tau_plus(const CurvePoint& p, int N) {
  const cdouble q = std::polar(1.0, std::numbers::pi / N);
  CurvePoint out;
  out.x = q * p.x;
  out.xi.reserve(p.xi.size());
  for (cdouble v : p.xi) out.xi.push_back(v / q);
  return out;
}

CurvePoint tau_minus(const CurvePoint& p, int N) {
  const cdouble q = std::polar(1.0, std::numbers::pi / N);
  CurvePoint out;
  out.x = p.x / q;
  out.xi.reserve(p.xi.size());
  for (cdouble v : p.xi) out.xi.push_back(v / q);
  return out;
}

cdouble delta_minus(const CurvePoint& p, const InhomogeneitySet& hs) {
  const int L = hs.L();
  cdouble out = 1.0;
  for (int j = 0; j < L; ++j)
    out *= hs.sites[j].d - p.x * p.xi[(j + 1) % L] * hs.sites[j].c;
  return out;
}

cdouble delta_plus(const CurvePoint& p, const InhomogeneitySet& hs) {
  const int L = hs.L();
  cdouble out = 1.0;
  for (int j = 0; j < L; ++j) {
    const SiteParam& h = hs.sites[j];
    const cdouble den = p.xi[(j + 1) % L] * h.a - p.x * h.b;
    if (std::abs(den) < 1e-14)
      throw PoleError("delta_plus: xi_{j+1} a_j - x b_j vanishes at site " +
                      std::to_string(j));
    out *= p.xi[j] * (h.a * h.d - p.x * p.x * h.b * h.c) / den;
  }
  return out;
}

cdouble eval_poly(const std::vector<cdouble>& coeffs, cdouble x) {
  cdouble v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

cdouble bethe_residual(const BetheCandidate& cand, const CurvePoint& p,
                       const InhomogeneitySet& hs) {
  if (!cand.Q) throw EvaluationError("bethe_residual: candidate has no Q");
  const cdouble lam = eval_poly(cand.lambda, p.x);
  return lam * cand.Q(p) - cand.Q(tau_minus(p, hs.N)) * delta_minus(p, hs) -
         cand.Q(tau_plus(p, hs.N)) * delta_plus(p, hs);
}

EigenvaluePolynomials eigenvalue_polynomials(const InhomogeneitySet& hs,
                                             const std::vector<cdouble>& x_samples,
                                             double tol, std::uint64_t seed) {
  const int L = hs.L();
  const int S = static_cast<int>(x_samples.size());
  if (S < L + 2)
    throw ConfigError("eigenvalue_polynomials: need at least L + 2 samples");

  std::vector<DenseOperator> ts;
  ts.reserve(S);
  for (cdouble x : x_samples) ts.push_back(transfer(hs, x));
  const long dim = ts[0].rows();

  for (int i = 0; i < S; ++i)
    for (int j = i + 1; j < S; ++j)
      if (relative_commutator(ts[i], ts[j]) > 1e-9)
        throw CommutationError("eigenvalue_polynomials: transfer matrices at samples " +
                               std::to_string(i) + ", " + std::to_string(j) +
                               " do not commute");

  // one fixed joint eigenbasis from a seeded random combination
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : ts) m += coef(rng) * t;

  Eigen::ComplexEigenSolver<DenseOperator> es(m);
  if (es.info() != Eigen::Success)
    throw EvaluationError("eigenvalue_polynomials: eigensolver failed");
  const DenseOperator v = es.eigenvectors();
  Eigen::PartialPivLU<DenseOperator> vlu(v);

  EigenvaluePolynomials out;
  out.max_offdiag = 0.0;
  Eigen::MatrixXcd lam(dim, S);
  for (int s = 0; s < S; ++s) {
    DenseOperator d = vlu.solve(ts[s] * v);
    const double scale = std::max(1.0, ts[s].norm());
    DenseOperator off = d;
    off.diagonal().setZero();
    out.max_offdiag = std::max(out.max_offdiag, off.norm() / scale);
    lam.col(s) = d.diagonal();
  }

  // interpolate each state through all but the last sample, hold the last out
  const int nfit = S - 1;
  Eigen::MatrixXcd vand(nfit, L + 1);
  for (int s = 0; s < nfit; ++s) {
    cdouble xp = 1.0;
    for (int d = 0; d <= L; ++d, xp *= x_samples[s]) vand(s, d) = xp;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(vand);

  out.max_holdout = 0.0;
  out.coeffs.reserve(dim);
  for (long i = 0; i < dim; ++i) {
    Eigen::VectorXcd rhs(nfit);
    for (int s = 0; s < nfit; ++s) rhs(s) = lam(i, s);
    Eigen::VectorXcd c = qr.solve(rhs);
    std::vector<cdouble> coeffs(c.data(), c.data() + L + 1);
    const double scale = std::max(1.0, lam.row(i).cwiseAbs().maxCoeff());
    const double res =
        std::abs(eval_poly(coeffs, x_samples[S - 1]) - lam(i, S - 1)) / scale;
    out.max_holdout = std::max(out.max_holdout, res);
    out.coeffs.push_back(std::move(coeffs));
  }
  if (out.max_offdiag > 10 * tol || out.max_holdout > tol)
    throw EvaluationError(
        "eigenvalue_polynomials: eigenvalue curves are not degree-" +
        std::to_string(L) + " polynomials within tolerance (off-diagonal " +
        sci(out.max_offdiag) + ", held-out " + sci(out.max_holdout) +
        ")");
  return out;
}

}  // namespace sml::fk
