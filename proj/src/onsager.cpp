#include "sml/onsager.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "sml/errors.hpp"

namespace sml::onsager {

namespace {

DenseOperator chain_sum(const weyl::LatticeConfig& cfg, const DenseOperator& local) {
  // local acts on one site; sum the embedding over all sites
  DenseOperator out = DenseOperator::Zero(cfg.dim(), cfg.dim());
  for (int l = 1; l <= cfg.L; ++l) out += weyl::site_embed(local, l, cfg);
  return out;
}

}  // namespace

DenseOperator build_H0(const weyl::LatticeConfig& cfg) {
  const DenseOperator x = weyl::shift(cfg.N);
  DenseOperator local = DenseOperator::Zero(cfg.N, cfg.N);
  DenseOperator xn = DenseOperator::Identity(cfg.N, cfg.N);
  for (int n = 1; n <= cfg.N - 1; ++n) {
    xn = xn * x;
    local += xn / (1.0 - weyl::root_of_unity(cfg.N, -n));
  }
  return -2.0 * chain_sum(cfg, local);
}

DenseOperator build_H1(const weyl::LatticeConfig& cfg) {
  const DenseOperator z = weyl::clock(cfg.N);
  const long dim = cfg.dim();
  DenseOperator h = DenseOperator::Zero(dim, dim);
  std::vector<DenseOperator> zpow(cfg.N);  // z^0 .. z^{N-1}
  zpow[0] = DenseOperator::Identity(cfg.N, cfg.N);
  for (int n = 1; n < cfg.N; ++n) zpow[n] = zpow[n - 1] * z;

  for (int l = 1; l <= cfg.L; ++l) {
    const int lnext = (l % cfg.L) + 1;  // Z_{L+1} = Z_1
    for (int n = 1; n <= cfg.N - 1; ++n) {
      DenseOperator term = weyl::site_embed(zpow[n], l, cfg);
      if (lnext == l) {
        // L = 1: both factors act on the same site
        term = term * weyl::site_embed(zpow[(cfg.N - n) % cfg.N], l, cfg);
      } else {
        term = term * weyl::site_embed(zpow[(cfg.N - n) % cfg.N], lnext, cfg);
      }
      h += term / (1.0 - weyl::root_of_unity(cfg.N, -n));
    }
  }
  return -2.0 * h;
}

DenseOperator build_H(const weyl::LatticeConfig& cfg, double kprime) {
  return build_H0(cfg) + kprime * build_H1(cfg);
}

std::pair<DenseOperator, DenseOperator> seed_A(const DenseOperator& h0,
                                               const DenseOperator& h1, int N) {
  return {(-2.0 / N) * h0, (-2.0 / N) * h1};
}

std::pair<double, double> dolan_grady_residual(const DenseOperator& a0,
                                               const DenseOperator& a1) {
  if (a0.rows() != a1.rows() || a0.cols() != a1.cols())
    throw ConfigError("dolan_grady_residual: dimension mismatch");
  const DenseOperator c10 = commutator(a1, a0);
  const double r1 = (commutator(a1, commutator(a1, c10)) - 16.0 * c10).norm();
  const DenseOperator c01 = commutator(a0, a1);
  const double r0 = (commutator(a0, commutator(a0, c01)) - 16.0 * c01).norm();
  return {r1, r0};
}

DenseOperator OnsagerFamily::g(int m) const {
  if (m == 0) return DenseOperator::Zero(A.at(0).rows(), A.at(0).cols());
  if (m > 0) return G.at(m);
  return -G.at(-m);
}

OnsagerFamily onsager_extend(const DenseOperator& a0, const DenseOperator& a1, int window,
                             double dg_warn_tol) {
  if (window < 1) throw ConfigError("onsager_extend: window must be >= 1");
  const auto [r1, r0] = dolan_grady_residual(a0, a1);
  const double scale = std::max(1.0, a0.norm() * a1.norm() * a1.norm());
  if (r1 > dg_warn_tol * scale || r0 > dg_warn_tol * scale)
    std::cerr << "onsager_extend: warning, Dolan-Grady residuals " << r1 << ", " << r0
              << " exceed " << dg_warn_tol * scale << "; the family will not close\n";

  OnsagerFamily fam;
  fam.window = window;
  fam.A[0] = a0;
  fam.A[1] = a1;
  const DenseOperator g1 = 0.25 * commutator(a1, a0);

  // forward: A_{m+1} = A_{m-1} - (1/2)[A_m, G_1]
  for (int m = 1; m < window; ++m)
    fam.A[m + 1] = fam.A[m - 1] - 0.5 * commutator(fam.A[m], g1);
  // backward: A_{m-1} = A_{m+1} + (1/2)[A_m, G_1]
  for (int m = 0; m > -window; --m)
    fam.A[m - 1] = fam.A[m + 1] + 0.5 * commutator(fam.A[m], g1);

  for (int m = 1; m <= window; ++m) fam.G[m] = 0.25 * commutator(fam.A[m], a0);
  return fam;
}

RelationReport onsager_relation_residuals(const OnsagerFamily& fam) {
  const int M = fam.window;
  RelationReport rep;
  for (const auto& [m, am] : fam.A) rep.scale = std::max(rep.scale, am.norm());

  auto have_A = [&](int m) { return m >= -M && m <= M; };
  auto have_G = [&](int m) { return m >= -M && m <= M; };  // via G_0 = 0, G_{-m} = -G_m

  for (int m = -M; m <= M; ++m) {
    for (int l = -M; l <= M; ++l) {
      // [A_m, A_l] = 4 G_{m-l}
      if (have_G(m - l)) {
        const double r =
            (commutator(fam.A.at(m), fam.A.at(l)) - 4.0 * fam.g(m - l)).norm();
        rep.max_residual = std::max(rep.max_residual, r);
        ++rep.checked;
      } else {
        ++rep.skipped;
      }
      // [A_m, G_l] = 2 (A_{m-l} - A_{m+l}),  l >= 1 stored, extended by sign
      if (l != 0) {
        if (have_A(m - l) && have_A(m + l)) {
          const double r = (commutator(fam.A.at(m), fam.g(l)) -
                            2.0 * (fam.A.at(m - l) - fam.A.at(m + l)))
                               .norm();
          rep.max_residual = std::max(rep.max_residual, r);
          ++rep.checked;
        } else {
          ++rep.skipped;
        }
      }
    }
  }
  // [G_m, G_l] = 0
  for (int m = 1; m <= M; ++m) {
    for (int l = 1; l <= M; ++l) {
      const double r = commutator(fam.G.at(m), fam.G.at(l)).norm();
      rep.max_residual = std::max(rep.max_residual, r);
      ++rep.checked;
    }
  }
  return rep;
}

std::vector<double> spectrum(const DenseOperator& h, double tol) {
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > tol * scale)
    throw DomainError("spectrum: operator is not Hermitian within tolerance");
  // symmetrize to kill roundoff, then use the self-adjoint solver
  const DenseOperator hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(hs);
  if (es.info() != Eigen::Success)
    throw EvaluationError("spectrum: eigensolver failed to converge");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + hs.rows());
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace sml::onsager
