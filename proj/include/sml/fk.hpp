#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sml/dense.hpp"

namespace sml::fk {

// U = alpha Z, V = beta X, W = gamma (ZX)^{-1}; pairwise UV = w VU etc.
struct WeylTriple {
  int N;
  DenseOperator U, V, W;
};

// Relation residuals are checked at construction; tol guards against misuse.
WeylTriple build_weyl_triple(int N, cdouble alpha = 1.0, cdouble beta = 1.0,
                             cdouble gamma = 1.0, double tol = 1e-12);

struct FKParams {
  double mu = 0.0, nu = 0.0, rho = 0.0;
  cdouble alpha = 1.0, beta = 1.0, gamma = 1.0;
  int P = 1;  // flux P/N fixes omega = exp(2 pi i P / N)
  int N = 2;
};

// mu (U + U^{-1}) + nu (V + V^{-1}) + rho (W + W^{-1})
DenseOperator build_HFK(const FKParams& params);

// Site parameter: projective four-vector, no curve constraint.
struct SiteParam {
  cdouble a, b, c, d;
};

struct InhomogeneitySet {
  int N;
  std::vector<SiteParam> sites;  // site j = 0 .. L-1

  int L() const { return static_cast<int>(sites.size()); }
};

// 2x2 auxiliary block matrix of operators on C^N:
//   [[ a Z X,  x b X ],
//    [ x c Z,  d I  ]]
struct LOperator {
  std::array<std::array<DenseOperator, 2>, 2> block;
};

LOperator build_L(const SiteParam& h, cdouble x, int N);

// Trace over the auxiliary space of the ordered product of site L-operators
// (site 0 first); quantum spaces combine by tensor product, site 0 leftmost.
DenseOperator transfer(const InhomogeneitySet& hs, cdouble x);

// || tr prod_j M_j L_j(x) M_{j+1}^{-1} - transfer(hs, x) ||_F with the gauge
// matrices M_j = [[1, xi_j - 1], [1, xi_j]], xi_L = xi_0.
double gauge_transfer_check(const InhomogeneitySet& hs, cdouble x,
                            const std::vector<cdouble>& xi);

// A point of the spectral curve in (x, xi_0, ..., xi_{L-1}) space.
struct CurvePoint {
  cdouble x;
  std::vector<cdouble> xi;
};

// residual_j = xi_j^N - (-1)^N (xi_{j+1}^N a_j^N - x^N b_j^N) /
//                              (xi_{j+1}^N x^N c_j^N - d_j^N), indices mod L
std::vector<cdouble> curve_residual(const CurvePoint& p, const InhomogeneitySet& hs);

// Forward solve: fix x and xi_0, then the L-1 remaining relations determine
// xi_1 .. xi_{L-1} up to root branches; the wrap-around relation is reported
// as the closure residual. Only closure-consistent points lie on the curve.
struct SampledPoint {
  CurvePoint point;
  cdouble closure_residual;
};

SampledPoint sample_curve_point(const InhomogeneitySet& hs, cdouble x, cdouble xi0,
                                const std::vector<int>& branches = {});

// The two xi_0^N values for which the forward solve closes: fixed points of
// the composed Moebius map in the u = xi^N variable.
std::array<cdouble, 2> closure_xi0_pow(const InhomogeneitySet& hs, cdouble x);

// tau_pm: (x, xi_j) -> (q^{pm 1} x, q^{-1} xi_j), q = exp(pi i / N).
CurvePoint tau_plus(const CurvePoint& p, int N);
CurvePoint tau_minus(const CurvePoint& p, int N);

// Delta_- = prod_j (d_j - x xi_{j+1} c_j)
// Delta_+ = prod_j xi_j (a_j d_j - x^2 b_j c_j) / (xi_{j+1} a_j - x b_j)
cdouble delta_minus(const CurvePoint& p, const InhomogeneitySet& hs);
cdouble delta_plus(const CurvePoint& p, const InhomogeneitySet& hs);

// Candidate solution of the Bethe equation: an eigenvalue polynomial and a
// function Q on the curve (table or callable).
struct BetheCandidate {
  std::vector<cdouble> lambda;  // coefficients, lambda[i] multiplies x^i
  std::function<cdouble(const CurvePoint&)> Q;
};

cdouble eval_poly(const std::vector<cdouble>& coeffs, cdouble x);

// Lambda(x) Q(p) - Q(tau_- p) Delta_-(p) - Q(tau_+ p) Delta_+(p)
cdouble bethe_residual(const BetheCandidate& cand, const CurvePoint& p,
                       const InhomogeneitySet& hs);

struct EigenvaluePolynomials {
  std::vector<std::vector<cdouble>> coeffs;  // one degree-<=L polynomial per state
  double max_offdiag;                        // joint-basis off-diagonal residual
  double max_holdout;                        // worst held-out interpolation residual
};

// Joint eigenbasis from a seeded random combination of the sampled transfer
// matrices; eigenvalue curves interpolated by degree-<=L polynomials with the
// last sample held out.
EigenvaluePolynomials eigenvalue_polynomials(const InhomogeneitySet& hs,
                                             const std::vector<cdouble>& x_samples,
                                             double tol = 1e-8,
                                             std::uint64_t seed = 0);

}  // namespace sml::fk
