#pragma once

#include <array>
#include <vector>

#include "sml/dense.hpp"

namespace sml::chiralpotts {

// Real temperature-like parameters with k^2 + k'^2 = 1.
struct Coupling {
  double k;
  double kprime;

  Coupling(double k_, double kprime_);
  static Coupling from_kprime(double kprime_);  // k = +sqrt(1 - k'^2)
};

// Branch selections for the four N-th roots taken when building a point.
// Branch 0 is the principal root.
struct RootBranches {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

// Projective four-vector (a:b:c:d) at fixed N, normalized so the
// largest-modulus component has modulus 1.
struct RapidityPoint {
  int N;
  cdouble a, b, c, d;
  Coupling coupling;

  RapidityPoint(int N_, cdouble a_, cdouble b_, cdouble c_, cdouble d_, Coupling cpl);
  void normalize();  // divide by the max-modulus component
};

// Residuals of the four defining equations, in terms of A = a^N etc.:
//   kA + k'C - D,  kB + k'D - C,  A + k'B - kD,  k'A + B - kC
std::array<cdouble, 4> curve_residual(const RapidityPoint& p);

// Constructive sampler: B = b^N and D = d^N are free, A = kD - k'B and
// C = kB + k'D close all four equations; roots taken on the requested branches.
RapidityPoint sample_rapidity(int N, const Coupling& cpl, cdouble B, cdouble D,
                              const RootBranches& branches = {});

// The vertical rapidity with a = b, c = d (D = 1, A = B = k/(1+k'), C = 1).
RapidityPoint superintegrable_point(int N, const Coupling& cpl, int branch_ab = 0,
                                    int branch_cd = 0);

// Row weights W(n), Wbar(n), n in Z_N, normalized to W(0) = Wbar(0) = 1.
struct WeightTable {
  int N;
  std::vector<cdouble> W;
  std::vector<cdouble> Wbar;

  cdouble w(long n) const;     // N-periodic lookup
  cdouble wbar(long n) const;
};

WeightTable weights(const RapidityPoint& p, const RapidityPoint& q);

// Factors by which extending each product one full period multiplies the
// weights; both are 1 exactly when (p, q) lie on the curve.
std::array<cdouble, 2> full_period_factors(const RapidityPoint& p, const RapidityPoint& q);

// T_{s,s'} = prod_l Wbar(s_l - s'_l) W(s_l - s'_{l+1}), periodic s'_{L+1} = s'_1.
DenseOperator transfer_matrix(const RapidityPoint& p, const RapidityPoint& q, int L);

struct HyperellipticCoords {
  cdouble t;        // ab/(cd)
  cdouble lambda;   // (d/c)^N
  cdouble residual; // t^N - (1 - k'lambda)(1 - k'/lambda)/k^2
};

HyperellipticCoords hyperelliptic_coords(const RapidityPoint& p);

// The curve automorphism (a,b,c,d) -> (b, omega a, d, c).
RapidityPoint apply_R(const RapidityPoint& p);

// (1 - k'^2)^{j(N-j)/(2N^2)}
double order_parameter_conjecture(int N, int j, double kprime);

}  // namespace sml::chiralpotts
