#pragma once

#include "sml/dense.hpp"

namespace sml::weyl {

// N states per site, chain of L sites, omega = exp(2 pi i / N).
//
// Tensor convention used by the whole project: site 1 is the leftmost
// (most significant) factor, so a basis state |s_1 ... s_L> has the
// composite index  i = sum_l s_l N^{L-l}.
struct LatticeConfig {
  int N;
  int L;
  cdouble omega;

  LatticeConfig(int n_states, int length);
  long dim() const;  // N^L
};

// exp(2 pi i m / N); exact at the four cardinal points so small-N operators
// carry no rounding dust
cdouble root_of_unity(int N, long m);

cdouble primitive_root(int N);

// X|m> = |m+1 mod N>
DenseOperator shift(int N);

// Z|m> = omega^m |m>
DenseOperator clock(int N);

// I x ... x op x ... x I with op at tensor factor `site` (1-based).
DenseOperator site_embed(const DenseOperator& op, int site, const LatticeConfig& cfg);

// shift at site l of the chain
DenseOperator shift_at(int site, const LatticeConfig& cfg);
DenseOperator clock_at(int site, const LatticeConfig& cfg);

// product of X_l over all sites (the Z_N spin-shift symmetry)
DenseOperator spin_shift(const LatticeConfig& cfg);

}  // namespace sml::weyl
