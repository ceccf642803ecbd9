#pragma once

#include <array>
#include <string>
#include <vector>

#include "sml/dense.hpp"
#include "sml/rational.hpp"

namespace sml::orbifold {

// Finite group of d x d complex matrices, compared by rounded-entry hashing.
struct FiniteMatrixGroup {
  int degree;
  std::vector<DenseOperator> elements;

  long order() const { return static_cast<long>(elements.size()); }
};

// Closure of a generating set under multiplication; verifies the identity is
// present and, when sl_flag is set, that every determinant is 1.
FiniteMatrixGroup group_from_generators(const std::vector<DenseOperator>& gens,
                                        bool sl_flag = false, long max_order = 100000);

// Verifies closure of the element list itself (product of any two elements is
// again in the list, within the rounding tolerance).
bool is_closed(const FiniteMatrixGroup& g);

// The quaternion group {±1, ±i, ±j, ±k} inside SL_2(C).
FiniteMatrixGroup quaternion_group();

// Diagonal g in SL_n with g^{r+1} = 1, stored as exponent vectors in
// (Z_{r+1})^n with coordinate sum = 0 mod r+1.
struct AbelianDiagonalGroup {
  int n;
  int r;
  std::vector<std::vector<int>> elements;

  long order() const { return static_cast<long>(elements.size()); }
  DenseOperator realize(const std::vector<int>& exponents) const;
};

AbelianDiagonalGroup build_Ar(int n, int r, long max_order = 200000);

// (1/|G|) #{(g,h) : gh = hg}; every simultaneous fixed set of a commuting
// pair acting linearly on C^n is a linear subspace with Euler characteristic
// 1, so the pair count is the whole orbifold Euler characteristic here.
Rational orbifold_euler_linear(const FiniteMatrixGroup& g);
Rational orbifold_euler_linear(const AbelianDiagonalGroup& g);

struct GroupCounts {
  long conjugacy_classes;
  long irreducible_representations;  // equals the class count (character theory)
};

GroupCounts class_and_rep_counts(const FiniteMatrixGroup& g);
GroupCounts class_and_rep_counts(const AbelianDiagonalGroup& g);

// With x = prod z_j and y_j = z_j^{r+1}: returns x^{r+1} - prod y_j (zero in
// exact arithmetic) and the worst change of (x, y_j) under a sampled group
// element.
struct HypersurfaceCheck {
  cdouble residual;
  double invariance_defect;
};

HypersurfaceCheck hypersurface_check(int n, int r, const std::vector<cdouble>& z);

// r(r+1)(r+2)/6
long exceptional_divisor_count(int r);

}  // namespace sml::orbifold
