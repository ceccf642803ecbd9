#pragma once

#include <map>
#include <vector>

#include "sml/dense.hpp"
#include "sml/weyl.hpp"

namespace sml::onsager {

// H(k') = H0 + k' H1 on the N-state chain of length L, periodic boundary.
//   H0 = -2 sum_l sum_{n=1}^{N-1} X_l^n / (1 - omega^{-n})
//   H1 = -2 sum_l sum_{n=1}^{N-1} Z_l^n Z_{l+1}^{N-n} / (1 - omega^{-n})
DenseOperator build_H0(const weyl::LatticeConfig& cfg);
DenseOperator build_H1(const weyl::LatticeConfig& cfg);
DenseOperator build_H(const weyl::LatticeConfig& cfg, double kprime);

// A0 = -(2/N) H0, A1 = -(2/N) H1
std::pair<DenseOperator, DenseOperator> seed_A(const DenseOperator& h0,
                                               const DenseOperator& h1, int N);

// (||[A1,[A1,[A1,A0]]] - 16[A1,A0]||_F, same with the roles swapped)
std::pair<double, double> dolan_grady_residual(const DenseOperator& a0,
                                               const DenseOperator& a1);

// Windowed operator families A_m (|m| <= M) and G_m (1 <= m <= M),
// generated from the seeds by
//   G_1 = (1/4)[A_1, A_0],   A_{m+1} = A_{m-1} - (1/2)[A_m, G_1],
//   G_m = (1/4)[A_m, A_0],
// with the conventions G_0 = 0 and G_{-m} = -G_m.
struct OnsagerFamily {
  int window;
  std::map<int, DenseOperator> A;  // m in [-M, M]
  std::map<int, DenseOperator> G;  // m in [1, M]

  DenseOperator g(int m) const;  // applies the sign conventions
};

OnsagerFamily onsager_extend(const DenseOperator& a0, const DenseOperator& a1, int window,
                             double dg_warn_tol = 1e-6);

struct RelationReport {
  double max_residual = 0.0;  // absolute Frobenius residual, worst relation
  double scale = 0.0;         // max ||A_m||_F over the window
  long checked = 0;
  long skipped = 0;  // relations referencing operators outside the window
};

// Checks [A_m,A_l] = 4 G_{m-l}, [A_m,G_l] = 2(A_{m-l} - A_{m+l}), [G_m,G_l] = 0
// for all index pairs inside the window.
RelationReport onsager_relation_residuals(const OnsagerFamily& fam);

// Sorted real eigenvalues of a Hermitian operator.
std::vector<double> spectrum(const DenseOperator& h, double tol = 1e-9);

}  // namespace sml::onsager
