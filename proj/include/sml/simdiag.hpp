#pragma once

#include <cstdint>
#include <vector>

#include "sml/dense.hpp"

namespace sml::weyl {

struct SimDiagResult {
  DenseOperator basis;                    // columns are the joint eigenvectors
  std::vector<CVector> eigenvalues;       // one list per input operator, basis order
  double max_offdiag = 0.0;               // worst relative off-diagonal residual
  double max_nonnormal = 0.0;             // worst relative normality defect seen
  bool unitary = false;                   // basis produced by a Hermitian/Schur path
};

// Simultaneously diagonalizes a commuting family. Degeneracies are resolved by
// diagonalizing one random real-coefficient combination of the family (seeded).
//
// Path selection: all members Hermitian -> self-adjoint solve (unitary basis);
// all members normal -> Schur of the combination (unitary basis); otherwise a
// general eigensolve, which accepts the non-normal commuting families produced
// by transfer matrices at complex parameters (basis then non-unitary).
//
// Throws CommutationError naming the offending pair when the family does not
// commute within tol * scale, and EvaluationError when the returned basis fails
// to diagonalize some member to 10 * tol * scale.
SimDiagResult simultaneous_eigenbasis(const std::vector<DenseOperator>& family,
                                      double tol = 1e-9, std::uint64_t seed = 0);

}  // namespace sml::weyl
