#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace sml {

using cdouble = std::complex<double>;

// Universal carrier for lattice operators: a square complex matrix on C^N
// or on the chain space (C^N)^{tensor L}.
using DenseOperator = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Hard cap on dense dimensions; everything in this project is desk scale.
inline constexpr long kMaxDenseDim = 2048;

inline DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

inline double fro(const DenseOperator& a) { return a.norm(); }

// Kronecker product, first factor most significant (row-major index composition).
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

// ||[a,b]||_F / (||a||_F ||b||_F), 0 if either factor vanishes.
double relative_commutator(const DenseOperator& a, const DenseOperator& b);

}  // namespace sml
