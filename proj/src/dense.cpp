#include "sml/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace sml {

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

double relative_commutator(const DenseOperator& a, const DenseOperator& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return commutator(a, b).norm() / (na * nb);
}

}  // namespace sml
