#include "sml/simdiag.hpp"

#include <Eigen/Eigenvalues>
#include <random>
#include <string>

#include "sml/errors.hpp"

namespace sml::weyl {

SimDiagResult simultaneous_eigenbasis(const std::vector<DenseOperator>& family,
                                      double tol, std::uint64_t seed) {
  if (family.empty()) throw ConfigError("simultaneous_eigenbasis: empty family");
  const long dim = family[0].rows();
  double scale = 1.0;
  for (const auto& a : family) {
    if (a.rows() != dim || a.cols() != dim)
      throw ConfigError("simultaneous_eigenbasis: dimension mismatch");
    scale = std::max(scale, a.norm());
  }

  SimDiagResult out;
  bool all_hermitian = true, all_normal = true;
  for (const auto& a : family) {
    const double nn = (a * a.adjoint() - a.adjoint() * a).norm() / (scale * scale);
    out.max_nonnormal = std::max(out.max_nonnormal, nn);
    if (nn > tol) all_normal = false;
    if ((a - a.adjoint()).norm() > tol * scale) all_hermitian = false;
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      const double c = commutator(family[i], family[j]).norm();
      if (c > tol * scale * scale)
        throw CommutationError("simultaneous_eigenbasis: operators " + std::to_string(i) +
                               " and " + std::to_string(j) +
                               " do not commute, ||[.,.]||_F = " + sci(c));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& a : family) m += coef(rng) * a;

  if (all_hermitian) {
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(0.5 * (m + m.adjoint().eval()));
    if (es.info() != Eigen::Success)
      throw EvaluationError("simultaneous_eigenbasis: self-adjoint solver failed");
    out.basis = es.eigenvectors();
    out.unitary = true;
  } else if (all_normal) {
    Eigen::ComplexSchur<DenseOperator> schur(m, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
      throw EvaluationError("simultaneous_eigenbasis: Schur decomposition failed");
    out.basis = schur.matrixU();
    out.unitary = true;
  } else {
    Eigen::ComplexEigenSolver<DenseOperator> es(m);
    if (es.info() != Eigen::Success)
      throw EvaluationError("simultaneous_eigenbasis: eigensolver failed");
    out.basis = es.eigenvectors();
    out.unitary = false;
  }

  Eigen::PartialPivLU<DenseOperator> blu(out.basis);
  out.eigenvalues.reserve(family.size());
  for (const auto& a : family) {
    DenseOperator d = out.unitary ? DenseOperator(out.basis.adjoint() * a * out.basis)
                                  : DenseOperator(blu.solve(a * out.basis));
    DenseOperator off = d;
    off.diagonal().setZero();
    out.max_offdiag = std::max(out.max_offdiag, off.norm() / scale);
    out.eigenvalues.push_back(d.diagonal());
  }
  if (out.max_offdiag > 10.0 * tol)
    throw EvaluationError(
        "simultaneous_eigenbasis: basis fails to diagonalize the family, residual " +
        sci(out.max_offdiag) +
        " (degenerate combination or non-diagonalizable member?)");
  return out;
}

}  // namespace sml::weyl
