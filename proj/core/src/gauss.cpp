#include "dlab/gauss.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "dlab/errors.hpp"

namespace dlab::quadrature {

Rule gauss_jacobi_unit(int n, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi_unit: need at least one node");
  if (!(beta > -1.0)) throw DomainError("gauss_jacobi_unit: beta must be > -1");

  // Jacobi weight (1-x)^a (1+x)^b on [-1, 1] with a = 0, b = beta; x = 2u - 1.
  const double a = 0.0;
  const double b = beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double beta_k = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta_k);
  }

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.5 * (diag(0) + 1.0);
    rule.weights[0] = 1.0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw DomainError("gauss_jacobi_unit: eigen solver failed");
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    rule.nodes[k] = 0.5 * (solver.eigenvalues()(k) + 1.0);
    rule.weights[k] = v0 * v0;
    total += rule.weights[k];
  }
  for (double& w : rule.weights) w /= total;
  return rule;
}

}  // namespace dlab::quadrature
