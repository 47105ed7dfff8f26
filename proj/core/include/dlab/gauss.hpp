#pragma once

#include <vector>

namespace dlab::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule on [0, 1] for the weight u^{beta} (beta > -1), from the
/// Golub-Welsch eigenproblem of the shifted Jacobi recurrence. Weights are
/// normalised to sum to 1, i.e. the rule integrates against the probability
/// density (beta + 1) u^{beta}. beta = 0 gives Gauss-Legendre on [0, 1].
Rule gauss_jacobi_unit(int n, double beta);

inline Rule gauss_legendre_unit(int n) { return gauss_jacobi_unit(n, 0.0); }

}  // namespace dlab::quadrature
