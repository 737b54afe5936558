// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_EIGEN_SOLVER_HPP
#define CHEBTRACE_EIGEN_SOLVER_HPP

#include <vector>

#include "chebtrace/matrix.hpp"

namespace chebtrace {

struct SymmetricEigen {
  std::vector<double> values;  // descending
  RealMatrix vectors;          // column k pairs with values[k]; empty if not requested
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// tol * max(1, ||M||_F). Throws Error{NoConvergence} after max_sweeps.
SymmetricEigen eigen_symmetric(const DenseSymmetricMatrix& m, double tol = 1e-12,
                               bool want_vectors = true, int max_sweeps = 100);

/// Eigenvalues only, descending.
std::vector<double> eigenvalues_symmetric(const DenseSymmetricMatrix& m, double tol = 1e-12);

}  // namespace chebtrace

#endif  // CHEBTRACE_EIGEN_SOLVER_HPP
