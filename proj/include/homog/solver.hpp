#pragma once

#include "homog/assembly.hpp"
#include "homog/errors.hpp"

#include <vector>

namespace homog {

struct SolverOptions {
  double tol = 1e-6;   // relative residual target per column
  int maxiter = 5000;
  int threads = 0;     // >0 pins the OpenMP thread count
};

struct SolveResult {
  RowMatrixXd u;                   // total_dofs x n_cases, zero off the active set
  std::vector<double> residuals;   // verified true relative residual per column
  std::vector<int> iterations;     // iterations spent per column
};

// Jacobi-preconditioned conjugate gradients on the active submatrix, all
// columns advanced in lockstep through a shared multiply. Column arithmetic
// is kept strictly per column, so results match a one-column solve bit for
// bit and are independent of column order and thread count. Convergence is
// confirmed against the true residual K u - f before returning; a zero column
// returns zero in zero iterations.
SolveResult solve_multi_rhs(const GlobalSystem& system, const SolverOptions& opts = {});

}  // namespace homog
