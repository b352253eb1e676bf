#pragma once

#include <array>

#include "tensegrid/autodiff/tape.hpp"

namespace tensegrid {

constexpr int kElementDim = 21;

struct SolveInfo {
  double residual_inf = 0.0;   // ||A x - b||_inf
  double condition = 0.0;      // cheap estimate: max|U_ii| / min|U_ii|
};

/// Dense LU solve of the 21x21 element system, value path.
/// Throws NumericalError if the condition estimate exceeds 1e12 or the
/// residual fails ||Ax-b||_inf <= 1e-9 ||b||_inf (plus a small absolute
/// floor for near-zero right-hand sides).
SolveInfo solve21(const std::array<double, kElementDim * kElementDim>& a,
                  const std::array<double, kElementDim>& b,
                  std::array<double, kElementDim>& x);

/// Taped solve. The factorization runs on values; x is recorded as one
/// opaque tape record. The backward pass uses the adjoint identity: with
/// output adjoints xbar, solve A^T lambda = xbar, then
///   dL/db_i += lambda_i,   dL/dA_ij -= lambda_i * x_j
/// rather than differentiating the elimination itself.
SolveInfo solve21(const std::array<Var, kElementDim * kElementDim>& a,
                  const std::array<Var, kElementDim>& b,
                  std::array<Var, kElementDim>& x);

}  // namespace tensegrid
