#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "tensegrid/autodiff/linsolve.hpp"
#include "tensegrid/autodiff/tape.hpp"

namespace tensegrid {

thread_local Tape* Tape::active_ = nullptr;

namespace {

using Matrix21 = Eigen::Matrix<double, kElementDim, kElementDim, Eigen::RowMajor>;
using Vector21 = Eigen::Matrix<double, kElementDim, 1>;

SolveInfo factor_and_solve(const double* a, const double* b, double* x) {
  Eigen::Map<const Matrix21> A(a);
  Eigen::Map<const Vector21> rhs(b);
  Eigen::PartialPivLU<Matrix21> lu(A);

  const auto& u = lu.matrixLU();
  double umax = 0.0, umin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kElementDim; ++i) {
    const double d = std::abs(u(i, i));
    umax = std::max(umax, d);
    umin = std::min(umin, d);
  }
  SolveInfo info;
  info.condition = umin > 0.0 ? umax / umin : std::numeric_limits<double>::infinity();
  if (!(info.condition < 1e12)) {
    throw NumericalError("element solve: matrix near-singular, condition estimate " +
                         std::to_string(info.condition));
  }

  Eigen::Map<Vector21> sol(x);
  sol = lu.solve(rhs);
  info.residual_inf = (A * sol - rhs).lpNorm<Eigen::Infinity>();
  const double bound = 1e-9 * rhs.lpNorm<Eigen::Infinity>() + 1e-12;
  if (!(info.residual_inf <= bound)) {
    throw NumericalError("element solve: residual " + std::to_string(info.residual_inf) +
                         " exceeds bound " + std::to_string(bound));
  }
  return info;
}

}  // namespace

SolveInfo solve21(const std::array<double, kElementDim * kElementDim>& a,
                  const std::array<double, kElementDim>& b,
                  std::array<double, kElementDim>& x) {
  return factor_and_solve(a.data(), b.data(), x.data());
}

SolveInfo solve21(const std::array<Var, kElementDim * kElementDim>& a,
                  const std::array<Var, kElementDim>& b,
                  std::array<Var, kElementDim>& x) {
  std::array<double, kElementDim * kElementDim> av;
  std::array<double, kElementDim> bv, xv;
  bool any_tracked = false;
  for (int i = 0; i < kElementDim * kElementDim; ++i) {
    av[i] = a[i].val;
    any_tracked |= a[i].tracked();
  }
  for (int i = 0; i < kElementDim; ++i) {
    bv[i] = b[i].val;
    any_tracked |= b[i].tracked();
  }

  const SolveInfo info = factor_and_solve(av.data(), bv.data(), xv.data());

  Tape* tape = Tape::active();
  if (!tape || !any_tracked) {
    for (int i = 0; i < kElementDim; ++i) x[i] = Var(xv[i]);
    return info;
  }

  Tape::SolveRecord rec;
  rec.a_dense.assign(av.begin(), av.end());
  for (int i = 0; i < kElementDim * kElementDim; ++i) {
    if (a[i].tracked()) rec.a_ids.emplace_back(static_cast<int16_t>(i), a[i].id);
  }
  rec.b_ids.resize(kElementDim);
  for (int i = 0; i < kElementDim; ++i) rec.b_ids[i] = b[i].id;
  rec.x.assign(xv.begin(), xv.end());

  tape->solves().push_back(std::move(rec));
  const int32_t record = static_cast<int32_t>(tape->solves().size()) - 1;
  for (int i = 0; i < kElementDim; ++i) {
    x[i] = Var(xv[i], tape->push_solve_output(record, i));
  }
  return info;
}

Gradients backward(const Var& output, const Tape& tape) {
  std::vector<double> adj(tape.size(), 0.0);
  if (!output.tracked()) return Gradients(std::move(adj));
  adj[output.id] = 1.0;

  // Scratch adjoints for solve outputs, keyed by record. The 21 outputs of a
  // record are created together, so by the time the sweep reaches the first
  // (lowest-id) one, all 21 adjoints are in place and the transposed solve
  // can run.
  std::vector<std::array<double, kElementDim>> xbar(tape.solves().size(),
                                                    std::array<double, kElementDim>{});

  for (size_t idx = tape.size(); idx-- > 0;) {
    const Tape::Node& n = tape.node(idx);
    const double g = adj[idx];
    if (n.a == Tape::kSolveSentinel) {
      const int record = n.b / Tape::kSolveDim;
      const int comp = n.b % Tape::kSolveDim;
      xbar[record][comp] = g;
      if (comp == 0) {
        bool all_zero = true;
        for (double v : xbar[record]) all_zero &= (v == 0.0);
        if (all_zero) continue;
        const Tape::SolveRecord& rec = tape.solves()[record];
        Eigen::Map<const Matrix21> A(rec.a_dense.data());
        Eigen::Map<const Vector21> xb(xbar[record].data());
        Eigen::PartialPivLU<Matrix21> lut(A.transpose().eval());
        Vector21 lambda = lut.solve(xb);
        for (int i = 0; i < kElementDim; ++i) {
          if (rec.b_ids[i] >= 0) adj[rec.b_ids[i]] += lambda[i];
        }
        for (const auto& [flat, id] : rec.a_ids) {
          const int r = flat / kElementDim, c = flat % kElementDim;
          adj[id] -= lambda[r] * rec.x[c];
        }
      }
      continue;
    }
    if (g == 0.0) continue;
    if (!std::isfinite(g)) {
      throw NumericalError("backward: non-finite adjoint at node " +
                           std::to_string(idx));
    }
    if (n.a >= 0) adj[n.a] += n.ga * g;
    if (n.b >= 0) adj[n.b] += n.gb * g;
  }
  return Gradients(std::move(adj));
}

void clip_gradients(std::vector<double>& grads, double max_norm) {
  double sq = 0.0;
  for (double g : grads) sq += g * g;
  const double norm = std::sqrt(sq);
  if (norm > max_norm && norm > 0.0) {
    const double scale = max_norm / norm;
    for (double& g : grads) g *= scale;
  }
}

}  // namespace tensegrid
