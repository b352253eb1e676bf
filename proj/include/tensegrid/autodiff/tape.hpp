#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "tensegrid/error.hpp"

namespace tensegrid {

class Tape;
class Gradients;

/// Scalar tracked by the reverse-mode tape. A Var with id < 0 is a constant
/// (or a detached value): it participates in arithmetic but contributes
/// nothing to any gradient.
struct Var {
  double val = 0.0;
  int32_t id = -1;

  Var() = default;
  Var(double v) : val(v) {}  // NOLINT: implicit by design, constants are free
  Var(double v, int32_t node) : val(v), id(node) {}

  double value() const { return val; }
  bool tracked() const { return id >= 0; }
};

inline double value_of(const Var& v) { return v.val; }

/// Same value, no gradient path. Idempotent.
inline Var detach(const Var& v) { return Var(v.val); }

/// Append-only record of scalar operations (a Wengert list). Each node has
/// at most two parents with precomputed local partials; 21x21 linear solves
/// are recorded as one opaque record whose adjoint is handled by a transposed
/// solve (see solve21 in linsolve.hpp).
///
/// One tape per rollout, confined to one thread. The active tape is a
/// thread-local set via TapeScope; arithmetic on tracked Vars with no active
/// tape is a logic error.
class Tape {
 public:
  static constexpr int32_t kSolveSentinel = INT32_MIN;
  static constexpr int kSolveDim = 21;

  struct Node {
    int32_t a = -1;
    int32_t b = -1;
    double ga = 0.0;
    double gb = 0.0;
  };

  /// One recorded 21x21 solve: dense A (for the transposed factorization in
  /// the backward pass), the solution x, ids of the non-constant entries.
  struct SolveRecord {
    std::vector<double> a_dense;              // 441, row-major
    std::vector<std::pair<int16_t, int32_t>> a_ids;  // (flat index, node id)
    std::vector<int32_t> b_ids;               // 21, -1 for constants
    std::vector<double> x;                    // 21
  };

  Tape() {
    nodes_.reserve(1 << 16);
  }

  Var leaf(double value) {
    nodes_.push_back(Node{});
    return Var(value, static_cast<int32_t>(nodes_.size()) - 1);
  }

  int32_t push1(int32_t a, double ga) {
    nodes_.push_back(Node{a, -1, ga, 0.0});
    return static_cast<int32_t>(nodes_.size()) - 1;
  }

  int32_t push2(int32_t a, int32_t b, double ga, double gb) {
    nodes_.push_back(Node{a, b, ga, gb});
    return static_cast<int32_t>(nodes_.size()) - 1;
  }

  int32_t push_solve_output(int32_t record, int component) {
    nodes_.push_back(Node{kSolveSentinel,
                          static_cast<int32_t>(record * kSolveDim + component),
                          0.0, 0.0});
    return static_cast<int32_t>(nodes_.size()) - 1;
  }

  std::vector<SolveRecord>& solves() { return solves_; }
  const std::vector<SolveRecord>& solves() const { return solves_; }

  size_t size() const { return nodes_.size(); }
  const Node& node(size_t i) const { return nodes_[i]; }

  /// Checkpoint support: mark the current length, run a segment, then
  /// truncate back and recompute from the stored state. Keeps memory for
  /// long rollouts bounded.
  struct Mark {
    size_t nodes;
    size_t solves;
  };
  Mark mark() const { return {nodes_.size(), solves_.size()}; }
  void truncate(Mark m) {
    nodes_.resize(m.nodes);
    solves_.resize(m.solves);
  }

  void clear() {
    nodes_.clear();
    solves_.clear();
  }

  static Tape* active() { return active_; }
  static void set_active(Tape* t) { active_ = t; }

 private:
  std::vector<Node> nodes_;
  std::vector<SolveRecord> solves_;
  static thread_local Tape* active_;
};

struct TapeScope {
  explicit TapeScope(Tape& t) : prev_(Tape::active()) { Tape::set_active(&t); }
  ~TapeScope() { Tape::set_active(prev_); }
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;

 private:
  Tape* prev_;
};

namespace detail {
inline Tape& require_tape() {
  Tape* t = Tape::active();
  if (!t) throw Error("autodiff: tracked operation with no active tape");
  return *t;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic. Operations between two constants stay constant (no node).
// ---------------------------------------------------------------------------

inline Var operator+(const Var& a, const Var& b) {
  const double v = a.val + b.val;
  if (!a.tracked() && !b.tracked()) return Var(v);
  return Var(v, detail::require_tape().push2(a.id, b.id, 1.0, 1.0));
}

inline Var operator-(const Var& a, const Var& b) {
  const double v = a.val - b.val;
  if (!a.tracked() && !b.tracked()) return Var(v);
  return Var(v, detail::require_tape().push2(a.id, b.id, 1.0, -1.0));
}

inline Var operator*(const Var& a, const Var& b) {
  const double v = a.val * b.val;
  if (!a.tracked() && !b.tracked()) return Var(v);
  return Var(v, detail::require_tape().push2(a.id, b.id, b.val, a.val));
}

inline Var operator/(const Var& a, const Var& b) {
  const double v = a.val / b.val;
  if (!a.tracked() && !b.tracked()) return Var(v);
  return Var(v, detail::require_tape().push2(a.id, b.id, 1.0 / b.val,
                                             -v / b.val));
}

inline Var operator-(const Var& a) {
  if (!a.tracked()) return Var(-a.val);
  return Var(-a.val, detail::require_tape().push1(a.id, -1.0));
}

inline Var& operator+=(Var& a, const Var& b) { a = a + b; return a; }
inline Var& operator-=(Var& a, const Var& b) { a = a - b; return a; }
inline Var& operator*=(Var& a, const Var& b) { a = a * b; return a; }
inline Var& operator/=(Var& a, const Var& b) { a = a / b; return a; }

inline Var sqrt(const Var& a) {
  const double v = std::sqrt(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, 0.5 / v));
}

inline Var exp(const Var& a) {
  const double v = std::exp(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, v));
}

inline Var log(const Var& a) {
  const double v = std::log(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, 1.0 / a.val));
}

inline Var sin(const Var& a) {
  const double v = std::sin(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, std::cos(a.val)));
}

inline Var cos(const Var& a) {
  const double v = std::cos(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, -std::sin(a.val)));
}

inline Var tanh(const Var& a) {
  const double v = std::tanh(a.val);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, 1.0 - v * v));
}

inline Var abs(const Var& a) {
  const double v = std::abs(a.val);
  if (!a.tracked()) return Var(v);
  const double sign = a.val > 0.0 ? 1.0 : (a.val < 0.0 ? -1.0 : 0.0);
  return Var(v, detail::require_tape().push1(a.id, sign));
}

inline Var pow(const Var& a, double p) {
  const double v = std::pow(a.val, p);
  if (!a.tracked()) return Var(v);
  return Var(v, detail::require_tape().push1(a.id, p * std::pow(a.val, p - 1.0)));
}

/// Value-level branch: gradient follows the selected argument.
inline Var max(const Var& a, const Var& b) { return a.val >= b.val ? a : b; }
inline Var min(const Var& a, const Var& b) { return a.val <= b.val ? a : b; }

// ---------------------------------------------------------------------------
// Backward pass
// ---------------------------------------------------------------------------

/// Adjoints of every node after a backward sweep; query by leaf Var.
class Gradients {
 public:
  Gradients() = default;
  explicit Gradients(std::vector<double> adj) : adj_(std::move(adj)) {}

  double operator()(const Var& v) const {
    if (!v.tracked() || static_cast<size_t>(v.id) >= adj_.size()) return 0.0;
    return adj_[v.id];
  }

  const std::vector<double>& raw() const { return adj_; }

 private:
  std::vector<double> adj_;
};

/// Reverse sweep from a scalar output. Visits nodes exactly once in reverse
/// creation order (valid topological order by construction). Throws
/// NumericalError naming the first node whose adjoint is non-finite.
Gradients backward(const Var& output, const Tape& tape);

/// In-place L2-norm clip: if ||g|| > max_norm, scale all entries by
/// max_norm / ||g||. Direction is preserved.
void clip_gradients(std::vector<double>& grads, double max_norm);

}  // namespace tensegrid
