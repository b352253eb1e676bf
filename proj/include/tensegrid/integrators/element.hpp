#pragma once

#include <array>
#include <string>

#include "tensegrid/autodiff/linsolve.hpp"
#include "tensegrid/core/state.hpp"
#include "tensegrid/error.hpp"

namespace tensegrid {

// Unknown layout of the per-element implicit system, 7 blocks of 3:
//   x = [ f, x_m1, v_m1, x_R, v_R, w_R, r ]
// f is the spring force applied to the attachment point m1 of this rod,
// m1/m2 are the two spring endpoints (m2 frozen at time t), x_R/v_R/w_R the
// rod pose/twist and r the torque arm from rod CoM to m1.
namespace elem {
constexpr int kForce = 0;
constexpr int kPointPos = 3;
constexpr int kPointVel = 6;
constexpr int kRodPos = 9;
constexpr int kRodVel = 12;
constexpr int kRodAngVel = 15;
constexpr int kArm = 18;
}  // namespace elem

template <class S>
struct ElementSystem {
  std::array<S, kElementDim * kElementDim> a{};
  std::array<S, kElementDim> b{};

  void set_block(int row, int col, const Mat3<S>& m) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a[(row + r) * kElementDim + col + c] = m(r, c);
  }
  void set_diag(int row, int col, const S& v) {
    for (int r = 0; r < 3; ++r) a[(row + r) * kElementDim + col + r] = v;
  }
  void set_rhs(int row, const Vec3<S>& v) {
    b[row] = v.x;
    b[row + 1] = v.y;
    b[row + 2] = v.z;
  }
};

/// Frozen data of the far spring endpoint (m2) and the spring constants for
/// one element build.
template <class S>
struct ElementInputs {
  Vec3<S> other_point;     // x_t^{m2}
  Vec3<S> other_velocity;  // v_t^{m2}
  S stiffness;             // K
  S damping;               // k
  S effective_rest;        // l_rest + w c
  S mass;                  // rod mass m
  Mat3<S> inv_inertia_world;  // I_t^{-1}
};

/// Assembles the simplified implicit equations in Ax=b form. Quadratic
/// couplings are linearized with time-t factors: [w_t x] r_{t+1} in the
/// point-velocity row and I_t^{-1} [r_t x] f_{t+1} in the angular row. The
/// spring direction, rest-length vector and the m2 terms in
///   c1 = K (x_t^{m2} + l_t^rest) + k (v_t^{m2} . dir) dir
/// are all evaluated at time t.
///
/// Sign note: the force unknown is the pull applied to m1, so the Hooke row
/// reads f + K x_m1 + k B v_m1 = c1 with B = dir dir^T. The source derivation
/// carries f with the opposite sign, which would make a stretched spring
/// repel; this form is the attractive one and is what the stability and
/// energy tests require.
template <class S>
ElementSystem<S> build_element_system(const RodStateT<S>& rod,
                                      const Vec3<S>& attach_offset_body,
                                      const ElementInputs<S>& in, double dt,
                                      int cable_index = -1) {
  const AttachmentT<S> att = attachment_world(rod, attach_offset_body);
  const Vec3<S> dx = att.point - in.other_point;
  const S len = norm(dx);
  if (value_of(len) < 1e-9) {
    throw NumericalError("element for cable " + std::to_string(cable_index) +
                         ": degenerate zero length");
  }
  const Vec3<S> dir = dx / len;

  ElementSystem<S> sys;
  const S dt_s(dt);
  const Mat3<S> eye = Mat3<S>::identity();

  // x_m1 - x_R - r = 0
  sys.set_block(0, elem::kPointPos, eye);
  sys.set_block(0, elem::kRodPos, -eye);
  sys.set_block(0, elem::kArm, -eye);

  // v_m1 - v_R - [w_t x] r = 0
  sys.set_block(3, elem::kPointVel, eye);
  sys.set_block(3, elem::kRodVel, -eye);
  sys.set_block(3, elem::kArm, -Mat3<S>::skew(rod.ang_vel));

  // f + K x_m1 + k B v_m1 = c1,  B = dir dir^T
  const Mat3<S> damping_block = Mat3<S>::outer(dir, dir) * in.damping;
  sys.set_block(6, elem::kForce, eye);
  sys.set_diag(6, elem::kPointPos, in.stiffness);
  sys.set_block(6, elem::kPointVel, damping_block);
  const Vec3<S> rest_vec = dir * in.effective_rest;
  const Vec3<S> c1 = (in.other_point + rest_vec) * in.stiffness +
                     dir * (in.damping * dot(in.other_velocity, dir));
  sys.set_rhs(6, c1);

  // v_R - (dt/m) f = v_t
  sys.set_diag(9, elem::kForce, -(dt_s / in.mass));
  sys.set_block(9, elem::kRodVel, eye);
  sys.set_rhs(9, rod.lin_vel);

  // x_R - dt v_R = x_t
  sys.set_block(12, elem::kRodPos, eye);
  sys.set_diag(12, elem::kRodVel, S(-dt));
  sys.set_rhs(12, rod.position);

  // w_R - dt I_t^{-1} [r_t x] f = w_t
  sys.set_block(15, elem::kForce,
                (in.inv_inertia_world * Mat3<S>::skew(att.arm)) * S(-dt));
  sys.set_block(15, elem::kRodAngVel, eye);
  sys.set_rhs(15, rod.ang_vel);

  // r - dt w_R = r_t
  sys.set_diag(18, elem::kRodAngVel, S(-dt));
  sys.set_block(18, elem::kArm, eye);
  sys.set_rhs(18, att.arm);

  return sys;
}

template <class S>
struct ElementSolution {
  Vec3<S> rod_vel;
  Vec3<S> rod_ang_vel;
  Vec3<S> force;
  SolveInfo info;
};

template <class S>
ElementSolution<S> solve_element(const ElementSystem<S>& sys) {
  std::array<S, kElementDim> x;
  ElementSolution<S> out;
  out.info = solve21(sys.a, sys.b, x);
  out.force = {x[elem::kForce], x[elem::kForce + 1], x[elem::kForce + 2]};
  out.rod_vel = {x[elem::kRodVel], x[elem::kRodVel + 1], x[elem::kRodVel + 2]};
  out.rod_ang_vel = {x[elem::kRodAngVel], x[elem::kRodAngVel + 1],
                     x[elem::kRodAngVel + 2]};
  return out;
}

}  // namespace tensegrid
