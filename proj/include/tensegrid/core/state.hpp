#pragma once

#include <vector>

#include "tensegrid/core/types.hpp"

namespace tensegrid {

// Flat state layout, per rod: position(3), orientation quaternion wxyz(4),
// lin_vel(3), ang_vel(3) -> 13 scalars. pack/unpack is an exact bijection.
constexpr int kRodPackDim = 13;

template <class S>
std::vector<S> pack_state(const RobotStateT<S>& state) {
  std::vector<S> out;
  out.reserve(kRodPackDim * state.rods.size());
  for (const auto& rod : state.rods) {
    out.push_back(rod.position.x);
    out.push_back(rod.position.y);
    out.push_back(rod.position.z);
    out.push_back(rod.orientation.w);
    out.push_back(rod.orientation.x);
    out.push_back(rod.orientation.y);
    out.push_back(rod.orientation.z);
    out.push_back(rod.lin_vel.x);
    out.push_back(rod.lin_vel.y);
    out.push_back(rod.lin_vel.z);
    out.push_back(rod.ang_vel.x);
    out.push_back(rod.ang_vel.y);
    out.push_back(rod.ang_vel.z);
  }
  return out;
}

template <class S>
RobotStateT<S> unpack_state(const std::vector<S>& flat, double time = 0.0) {
  if (flat.size() % kRodPackDim != 0) {
    throw ConfigError("unpack_state: length not a multiple of 13");
  }
  RobotStateT<S> state;
  state.time = time;
  state.rods.resize(flat.size() / kRodPackDim);
  size_t i = 0;
  for (auto& rod : state.rods) {
    rod.position = {flat[i], flat[i + 1], flat[i + 2]};
    rod.orientation = {flat[i + 3], flat[i + 4], flat[i + 5], flat[i + 6]};
    rod.lin_vel = {flat[i + 7], flat[i + 8], flat[i + 9]};
    rod.ang_vel = {flat[i + 10], flat[i + 11], flat[i + 12]};
    i += kRodPackDim;
  }
  return state;
}

/// World-frame attachment point and its velocity for a body-frame offset.
///   point = p + R offset,  velocity = v + w x (R offset)
template <class S>
struct AttachmentT {
  Vec3<S> point;
  Vec3<S> velocity;
  Vec3<S> arm;  // R offset: torque arm from rod CoM to the point
};

template <class S>
AttachmentT<S> attachment_world(const RodStateT<S>& rod, const Vec3<S>& offset) {
  AttachmentT<S> out;
  out.arm = rod.orientation.rotate(offset);
  out.point = rod.position + out.arm;
  out.velocity = rod.lin_vel + cross(rod.ang_vel, out.arm);
  return out;
}

// Rotation-free evaluation encoding, per rod: the two rod-tip positions
// (which determine orientation up to the unobservable axial spin of a
// capsule) plus linear and angular velocity -> 12 scalars, 72 for 6 rods.
// All losses are computed on this encoding.
constexpr int kRodLossDim = 12;

template <class S>
std::vector<S> loss_encoding(const RobotStateT<S>& state,
                             const Topology& topology) {
  std::vector<S> out;
  out.reserve(kRodLossDim * state.rods.size());
  for (size_t i = 0; i < state.rods.size(); ++i) {
    const auto& rod = state.rods[i];
    const double half = 0.5 * topology.rods[i].length;
    const Vec3<S> tip = rod.orientation.rotate(Vec3<S>(S(0.0), S(0.0), S(half)));
    const Vec3<S> end_a = rod.position + tip;
    const Vec3<S> end_b = rod.position - tip;
    for (const Vec3<S>* v : {&end_a, &end_b, &rod.lin_vel, &rod.ang_vel}) {
      out.push_back(v->x);
      out.push_back(v->y);
      out.push_back(v->z);
    }
  }
  return out;
}

/// Mass-weighted mean of rod CoMs: the evaluation functional for all
/// trajectory comparisons.
template <class S>
Vec3<S> center_of_mass(const RobotStateT<S>& state, const Topology& topology) {
  Vec3<S> acc;
  double total = 0.0;
  for (size_t i = 0; i < state.rods.size(); ++i) {
    acc += state.rods[i].position * S(topology.rods[i].mass);
    total += topology.rods[i].mass;
  }
  return acc / S(total);
}

template <class S>
Vec3<S> com_velocity(const RobotStateT<S>& state, const Topology& topology) {
  Vec3<S> acc;
  double total = 0.0;
  for (size_t i = 0; i < state.rods.size(); ++i) {
    acc += state.rods[i].lin_vel * S(topology.rods[i].mass);
    total += topology.rods[i].mass;
  }
  return acc / S(total);
}

inline bool is_finite(const RobotState& state) {
  for (const auto& rod : state.rods) {
    if (!is_finite(rod.position) || !is_finite(rod.orientation) ||
        !is_finite(rod.lin_vel) || !is_finite(rod.ang_vel)) {
      return false;
    }
  }
  return true;
}

}  // namespace tensegrid
