#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tensegrid/error.hpp"
#include "tensegrid/math.hpp"

namespace tensegrid {

/// Pose and twist of one rigid rod. Orientation is kept as a unit quaternion
/// internally; flat encodings are derived views (see state.hpp).
template <class S>
struct RodStateT {
  Vec3<S> position;       // CoM, m
  Quat<S> orientation;    // unit
  Vec3<S> lin_vel;        // m/s
  Vec3<S> ang_vel;        // world frame, rad/s
};

template <class S>
struct RobotStateT {
  std::vector<RodStateT<S>> rods;
  double time = 0.0;
};

using RodState = RodStateT<double>;
using RobotState = RobotStateT<double>;

/// One cable-spring with fixed attachment offsets in each rod's body frame.
struct CableSpec {
  int rod_a = -1;
  Vec3d offset_a;         // body frame, m
  int rod_b = -1;
  Vec3d offset_b;
  double stiffness = 10000.0;   // K, N/m
  double damping = 1000.0;      // k, N s/m
  double rest_length = 0.95;    // m
  double motor_scale = 0.3;     // m of rest-length change per unit motor position
};

/// Rigid capsule rod. `length` is tip-to-tip, so the collision end-sphere
/// centers sit at +/-(length/2 - radius) on the body z axis while cables
/// attach at the tips (+/- length/2).
struct RodSpec {
  double mass = 10.0;      // kg
  double length = 1.684;   // m
  double radius = 0.025;   // m

  double half_axis() const { return 0.5 * length - radius; }

  /// Body-frame inertia diagonal of a uniform-density capsule, scaled by an
  /// arbitrary scalar mass (so a trainable mass propagates into inertia).
  template <class S>
  Vec3<S> inertia_diag(const S& m) const {
    const double r = radius;
    const double h = length - 2.0 * radius;  // cylinder section
    const double vc = M_PI * r * r * h;
    const double vs = (4.0 / 3.0) * M_PI * r * r * r;
    const double fc = vc / (vc + vs);  // cylinder mass fraction
    const double fs = 1.0 - fc;
    const double off = 0.5 * h + 0.375 * r;  // hemisphere CoM offset
    const double ixx =
        fc * (h * h / 12.0 + r * r / 4.0) + fs * ((83.0 / 320.0) * r * r + off * off);
    const double izz = fc * r * r / 2.0 + fs * 0.4 * r * r;
    return Vec3<S>(m * ixx, m * ixx, m * izz);
  }
};

/// Shared ground-contact material. All trainable.
struct ContactParams {
  double stiffness = 2e7;     // K_g, N/m
  double damping = 8e3;       // k_g, N s/m
  double friction = 1.0;      // mu
  double restitution = 0.5;   // e in [0, 1]

  /// Stiffness gate of the contact-gradient theorem: the position gradient
  /// through a contact has the correct (negative) sign iff K/m > 1/dt^2.
  bool gradient_gate_holds(double min_rod_mass, double dt) const {
    return stiffness / min_rod_mass > 1.0 / (dt * dt);
  }
};

/// Static structure graph: rods, cables, attachment offsets, and the nominal
/// physical parameters. Immutable during simulation; trainable values are
/// overlaid by ParameterSet at materialization time.
struct Topology {
  std::vector<RodSpec> rods;
  std::vector<CableSpec> cables;
  ContactParams contact;

  size_t rod_count() const { return rods.size(); }
  size_t cable_count() const { return cables.size(); }

  double min_rod_mass() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : rods) m = std::min(m, r.mass);
    return m;
  }

  /// Throws ConfigError on invalid indices, non-positive parameters, or a
  /// disconnected rod-cable graph.
  void validate() const;
};

}  // namespace tensegrid
