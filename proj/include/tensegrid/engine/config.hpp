#pragma once

#include <vector>

#include "tensegrid/math.hpp"

namespace tensegrid {

enum class Integrator { kImplicit, kSemiImplicit };
enum class Coupling { kJacobi, kGaussSeidel };

struct EngineConfig {
  double dt = 1e-3;                 // engine step, s
  Integrator integrator = Integrator::kSemiImplicit;
  Coupling coupling = Coupling::kJacobi;

  bool unilateral_cables = true;    // cables pull only; bilateral for gradient tests
  Vec3d gravity{0.0, 0.0, -9.81};

  bool ground_enabled = true;
  double ground_z = 0.0;
  bool rod_rod_contacts = true;
  double friction_eps = 1e-4;       // smooth-Coulomb regularization speed, m/s

  double actuator_tau = 0.1;        // first-order filter time constant, s
  double command_scale = 0.01;      // motor target per control unit: u=100 -> w=1

  std::vector<int> pinned_rods;     // held fixed (the suspended-robot setup)

  /// Value-identical, gradient-opaque collision checker (ablation hook).
  bool opaque_checker = false;

  /// Ground-truth-only model mismatch: small per-rod velocity drags that the
  /// trainable engine does not model.
  double rod_lin_drag = 0.0;        // N s/m
  double rod_ang_drag = 0.0;        // N m s

  bool is_pinned(int rod) const {
    for (int p : pinned_rods)
      if (p == rod) return true;
    return false;
  }
};

}  // namespace tensegrid
