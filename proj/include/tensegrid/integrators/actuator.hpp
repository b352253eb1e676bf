#pragma once

#include <vector>

#include "tensegrid/engine/config.hpp"

namespace tensegrid {

/// Per-cable motor positions under first-order filter dynamics:
///   w <- w + (u_scaled - w) dt / tau
/// The effective rest length seen by the spring is rest + w * motor_scale.
/// Motor state depends only on the control history, never on trainable
/// parameters, so it stays in plain doubles even while training.
struct ActuatorBank {
  std::vector<double> w;

  explicit ActuatorBank(size_t cables = 0) : w(cables, 0.0) {}

  /// Commands are clamped to [-100, 100]; returns how many were out of range.
  int step(const std::vector<double>& commands, const EngineConfig& config) {
    int clamped = 0;
    const double alpha = config.dt / config.actuator_tau;
    for (size_t i = 0; i < w.size(); ++i) {
      double u = i < commands.size() ? commands[i] : 0.0;
      if (u < -100.0 || u > 100.0) {
        u = u < -100.0 ? -100.0 : 100.0;
        ++clamped;
      }
      const double target = u * config.command_scale;
      w[i] += (target - w[i]) * alpha;
    }
    return clamped;
  }
};

}  // namespace tensegrid
