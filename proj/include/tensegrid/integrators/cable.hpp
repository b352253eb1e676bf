#pragma once

#include <string>

#include "tensegrid/core/state.hpp"
#include "tensegrid/error.hpp"

namespace tensegrid {

template <class S>
struct CableForceT {
  bool taut = false;
  Vec3<S> force_on_a;  // equal and opposite on endpoint b
  S tension{};         // along the a->b axis; positive pulls the ends together
  Vec3<S> direction;   // unit, from b to a
};

/// Hooke spring with damping projected on the cable axis, evaluated from the
/// given endpoint states. Unilateral mode returns zero force when the
/// distance is under the effective rest length (a real cable cannot push).
template <class S>
CableForceT<S> cable_force(const AttachmentT<S>& end_a, const AttachmentT<S>& end_b,
                           const S& stiffness, const S& damping,
                           const S& effective_rest, bool unilateral,
                           int cable_index) {
  const Vec3<S> dx = end_a.point - end_b.point;
  const S len = norm(dx);
  if (value_of(len) < 1e-9) {
    throw NumericalError("cable " + std::to_string(cable_index) +
                         ": degenerate zero length");
  }
  CableForceT<S> out;
  out.direction = dx / len;
  const S stretch = len - effective_rest;
  if (unilateral && value_of(stretch) < 0.0) return out;  // slack

  const S rel_speed = dot(end_a.velocity - end_b.velocity, out.direction);
  out.tension = stiffness * stretch + damping * rel_speed;
  out.force_on_a = out.direction * (-out.tension);
  out.taut = true;
  return out;
}

}  // namespace tensegrid
