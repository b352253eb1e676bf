#pragma once

#include "tensegrid/core/state.hpp"
#include "tensegrid/core/types.hpp"

namespace tensegrid {

/// Six-rod, 24-cable icosahedron tensegrity (SUPERball-like). Rods come in
/// three mutually orthogonal parallel pairs; endpoints sit on the vertices of
/// a regular icosahedron scaled so the rod length matches `rod.length`.
/// Cables are the icosahedron edges minus the six edges joining same-end tips
/// of each parallel rod pair.
Topology superball_topology(const RodSpec& rod = RodSpec{},
                            double stiffness = 10000.0, double damping = 1000.0,
                            double rest_length = 0.95, double motor_scale = 0.3);

/// Pose of the icosahedron assembly with its center at `center`, at rest.
RobotState superball_home_state(const Topology& topology,
                                const Vec3d& center = {0.0, 0.0, 1.0});

}  // namespace tensegrid
