#pragma once

#include <vector>

#include "tensegrid/core/types.hpp"

namespace tensegrid {

/// Physical parameter values materialized for one simulation pass. For
/// training these scalars are tape leaves (through the positive
/// reparameterization in params.hpp); for plain rollouts they are doubles.
template <class S>
struct SimParams {
  std::vector<S> cable_stiffness;  // per cable
  std::vector<S> cable_damping;
  std::vector<S> rod_mass;         // per rod
  S contact_stiffness{};
  S contact_damping{};
  S friction{};
  S restitution{};

  static SimParams nominal(const Topology& topology) {
    SimParams p;
    for (const auto& c : topology.cables) {
      p.cable_stiffness.push_back(S(c.stiffness));
      p.cable_damping.push_back(S(c.damping));
    }
    for (const auto& r : topology.rods) p.rod_mass.push_back(S(r.mass));
    p.contact_stiffness = S(topology.contact.stiffness);
    p.contact_damping = S(topology.contact.damping);
    p.friction = S(topology.contact.friction);
    p.restitution = S(topology.contact.restitution);
    return p;
  }
};

using SimParamsD = SimParams<double>;

}  // namespace tensegrid
