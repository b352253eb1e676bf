#include "tensegrid/core/superball.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace tensegrid {

namespace {

struct RodLine {
  Vec3d center;
  Vec3d axis;  // unit, body +z maps here
};

// Unit-scale rod endpoints: icosahedron vertices (0,+-1,+-phi) and cyclic
// permutations, grouped into three parallel pairs.
std::vector<std::array<Vec3d, 2>> icosa_rod_endpoints() {
  const double p = 0.5 * (1.0 + std::sqrt(5.0));
  return {
      {Vec3d{0, 1, p}, Vec3d{0, 1, -p}},    // z pair, +y
      {Vec3d{0, -1, p}, Vec3d{0, -1, -p}},  // z pair, -y
      {Vec3d{p, 0, 1}, Vec3d{-p, 0, 1}},    // x pair, +z
      {Vec3d{p, 0, -1}, Vec3d{-p, 0, -1}},  // x pair, -z
      {Vec3d{1, p, 0}, Vec3d{1, -p, 0}},    // y pair, +x
      {Vec3d{-1, p, 0}, Vec3d{-1, -p, 0}},  // y pair, -x
  };
}

int parallel_partner(int rod) { return rod ^ 1; }  // pairs (0,1) (2,3) (4,5)

}  // namespace

Topology superball_topology(const RodSpec& rod, double stiffness, double damping,
                            double rest_length, double motor_scale) {
  Topology topo;
  topo.rods.assign(6, rod);

  const auto ends = icosa_rod_endpoints();
  const double unit_len = norm(ends[0][1] - ends[0][0]);
  const double scale = rod.length / unit_len;
  const double edge = 2.0 * scale;  // icosahedron edge length after scaling

  // World endpoint table: (rod, end) -> point, with end 0 at body +z.
  std::array<std::array<Vec3d, 2>, 6> pts;
  for (int r = 0; r < 6; ++r) {
    pts[r][0] = ends[r][0] * scale;
    pts[r][1] = ends[r][1] * scale;
  }

  const double half = 0.5 * rod.length;
  for (int ra = 0; ra < 6; ++ra) {
    for (int rb = ra + 1; rb < 6; ++rb) {
      for (int ea = 0; ea < 2; ++ea) {
        for (int eb = 0; eb < 2; ++eb) {
          const double d = norm(pts[ra][ea] - pts[rb][eb]);
          if (std::abs(d - edge) > 1e-9 * edge) continue;
          if (rb == parallel_partner(ra)) continue;  // omitted long edges
          CableSpec c;
          c.rod_a = ra;
          c.offset_a = {0.0, 0.0, ea == 0 ? half : -half};
          c.rod_b = rb;
          c.offset_b = {0.0, 0.0, eb == 0 ? half : -half};
          c.stiffness = stiffness;
          c.damping = damping;
          c.rest_length = rest_length;
          c.motor_scale = motor_scale;
          topo.cables.push_back(c);
        }
      }
    }
  }
  topo.validate();
  return topo;
}

RobotState superball_home_state(const Topology& topology, const Vec3d& center) {
  const auto ends = icosa_rod_endpoints();
  const double unit_len = norm(ends[0][1] - ends[0][0]);
  const double scale = topology.rods.at(0).length / unit_len;

  RobotState state;
  state.rods.resize(topology.rod_count());
  for (size_t r = 0; r < state.rods.size(); ++r) {
    const Vec3d a = ends[r][0] * scale;
    const Vec3d b = ends[r][1] * scale;
    auto& rod = state.rods[r];
    rod.position = (a + b) * 0.5 + center;
    rod.orientation = Quatd::between({0.0, 0.0, 1.0}, a - b);
    rod.lin_vel = {};
    rod.ang_vel = {};
  }
  return state;
}

}  // namespace tensegrid
