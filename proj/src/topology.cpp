#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "tensegrid/core/topology_io.hpp"

namespace tensegrid {

using nlohmann::json;

void Topology::validate() const {
  if (rods.empty()) throw ConfigError("topology: no rods");
  for (size_t i = 0; i < rods.size(); ++i) {
    const auto& r = rods[i];
    if (!(r.mass > 0.0)) throw ConfigError("topology: rod " + std::to_string(i) + " mass must be > 0");
    if (!(r.length > 2.0 * r.radius) || !(r.radius > 0.0)) {
      throw ConfigError("topology: rod " + std::to_string(i) + " needs length > 2*radius > 0");
    }
  }
  for (size_t i = 0; i < cables.size(); ++i) {
    const auto& c = cables[i];
    const int n = static_cast<int>(rods.size());
    if (c.rod_a < 0 || c.rod_a >= n || c.rod_b < 0 || c.rod_b >= n || c.rod_a == c.rod_b) {
      throw ConfigError("topology: cable " + std::to_string(i) + " has invalid rod indices");
    }
    if (!(c.stiffness > 0.0)) throw ConfigError("topology: cable " + std::to_string(i) + " K must be > 0");
    if (!(c.damping >= 0.0)) throw ConfigError("topology: cable " + std::to_string(i) + " k must be >= 0");
    if (!(c.rest_length > 0.0)) throw ConfigError("topology: cable " + std::to_string(i) + " rest_length must be > 0");
  }
  if (!(contact.stiffness > 0.0)) throw ConfigError("topology: contact Kg must be > 0");

  if (cables.empty()) return;
  // connectivity over the rod-cable graph
  std::vector<int> mark(rods.size(), 0);
  std::vector<int> stack{cables[0].rod_a};
  mark[cables[0].rod_a] = 1;
  while (!stack.empty()) {
    const int r = stack.back();
    stack.pop_back();
    for (const auto& c : cables) {
      const int other = c.rod_a == r ? c.rod_b : (c.rod_b == r ? c.rod_a : -1);
      if (other >= 0 && !mark[other]) {
        mark[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (size_t i = 0; i < mark.size(); ++i) {
    if (!mark[i]) throw ConfigError("topology: rod " + std::to_string(i) + " not connected by any cable path");
  }
}

namespace {

Vec3d vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("topology: offset must be a 3-array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

Topology topology_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("topology: bad JSON: ") + e.what());
  }
  try {
    Topology topo;
    for (const auto& jr : doc.at("rods")) {
      RodSpec r;
      r.mass = jr.at("mass").get<double>();
      r.length = jr.at("length").get<double>();
      r.radius = jr.at("radius").get<double>();
      topo.rods.push_back(r);
    }
    for (const auto& jc : doc.at("cables")) {
      CableSpec c;
      c.rod_a = jc.at("a").at("rod").get<int>();
      c.offset_a = vec3_from_json(jc.at("a").at("offset"));
      c.rod_b = jc.at("b").at("rod").get<int>();
      c.offset_b = vec3_from_json(jc.at("b").at("offset"));
      c.stiffness = jc.at("K").get<double>();
      c.damping = jc.at("k").get<double>();
      c.rest_length = jc.at("rest_length").get<double>();
      c.motor_scale = jc.value("motor_scale", 0.3);
      topo.cables.push_back(c);
    }
    if (doc.contains("contact")) {
      const auto& jk = doc.at("contact");
      topo.contact.stiffness = jk.at("Kg").get<double>();
      topo.contact.damping = jk.at("kg").get<double>();
      topo.contact.friction = jk.at("mu").get<double>();
      topo.contact.restitution = jk.at("e").get<double>();
    }
    topo.validate();
    return topo;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("topology: missing or mistyped field: ") + e.what());
  }
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("topology: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return topology_from_json(ss.str());
}

std::string topology_to_json(const Topology& topology) {
  json doc;
  doc["rods"] = json::array();
  for (const auto& r : topology.rods) {
    doc["rods"].push_back({{"mass", r.mass}, {"length", r.length}, {"radius", r.radius}});
  }
  doc["cables"] = json::array();
  for (const auto& c : topology.cables) {
    doc["cables"].push_back(
        {{"a", {{"rod", c.rod_a}, {"offset", {c.offset_a.x, c.offset_a.y, c.offset_a.z}}}},
         {"b", {{"rod", c.rod_b}, {"offset", {c.offset_b.x, c.offset_b.y, c.offset_b.z}}}},
         {"K", c.stiffness},
         {"k", c.damping},
         {"rest_length", c.rest_length},
         {"motor_scale", c.motor_scale}});
  }
  doc["contact"] = {{"Kg", topology.contact.stiffness},
                    {"kg", topology.contact.damping},
                    {"mu", topology.contact.friction},
                    {"e", topology.contact.restitution}};
  return doc.dump(2);
}

void save_topology(const Topology& topology, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("topology: cannot write " + path);
  out << topology_to_json(topology) << "\n";
}

}  // namespace tensegrid
