#include "hyperham/harness/json.hpp"

#include "hyperham/errors.hpp"

namespace hyperham::harness {

json to_json(VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

json to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(to_json(s));
  return out;
}

json to_json(const ExtremalSpec& spec) {
  json out{{"variant", to_string(spec.variant)}, {"n", spec.n}, {"k", spec.k}, {"a_size", spec.a_size}};
  if (spec.variant == Variant::Bprime) out["apex"] = spec.apex_or_default();
  return out;
}

json to_json(const CycleWitness& w) {
  json out{{"ell", w.ell}, {"blocks", to_json(w.blocks)}};
  if (!w.order.empty()) out["order"] = w.order;
  return out;
}

json to_json(const PathWitness& w) { return json{{"blocks", to_json(w.blocks)}}; }

json to_json(const MatchingWitness& w) { return json{{"edges", to_json(w.edges)}}; }

json to_json(const AbsorbingWitness& w) {
  return json{{"absorbed", to_json(w.absorbed)}, {"path", to_json(w.path)}, {"rerouted", to_json(w.rerouted)}};
}

json to_json(const ParityCertificate& c) {
  json out{{"kind", to_string(c.kind)},
           {"n", c.n},
           {"k", c.k},
           {"t", c.t},
           {"a_size", c.a_size},
           {"floor_n_over_k", c.floor_n_over_k},
           {"half_k_odd", c.half_k_odd},
           {"form", c.form}};
  out["apex"] = c.apex ? json(*c.apex) : json(nullptr);
  return out;
}

json to_json(const Closeness& c) {
  return json{{"distance", c.distance},
              {"best_a_side", to_json(c.best_partition.a_side())},
              {"best_variant", to_string(c.best_variant)},
              {"epsilon_equivalent", to_string(c.epsilon_equivalent)},
              {"upper_bound", c.upper_bound}};
}

VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("vertex set must be a JSON array");
  VertexSet out;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw InvalidInput("vertex out of range in JSON");
    out = out.with(x);
  }
  return out;
}

CycleWitness cycle_from_json(const json& j) {
  CycleWitness w;
  w.ell = j.at("ell").get<int>();
  for (const auto& b : j.at("blocks")) w.blocks.push_back(vertex_set_from_json(b));
  if (j.contains("order")) w.order = j.at("order").get<std::vector<int>>();
  return w;
}

ExtremalSpec spec_from_json(const json& j) {
  ExtremalSpec s;
  s.variant = parse_variant(j.at("variant").get<std::string>());
  s.n = j.at("n").get<int>();
  s.k = j.at("k").get<int>();
  s.a_size = j.at("a_size").get<int>();
  if (j.contains("apex")) s.apex = j.at("apex").get<int>();
  return s;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

}  // namespace hyperham::harness
