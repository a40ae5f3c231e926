#pragma once

#include <nlohmann/json.hpp>

#include "hyperham/extremal.hpp"
#include "hyperham/parity.hpp"
#include "hyperham/solver.hpp"
#include "hyperham/structure.hpp"
#include "hyperham/witness.hpp"

namespace hyperham::harness {

using nlohmann::json;

json to_json(VertexSet s);
json to_json(const std::vector<VertexSet>& sets);
json to_json(const ExtremalSpec& spec);
json to_json(const CycleWitness& w);
json to_json(const PathWitness& w);
json to_json(const MatchingWitness& w);
json to_json(const AbsorbingWitness& w);
json to_json(const ParityCertificate& c);
json to_json(const Closeness& c);

VertexSet vertex_set_from_json(const json& j);
CycleWitness cycle_from_json(const json& j);
ExtremalSpec spec_from_json(const json& j);

template <class W>
json to_json(const SearchResult<W>& r) {
  json out{{"decision", to_string(r.decision)},
           {"nodes_explored", r.nodes_explored},
           {"wall_ms", r.wall_ms}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

/// Drops every "wall_ms" member, recursively; reports compare equal after this.
json strip_timing(json j);

}  // namespace hyperham::harness
