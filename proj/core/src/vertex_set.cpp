#include "hyperham/vertex_set.hpp"

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

template <class Range>
VertexSet from_members(const Range& members) {
  std::uint64_t bits = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex index out of range: " + std::to_string(v));
    bits |= std::uint64_t{1} << v;
  }
  return VertexSet(bits);
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> members) { return from_members(members); }

VertexSet VertexSet::of(std::span<const int> members) { return from_members(members); }

std::vector<int> VertexSet::members() const { return {begin(), end()}; }

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace hyperham
