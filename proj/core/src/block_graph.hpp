#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham::detail {

// (k/2)-sets that occur as halves of edges, with neighbor lists: T is a neighbor
// of S iff S ∪ T is an edge. Blocks and neighbor lists are sorted by mask.
class BlockGraph {
 public:
  explicit BlockGraph(const Hypergraph& h);

  int half() const { return half_; }
  std::size_t size() const { return blocks_.size(); }
  VertexSet block(std::uint32_t i) const { return blocks_[i]; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const { return adjacency_[i]; }

  std::optional<std::uint32_t> index_of(VertexSet s) const {
    const auto it = std::lower_bound(blocks_.begin(), blocks_.end(), s);
    if (it == blocks_.end() || *it != s) return std::nullopt;
    return static_cast<std::uint32_t>(it - blocks_.begin());
  }

  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    const auto& row = adjacency_[i];
    return std::binary_search(row.begin(), row.end(), j);
  }

 private:
  int half_;
  std::vector<VertexSet> blocks_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

}  // namespace hyperham::detail
