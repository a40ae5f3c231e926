#pragma once

#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/**
 * Hamilton ℓ-cycle certificate.
 *
 * For ℓ = k/2 the cycle is stored in block form: pairwise disjoint (k/2)-sets
 * L_1..L_t covering V with every L_i ∪ L_{i+1} (cyclically) an edge; `order`
 * is then empty. For other ℓ, `order` holds the cyclic vertex order and
 * `blocks` its consecutive (k-ℓ)-segments.
 */
struct CycleWitness {
  int ell = 0;
  std::vector<VertexSet> blocks;
  std::vector<int> order;

  bool operator==(const CycleWitness&) const = default;
};

/// (k/2)-path L_1..L_m, m >= 2; the ends are L_1 and L_m.
struct PathWitness {
  std::vector<VertexSet> blocks;

  VertexSet first() const { return blocks.front(); }
  VertexSet last() const { return blocks.back(); }
  VertexSet vertices() const;

  bool operator==(const PathWitness&) const = default;
};

/// Pairwise disjoint edges covering V.
struct MatchingWitness {
  std::vector<VertexSet> edges;

  bool operator==(const MatchingWitness&) const = default;
};

/// A 5-block path P plus a path Q on V(P) ∪ absorbed with the same ends as P.
struct AbsorbingWitness {
  VertexSet absorbed;
  PathWitness path;
  PathWitness rerouted;

  bool operator==(const AbsorbingWitness&) const = default;
};

/// Each overload re-checks every structural invariant of the witness against h from scratch.
bool verify(const Hypergraph& h, const CycleWitness& w);
bool verify(const Hypergraph& h, const PathWitness& w);
bool verify(const Hypergraph& h, const MatchingWitness& w);
bool verify(const Hypergraph& h, const AbsorbingWitness& w);

/// A (k/2)-cycle with n ∈ kN splits into the edges at odd and at even positions.
std::pair<MatchingWitness, MatchingWitness> split_into_matchings(const CycleWitness& w);

}  // namespace hyperham
