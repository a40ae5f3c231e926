#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "hyperham/hypergraph.hpp"
#include "hyperham/witness.hpp"

namespace hyperham {

enum class Decision { yes, no, undecided };

std::string to_string(Decision d);

template <class W>
struct SearchResult {
  Decision decision = Decision::no;
  std::optional<W> witness;
  std::uint64_t nodes_explored = 0;
  std::int64_t wall_ms = 0;
};

struct SolverOptions {
  /// Return the lexicographically least witness (block/edge sequences compared by mask).
  bool deterministic = true;
  /// Abort with Decision::undecided once exceeded.
  std::optional<std::chrono::milliseconds> budget;
  int jobs = 1;
  /// Partition used for parity pruning; pruning is off without one.
  std::optional<Bipartition> parity_partition;
  bool parity_pruning = true;
};

/**
 * Hamilton (k/2)-cycle search over sequences of (k/2)-blocks.
 *
 * Canonical form: L_1 contains vertex 0 and L_2 < L_t. Requires even k,
 * n ∈ (k/2)N and n >= 3k/2 (InvalidInput otherwise).
 */
SearchResult<CycleWitness> find_hamilton_half_cycle(const Hypergraph& h, const SolverOptions& options = {});

/// Hamilton ℓ-cycle, 1 <= ℓ < k, (k-ℓ) | n and at least three edges. ℓ = k/2 uses
/// the block solver unless `force_vertex_search` selects the generic vertex-order search.
SearchResult<CycleWitness> find_hamilton_l_cycle(const Hypergraph& h, int ell, const SolverOptions& options = {},
                                                 bool force_vertex_search = false);

/// Perfect matching, branching on the least uncovered vertex. Requires k | n.
SearchResult<MatchingWitness> find_perfect_matching(const Hypergraph& h, const SolverOptions& options = {});

/// (k/2)-path with ends `start` and `end` whose vertex set is exactly `allowed`.
std::optional<PathWitness> find_half_path(const Hypergraph& h, VertexSet start, VertexSet end, VertexSet allowed);

/// Number of `size`-sets C disjoint from s ∪ t such that some (k/2)-path with ends s
/// and t spans s ∪ C ∪ t. size defaults to 3k/2 and must be a multiple of k/2.
std::uint64_t count_connecting_sets(const Hypergraph& h, VertexSet s, VertexSet t, std::optional<int> size = {},
                                    int jobs = 1);

/// Least 5-block path P avoiding x such that V(P) ∪ x carries a path with P's ends.
SearchResult<AbsorbingWitness> find_absorbing_path(const Hypergraph& h, VertexSet x, const SolverOptions& options = {});

}  // namespace hyperham
