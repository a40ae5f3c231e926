#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/**
 * Transitions a (k/2)-cycle may take between consecutive block parities.
 *
 * A "stay" joins two blocks of equal parity (always an even edge), a "flip"
 * joins blocks of opposite parity (always an odd edge). A cap bounds how many
 * transitions of that kind one Hamilton cycle can contain.
 */
struct TransitionRules {
  int half = 0;
  bool stay_even = true;
  bool stay_odd = true;
  bool flip = true;
  std::optional<int> stay_cap;
  std::optional<int> flip_cap;
};

/// Rules implied by the edges of h w.r.t. p: which split types occur, and a cap of
/// min(#edges, 2) when all edges of a kind share a vertex (a vertex lies in one block,
/// hence in at most two cycle edges).
TransitionRules derive_rules(const Hypergraph& h, const Bipartition& p);

/**
 * Exact feasibility of the parity skeleton of a cyclic block sequence: does a bit
 * string with the allowed transitions exist whose blocks can absorb exactly the
 * remaining A-vertices (an odd block holds an odd number of A-vertices, an even
 * block an even number, each at most half)? Results are memoized per instance, and an instance may be
 * shared by concurrent searches.
 */
class CycleParityOracle {
 public:
  CycleParityOracle(TransitionRules rules, int t);

  /// Some cyclic sequence of t blocks covering a_total A-vertices.
  bool any_cycle(int a_total);

  /// Completion after placing blocks: r more blocks follow the current one (bit
  /// `current`), then the cycle closes onto the first block (bit `first`).
  bool completion(int r, int current, int first, int a_remaining, int stays_used, int flips_used);

 /// Applies one transition to the running counts; false if forbidden or over its cap.
  bool step(int from, int to, int& stays, int& flips) const;

  const TransitionRules& rules() const { return rules_; }

 private:
  TransitionRules rules_;
  int t_;
  // Shared between search threads; entries are deterministic so relaxed races are benign.
  std::unique_ptr<std::atomic<std::int8_t>[]> memo_;
};

/// Subset-sum style check for perfect matchings: can r edges whose A-intersections
/// come from `a_counts` cover exactly a_remaining A-vertices?
class MatchingParityOracle {
 public:
  MatchingParityOracle(std::vector<int> a_counts, int max_edges, int max_a);
  bool feasible(int r, int a_remaining);

 private:
  std::vector<int> a_counts_;
  int max_a_;
  std::unique_ptr<std::atomic<std::int8_t>[]> memo_;
};

}  // namespace hyperham
