#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperham/vertex_set.hpp"

namespace hyperham {

/**
 * k-uniform hypergraph on the vertex set [0, n), n <= 64.
 *
 * Edges are deduplicated and kept sorted by mask value, so iteration order
 * and every "first witness" derived from it are reproducible.
 */
class Hypergraph {
 public:
  /// Empty hypergraph. Throws InvalidInput unless 2 <= k <= n <= 64 (k <= n is not
  /// required; n < k simply admits no edges).
  Hypergraph(int n, int k);

  /// Throws InvalidInput for an edge of the wrong size or with a vertex >= n.
  /// Duplicates are removed silently; `duplicates_removed` reports how many.
  Hypergraph(int n, int k, std::vector<VertexSet> edges, std::size_t* duplicates_removed = nullptr);

  static Hypergraph complete(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  std::size_t edge_count() const { return edges_.size(); }
  std::span<const VertexSet> edges() const { return edges_; }
  bool contains(VertexSet e) const;

  Hypergraph with_edge(VertexSet e) const;
  Hypergraph without_edge(VertexSet e) const;

  /// Image under the vertex map v -> perm[v]; perm must be a permutation of [0, n).
  Hypergraph relabeled(std::span<const int> perm) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_;
  int k_;
  std::vector<VertexSet> edges_;
};

enum class Parity { even, odd };

/// Ordered split V = A ∪ B of [0, n); only A is stored.
class Bipartition {
 public:
  Bipartition(int n, VertexSet a_side);

  /// A = {0, ..., a_size-1}.
  static Bipartition prefix(int n, int a_size);

  int n() const { return n_; }
  VertexSet a_side() const { return a_; }
  VertexSet b_side() const { return VertexSet::prefix(n_) - a_; }
  int a_size() const { return a_.size(); }
  int b_size() const { return n_ - a_.size(); }

  Parity parity(VertexSet s) const { return (s.intersection_size(a_) & 1) ? Parity::odd : Parity::even; }
  bool is_odd(VertexSet s) const { return (s.intersection_size(a_) & 1) != 0; }

  /// (|S ∩ A|, |S ∩ B|); S is then called an (i, j)-set.
  std::pair<int, int> ij_type(VertexSet s) const {
    const int i = s.intersection_size(a_);
    return {i, s.size() - i};
  }

  Bipartition relabeled(std::span<const int> perm) const;

  bool operator==(const Bipartition&) const = default;

 private:
  int n_;
  VertexSet a_;
};

Parity set_parity(const Bipartition& p, VertexSet s);

struct DegreeProfile {
  int d = 0;
  std::uint64_t min_degree = 0;
  /// Least (by mask) d-set attaining the minimum.
  VertexSet argmin_set;
};

/// Number of edges containing s. d = |s| = 0 gives |E|. Throws InvalidQuery if |s| > k
/// or s is not inside [0, n).
std::uint64_t degree(const Hypergraph& h, VertexSet s);

/// deg(S) for every d-subset S of [0, n), indexed by colex rank (= increasing mask order).
/// Throws BudgetExceeded if C(n, d) exceeds the dense-table cap.
std::vector<std::uint32_t> degree_table(const Hypergraph& h, int d);

/// Exhaustive δ_d(h) for 1 <= d <= k-1; InvalidQuery otherwise.
DegreeProfile min_d_degree(const Hypergraph& h, int d);

/// |E(h1) Δ E(h2)|; IncompatibleHypergraphs when (n, k) differ.
std::uint64_t edit_distance(const Hypergraph& h1, const Hypergraph& h2);

}  // namespace hyperham
