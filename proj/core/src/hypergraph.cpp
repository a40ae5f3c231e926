#include "hyperham/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperham/combinatorics.hpp"
#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

constexpr std::uint64_t kDenseTableCap = std::uint64_t{1} << 25;

void check_shape(int n, int k) {
  if (n < 1 || n > kMaxVertices) throw InvalidInput("vertex count must lie in [1, 64], got " + std::to_string(n));
  if (k < 2 || k > kMaxVertices) throw InvalidInput("uniformity must lie in [2, 64], got " + std::to_string(k));
}

VertexSet apply(std::span<const int> perm, VertexSet s) {
  VertexSet out;
  for (int v : s) out = out.with(perm[v]);
  return out;
}

void check_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation has wrong length");
  std::uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) throw InvalidInput("not a permutation of [0, n)");
    seen |= std::uint64_t{1} << v;
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

Hypergraph::Hypergraph(int n, int k, std::vector<VertexSet> edges, std::size_t* duplicates_removed)
    : n_(n), k_(k), edges_(std::move(edges)) {
  check_shape(n, k);
  const VertexSet all = vertices();
  for (VertexSet e : edges_) {
    if (e.size() != k) throw InvalidInput("edge " + to_string(e) + " does not have " + std::to_string(k) + " vertices");
    if (!e.is_subset_of(all)) throw InvalidInput("edge " + to_string(e) + " uses a vertex >= n");
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
  const auto before = edges_.size();
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (duplicates_removed != nullptr) *duplicates_removed = before - edges_.size();
}

Hypergraph Hypergraph::complete(int n, int k) {
  check_shape(n, k);
  std::vector<VertexSet> edges;
  edges.reserve(binomial(n, k));
  for_each_subset(VertexSet::prefix(n), k, [&](VertexSet e) { edges.push_back(e); });
  return Hypergraph(n, k, std::move(edges));
}

bool Hypergraph::contains(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Hypergraph Hypergraph::with_edge(VertexSet e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(VertexSet e) const {
  auto edges = edges_;
  std::erase(edges, e);
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::relabeled(std::span<const int> perm) const {
  check_permutation(perm, n_);
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (VertexSet e : edges_) edges.push_back(apply(perm, e));
  return Hypergraph(n_, k_, std::move(edges));
}

Bipartition::Bipartition(int n, VertexSet a_side) : n_(n), a_(a_side) {
  if (n < 0 || n > kMaxVertices) throw InvalidInput("bipartition vertex count out of range");
  if (!a_side.is_subset_of(VertexSet::prefix(n))) throw InvalidInput("A side is not inside [0, n)");
}

Bipartition Bipartition::prefix(int n, int a_size) {
  if (a_size < 0 || a_size > n) throw InvalidInput("|A| must lie in [0, n]");
  return Bipartition(n, VertexSet::prefix(a_size));
}

Bipartition Bipartition::relabeled(std::span<const int> perm) const {
  check_permutation(perm, n_);
  return Bipartition(n_, apply(perm, a_));
}

Parity set_parity(const Bipartition& p, VertexSet s) { return p.parity(s); }

std::uint64_t degree(const Hypergraph& h, VertexSet s) {
  if (s.size() > h.k()) throw InvalidQuery("degree query with |S| > k");
  if (!s.is_subset_of(h.vertices())) throw InvalidQuery("degree query with a vertex outside [0, n)");
  std::uint64_t count = 0;
  for (VertexSet e : h.edges()) count += s.is_subset_of(e) ? 1 : 0;
  return count;
}

std::vector<std::uint32_t> degree_table(const Hypergraph& h, int d) {
  if (d < 0 || d > h.k()) throw InvalidQuery("degree table needs 0 <= d <= k");
  const SubsetRanker ranker(h.n(), d);
  if (ranker.count() > kDenseTableCap)
    throw BudgetExceeded("C(" + std::to_string(h.n()) + ", " + std::to_string(d) + ") d-sets exceed the exhaustive cap");
  std::vector<std::uint32_t> table(ranker.count(), 0);
  for (VertexSet e : h.edges()) for_each_subset(e, d, [&](VertexSet s) { ++table[ranker.rank(s)]; });
  return table;
}

DegreeProfile min_d_degree(const Hypergraph& h, int d) {
  if (d < 1 || d > h.k() - 1) throw InvalidQuery("minimum d-degree needs 1 <= d <= k-1");
  if (d > h.n()) throw InvalidQuery("minimum d-degree needs d <= n");
  const auto table = degree_table(h, d);
  const auto it = std::min_element(table.begin(), table.end());
  const auto target = static_cast<std::uint64_t>(it - table.begin());
  DegreeProfile out{d, *it, {}};
  std::uint64_t index = 0;
  for_each_subset(h.vertices(), d, [&](VertexSet s) {
    if (index++ == target) {
      out.argmin_set = s;
      return false;
    }
    return true;
  });
  return out;
}

std::uint64_t edit_distance(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.n() != h2.n() || h1.k() != h2.k()) throw IncompatibleHypergraphs("edit distance needs equal (n, k)");
  const auto a = h1.edges();
  const auto b = h2.edges();
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

}  // namespace hyperham
