#pragma once

// Seeded generators and naive oracles shared by unit and acceptance tests. The
// oracles deliberately avoid the library's search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham::oracle {

inline Hypergraph random_hypergraph(int n, int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<VertexSet> edges;
  for_each_subset(VertexSet::prefix(n), k, [&](VertexSet e) {
    if (keep(rng)) edges.push_back(e);
  });
  return Hypergraph(n, k, std::move(edges));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// All k-subsets of [0, n), by plain recursion over vertices.
inline std::vector<VertexSet> all_k_sets(int n, int k) {
  std::vector<VertexSet> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(VertexSet::of(chosen));
      return;
    }
    for (int v = next; v < n; ++v) {
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Hamilton (k/2)-cycle by trying every vertex ordering (vertex 0 first) cut into blocks.
inline bool naive_half_cycle_exists(const Hypergraph& h) {
  const int n = h.n();
  const int half = h.k() / 2;
  const int t = n / half;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<VertexSet> blocks(t);
    for (int i = 0; i < n; ++i) blocks[i / half] = blocks[i / half].with(order[i]);
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) ok = h.contains(blocks[i] | blocks[(i + 1) % t]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

inline bool forbidden(int size, int k) { return size == 0 || 2 * size == k; }

inline std::optional<std::tuple<VertexSet, VertexSet, VertexSet>> naive_three_edges(const Hypergraph& h) {
  const auto e = h.edges();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b)
      for (std::size_t c = b + 1; c < e.size(); ++c) {
        if (a == b || a == c) continue;
        if ((e[a] & (e[b] | e[c])).empty() && forbidden((e[b] & e[c]).size(), h.k()))
          return std::tuple{e[a], e[b], e[c]};
      }
  return std::nullopt;
}

inline std::optional<std::pair<VertexSet, VertexSet>> naive_bridge_pair(const Hypergraph& h, VertexSet a_side,
                                                                        bool odd) {
  const auto e = h.edges();
  auto side_ok = [&](VertexSet x) { return ((x & a_side).size() % 2 == 1) == odd; };
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (side_ok(e[i]) && side_ok(e[j]) && forbidden((e[i] & e[j]).size(), h.k())) return std::pair{e[i], e[j]};
  return std::nullopt;
}

// Number of edges of h through s, by scanning every k-set of [0, n) rather than h's edge list.
inline std::uint64_t naive_degree(const Hypergraph& h, VertexSet s) {
  std::uint64_t count = 0;
  for (VertexSet e : all_k_sets(h.n(), h.k()))
    if (s.is_subset_of(e) && h.contains(e)) ++count;
  return count;
}

}  // namespace hyperham::oracle
