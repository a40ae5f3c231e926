#include "hyperham/witness.hpp"

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

// Blocks of the given size, pairwise disjoint, inside [0, n). Returns their union.
bool disjoint_blocks(const Hypergraph& h, const std::vector<VertexSet>& blocks, int size, VertexSet& covered) {
  covered = VertexSet{};
  for (VertexSet b : blocks) {
    if (b.size() != size || !b.is_subset_of(h.vertices()) || b.intersects(covered)) return false;
    covered = covered | b;
  }
  return true;
}

bool verify_block_cycle(const Hypergraph& h, const CycleWitness& w) {
  const int half = h.k() / 2;
  const auto t = w.blocks.size();
  if (t < 3) return false;
  VertexSet covered;
  if (!disjoint_blocks(h, w.blocks, half, covered) || covered != h.vertices()) return false;
  for (std::size_t i = 0; i < t; ++i)
    if (!h.contains(w.blocks[i] | w.blocks[(i + 1) % t])) return false;
  return true;
}

bool verify_order_cycle(const Hypergraph& h, const CycleWitness& w) {
  const int n = h.n();
  const int k = h.k();
  const int step = k - w.ell;
  if (w.ell < 1 || w.ell >= k || n % step != 0 || static_cast<int>(w.order.size()) != n) return false;
  const int m = n / step;
  if (m < 3) return false;
  VertexSet seen;
  for (int v : w.order) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen = seen.with(v);
  }
  // blocks must be the consecutive segments of the order
  if (static_cast<int>(w.blocks.size()) != m) return false;
  for (int j = 0; j < m; ++j) {
    VertexSet seg;
    for (int q = 0; q < step; ++q) seg = seg.with(w.order[j * step + q]);
    if (seg != w.blocks[j]) return false;
  }
  std::vector<VertexSet> windows(m);
  for (int j = 0; j < m; ++j) {
    VertexSet win;
    for (int q = 0; q < k; ++q) win = win.with(w.order[(j * step + q) % n]);
    if (win.size() != k || !h.contains(win)) return false;
    windows[j] = win;
  }
  for (int j = 0; j < m; ++j)
    if (windows[j].intersection_size(windows[(j + 1) % m]) != w.ell) return false;
  return true;
}

}  // namespace

VertexSet PathWitness::vertices() const {
  VertexSet out;
  for (VertexSet b : blocks) out = out | b;
  return out;
}

bool verify(const Hypergraph& h, const CycleWitness& w) {
  if (h.k() % 2 == 0 && w.ell == h.k() / 2 && w.order.empty()) return verify_block_cycle(h, w);
  if (w.order.empty()) return false;
  return verify_order_cycle(h, w);
}

bool verify(const Hypergraph& h, const PathWitness& w) {
  if (h.k() % 2 != 0 || w.blocks.size() < 2) return false;
  VertexSet covered;
  if (!disjoint_blocks(h, w.blocks, h.k() / 2, covered)) return false;
  for (std::size_t i = 0; i + 1 < w.blocks.size(); ++i)
    if (!h.contains(w.blocks[i] | w.blocks[i + 1])) return false;
  return true;
}

bool verify(const Hypergraph& h, const MatchingWitness& w) {
  if (h.n() % h.k() != 0 || static_cast<int>(w.edges.size()) != h.n() / h.k()) return false;
  VertexSet covered;
  for (VertexSet e : w.edges) {
    if (!h.contains(e) || e.intersects(covered)) return false;
    covered = covered | e;
  }
  return covered == h.vertices();
}

bool verify(const Hypergraph& h, const AbsorbingWitness& w) {
  if (h.k() % 2 != 0 || w.absorbed.size() != h.k() / 2) return false;
  if (w.path.blocks.size() != 5 || !verify(h, w.path) || !verify(h, w.rerouted)) return false;
  if (w.path.vertices().intersects(w.absorbed)) return false;
  if (w.rerouted.vertices() != (w.path.vertices() | w.absorbed)) return false;
  return w.rerouted.first() == w.path.first() && w.rerouted.last() == w.path.last();
}

std::pair<MatchingWitness, MatchingWitness> split_into_matchings(const CycleWitness& w) {
  const auto t = w.blocks.size();
  if (!w.order.empty() || t % 2 != 0) throw InvalidWitness("only block-form cycles with an even number of blocks split");
  MatchingWitness odd_positions;
  MatchingWitness even_positions;
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet e = w.blocks[i] | w.blocks[(i + 1) % t];
    (i % 2 == 0 ? odd_positions : even_positions).edges.push_back(e);
  }
  return {odd_positions, even_positions};
}

}  // namespace hyperham
