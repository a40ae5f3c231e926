#include "hyperham/solver.hpp"

#include <atomic>
#include <chrono>

#include "block_graph.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/parallel.hpp"
#include "hyperham/parity_rules.hpp"

namespace hyperham {

namespace detail {

BlockGraph::BlockGraph(const Hypergraph& h) : half_(h.k() / 2) {
  std::vector<std::pair<VertexSet, VertexSet>> arcs;
  for (VertexSet e : h.edges()) for_each_subset(e, half_, [&](VertexSet s) { arcs.emplace_back(s, e - s); });
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [s, t] : arcs)
    if (blocks_.empty() || blocks_.back() != s) blocks_.push_back(s);
  adjacency_.resize(blocks_.size());
  for (const auto& [s, t] : arcs) {
    // every half of an edge is itself a source block, so the lookup cannot fail
    adjacency_[*index_of(s)].push_back(*index_of(t));
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

}  // namespace detail

namespace {

using detail::BlockGraph;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPollMask = 1023;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

template <class W>
SearchResult<W> finish(std::optional<W> witness, const Deadline& deadline, std::uint64_t nodes, Clock::time_point start) {
  SearchResult<W> out;
  out.decision = witness ? Decision::yes : (deadline.expired() ? Decision::undecided : Decision::no);
  out.witness = std::move(witness);
  out.nodes_explored = nodes;
  out.wall_ms = elapsed_ms(start);
  return out;
}

void require_even_k(const Hypergraph& h) {
  if (h.k() % 2 != 0) throw InvalidInput("(k/2)-structures need even k");
}

// ---------------------------------------------------------------------------
// Hamilton (k/2)-cycles in block form

class HalfCycleSearch {
 public:
  HalfCycleSearch(const Hypergraph& h, const BlockGraph& g, const std::optional<Bipartition>& partition,
                  CycleParityOracle* oracle, const BranchControl& control)
      : h_(h), g_(g), partition_(partition), oracle_(oracle), control_(control), t_(h.n() / g.half()) {}

  std::optional<CycleWitness> run(std::uint32_t first, std::uint32_t second) {
    seq_ = {first};
    const VertexSet l1 = g_.block(first);
    int a_rest = 0;
    int first_bit = 0;
    if (oracle_ != nullptr) {
      first_bit = partition_->is_odd(l1) ? 1 : 0;
      a_rest = partition_->a_size() - l1.intersection_size(partition_->a_side());
    }
    if (!place(second, l1, 0, 0, a_rest, first_bit, first_bit)) return std::nullopt;
    CycleWitness w;
    w.ell = g_.half();
    for (auto i : seq_) w.blocks.push_back(g_.block(i));
    return w;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Appends block `next` after the current tail and continues the search.
  bool place(std::uint32_t next, VertexSet used, int stays, int flips, int a_rest, int first_bit, int tail_bit) {
    ++nodes_;
    if ((nodes_ & kPollMask) == 0 && control_.should_stop()) {
      stopped_ = true;
      return false;
    }
    const VertexSet block = g_.block(next);
    if (oracle_ != nullptr) {
      const int bit = partition_->is_odd(block) ? 1 : 0;
      if (!oracle_->step(tail_bit, bit, stays, flips)) return false;
      a_rest -= block.intersection_size(partition_->a_side());
      const int remaining = t_ - static_cast<int>(seq_.size()) - 1;
      if (!oracle_->completion(remaining, bit, first_bit, a_rest, stays, flips)) return false;
      tail_bit = bit;
    }
    seq_.push_back(next);
    used = used | block;

    if (static_cast<int>(seq_.size()) == t_ - 1) {
      const VertexSet rest = h_.vertices() - used;
      const auto last = g_.index_of(rest);
      if (last && rest > g_.block(seq_[1]) && g_.adjacent(next, *last) && g_.adjacent(*last, seq_[0])) {
        seq_.push_back(*last);
        return true;
      }
    } else {
      for (std::uint32_t nb : g_.neighbors(next)) {
        if (g_.block(nb).intersects(used)) continue;
        if (place(nb, used, stays, flips, a_rest, first_bit, tail_bit)) return true;
        if (stopped_) return false;
      }
    }
    seq_.pop_back();
    return false;
  }

  const Hypergraph& h_;
  const BlockGraph& g_;
  const std::optional<Bipartition>& partition_;
  CycleParityOracle* oracle_;
  const BranchControl& control_;
  int t_;
  std::vector<std::uint32_t> seq_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

// ---------------------------------------------------------------------------
// Generic ℓ-cycles by vertex order (reference implementation)

class VertexOrderSearch {
 public:
  VertexOrderSearch(const Hypergraph& h, int ell, const BranchControl& control)
      : h_(h), ell_(ell), step_(h.k() - ell), control_(control), order_(h.n(), -1) {}

  std::optional<CycleWitness> run(int zero_position) {
    order_.assign(h_.n(), -1);
    order_[zero_position] = 0;
    if (!fill(0, VertexSet::singleton(0))) return std::nullopt;
    return witness();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  CycleWitness witness() const {
    CycleWitness w;
    w.ell = ell_;
    w.order = order_;
    for (int j = 0; j < h_.n() / step_; ++j) {
      VertexSet seg;
      for (int q = 0; q < step_; ++q) seg = seg.with(order_[j * step_ + q]);
      w.blocks.push_back(seg);
    }
    return w;
  }

  // Every non-wrapping window that ends at position q must be an edge.
  bool windows_ok(int q) const {
    const int start = q - (h_.k() - 1);
    if (start < 0 || start % step_ != 0) return true;
    VertexSet win;
    for (int p = start; p <= q; ++p) win = win.with(order_[p]);
    return h_.contains(win);
  }

  bool fill(int q, VertexSet used) {
    while (q < h_.n() && order_[q] >= 0) ++q;
    if (q == h_.n()) return verify(h_, witness());
    for (int v = 1; v < h_.n(); ++v) {
      if (used.contains(v)) continue;
      ++nodes_;
      if ((nodes_ & kPollMask) == 0 && control_.should_stop()) {
        stopped_ = true;
        return false;
      }
      order_[q] = v;
      if (windows_ok(q) && fill(q + 1, used.with(v))) return true;
      order_[q] = -1;
      if (stopped_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  int ell_;
  int step_;
  const BranchControl& control_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

// ---------------------------------------------------------------------------
// Perfect matchings

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, const std::vector<std::vector<VertexSet>>& by_low,
                 const std::optional<Bipartition>& partition, MatchingParityOracle* oracle,
                 const BranchControl& control)
      : h_(h), by_low_(by_low), partition_(partition), oracle_(oracle), control_(control) {}

  std::optional<MatchingWitness> run(VertexSet first) {
    chosen_.clear();
    const int a_rest = partition_ ? partition_->a_size() : 0;
    if (!take(first, VertexSet{}, a_rest)) return std::nullopt;
    return MatchingWitness{chosen_};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool take(VertexSet e, VertexSet used, int a_rest) {
    ++nodes_;
    if ((nodes_ & kPollMask) == 0 && control_.should_stop()) {
      stopped_ = true;
      return false;
    }
    if (oracle_ != nullptr) {
      a_rest -= e.intersection_size(partition_->a_side());
      const int r = (h_.n() - used.size()) / h_.k() - 1;
      if (!oracle_->feasible(r, a_rest)) return false;
    }
    used = used | e;
    chosen_.push_back(e);
    const VertexSet rest = h_.vertices() - used;
    if (rest.empty()) return true;
    for (VertexSet next : by_low_[rest.lowest()]) {
      if (next.intersects(used)) continue;
      if (take(next, used, a_rest)) return true;
      if (stopped_) return false;
    }
    chosen_.pop_back();
    return false;
  }

  const Hypergraph& h_;
  const std::vector<std::vector<VertexSet>>& by_low_;
  const std::optional<Bipartition>& partition_;
  MatchingParityOracle* oracle_;
  const BranchControl& control_;
  std::vector<VertexSet> chosen_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

// ---------------------------------------------------------------------------
// Paths with prescribed ends

class PathSearch {
 public:
  explicit PathSearch(const BlockGraph& g) : g_(g) {}

  // Path start, M_1, ..., M_r, end where the M_i partition `middle`.
  std::optional<PathWitness> find(const Hypergraph& h, VertexSet start, VertexSet end, VertexSet middle) {
    if (middle.empty()) {
      if (!h.contains(start | end)) return std::nullopt;
      return PathWitness{{start, end}};
    }
    const auto s = g_.index_of(start);
    const auto e = g_.index_of(end);
    if (!s || !e) return std::nullopt;
    blocks_ = {start};
    end_ = *e;
    if (!extend(*s, middle)) return std::nullopt;
    blocks_.push_back(end);
    return PathWitness{blocks_};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(std::uint32_t cur, VertexSet middle) {
    for (std::uint32_t nb : g_.neighbors(cur)) {
      const VertexSet b = g_.block(nb);
      if (!b.is_subset_of(middle)) continue;
      ++nodes_;
      blocks_.push_back(b);
      if (b == middle) {
        if (g_.adjacent(nb, end_)) return true;
      } else if (extend(nb, middle - b)) {
        return true;
      }
      blocks_.pop_back();
    }
    return false;
  }

  const BlockGraph& g_;
  std::vector<VertexSet> blocks_;
  std::uint32_t end_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_path_query(const Hypergraph& h, VertexSet start, VertexSet end, VertexSet allowed) {
  require_even_k(h);
  const int half = h.k() / 2;
  if (start.size() != half || end.size() != half) throw InvalidInput("path ends must be (k/2)-sets");
  if (start.intersects(end)) throw InvalidInput("path ends must be disjoint");
  if (!(start | end).is_subset_of(allowed)) throw InvalidInput("allowed set must contain both ends");
  if (!allowed.is_subset_of(h.vertices())) throw InvalidInput("allowed set leaves [0, n)");
  if ((allowed - start - end).size() % half != 0) throw InvalidInput("inner vertex count must be a multiple of k/2");
}

// ---------------------------------------------------------------------------
// Absorbing paths

class AbsorberSearch {
 public:
  AbsorberSearch(const Hypergraph& h, const BlockGraph& g, VertexSet x, const BranchControl& control)
      : h_(h), g_(g), x_(x), control_(control), paths_(g) {}

  std::optional<AbsorbingWitness> run(std::uint32_t first) {
    seq_ = {first};
    if (!grow(g_.block(first) | x_)) return std::nullopt;
    return found_;
  }

  std::uint64_t nodes() const { return nodes_ + paths_.nodes(); }

 private:
  static constexpr std::size_t kBlocks = 5;

  bool grow(VertexSet used) {
    if (seq_.size() == kBlocks) {
      PathWitness p;
      for (auto i : seq_) p.blocks.push_back(g_.block(i));
      const VertexSet inner = (p.vertices() | x_) - p.first() - p.last();
      if (auto q = paths_.find(h_, p.first(), p.last(), inner)) {
        found_ = AbsorbingWitness{x_, std::move(p), std::move(*q)};
        return true;
      }
      return false;
    }
    for (std::uint32_t nb : g_.neighbors(seq_.back())) {
      const VertexSet b = g_.block(nb);
      if (b.intersects(used)) continue;
      ++nodes_;
      if ((nodes_ & kPollMask) == 0 && control_.should_stop()) {
        stopped_ = true;
        return false;
      }
      seq_.push_back(nb);
      if (grow(used | b)) return true;
      seq_.pop_back();
      if (stopped_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  const BlockGraph& g_;
  VertexSet x_;
  const BranchControl& control_;
  PathSearch paths_;
  std::vector<std::uint32_t> seq_;
  AbsorbingWitness found_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::undecided:
      return "undecided";
  }
  return "?";
}

SearchResult<CycleWitness> find_hamilton_half_cycle(const Hypergraph& h, const SolverOptions& options) {
  const auto start = Clock::now();
  require_even_k(h);
  const int half = h.k() / 2;
  if (h.n() % half != 0) throw InvalidInput("a Hamilton (k/2)-cycle needs n divisible by k/2");
  if (h.n() < 3 * half) throw InvalidInput("a Hamilton (k/2)-cycle needs n >= 3k/2 (at least three blocks)");
  if (options.parity_partition && options.parity_partition->n() != h.n())
    throw InvalidInput("parity partition has the wrong vertex count");

  const int t = h.n() / half;
  const Deadline deadline(options.budget);
  const BlockGraph g(h);

  const bool prune = options.parity_pruning && options.parity_partition.has_value();
  std::optional<CycleParityOracle> oracle;
  if (prune) {
    oracle.emplace(derive_rules(h, *options.parity_partition), t);
    if (!oracle->any_cycle(options.parity_partition->a_size())) return finish<CycleWitness>({}, deadline, 0, start);
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> branches;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (!g.block(i).contains(0)) continue;
    for (std::uint32_t j : g.neighbors(i)) branches.emplace_back(i, j);
  }

  std::atomic<std::uint64_t> nodes{0};
  auto found = first_success<CycleWitness>(
      branches.size(), resolve_jobs(options.jobs), options.deterministic, deadline,
      [&](std::size_t b, const BranchControl& control) {
        HalfCycleSearch search(h, g, options.parity_partition, oracle ? &*oracle : nullptr, control);
        auto w = search.run(branches[b].first, branches[b].second);
        nodes += search.nodes();
        return w;
      });
  return finish(found ? std::optional(std::move(found->second)) : std::nullopt, deadline, nodes.load(), start);
}

SearchResult<CycleWitness> find_hamilton_l_cycle(const Hypergraph& h, int ell, const SolverOptions& options,
                                                 bool force_vertex_search) {
  const auto start = Clock::now();
  const int k = h.k();
  if (ell < 1 || ell >= k) throw InvalidInput("ℓ must satisfy 1 <= ℓ < k");
  const int step = k - ell;
  if (h.n() % step != 0) throw InvalidInput("a Hamilton ℓ-cycle needs k-ℓ to divide n");
  if (h.n() / step < 3) throw InvalidInput("a Hamilton ℓ-cycle needs at least three edges");
  if (k % 2 == 0 && ell == k / 2 && !force_vertex_search) return find_hamilton_half_cycle(h, options);

  const Deadline deadline(options.budget);
  std::atomic<std::uint64_t> nodes{0};
  auto found = first_success<CycleWitness>(static_cast<std::size_t>(step), resolve_jobs(options.jobs),
                                           options.deterministic, deadline,
                                           [&](std::size_t p, const BranchControl& control) {
                                             VertexOrderSearch search(h, ell, control);
                                             auto w = search.run(static_cast<int>(p));
                                             nodes += search.nodes();
                                             return w;
                                           });
  return finish(found ? std::optional(std::move(found->second)) : std::nullopt, deadline, nodes.load(), start);
}

SearchResult<MatchingWitness> find_perfect_matching(const Hypergraph& h, const SolverOptions& options) {
  const auto start = Clock::now();
  if (h.n() % h.k() != 0) throw InvalidInput("a perfect matching needs k to divide n");
  if (options.parity_partition && options.parity_partition->n() != h.n())
    throw InvalidInput("parity partition has the wrong vertex count");
  const Deadline deadline(options.budget);

  std::vector<std::vector<VertexSet>> by_low(h.n());
  for (VertexSet e : h.edges()) by_low[e.lowest()].push_back(e);

  const bool prune = options.parity_pruning && options.parity_partition.has_value();
  std::optional<MatchingParityOracle> oracle;
  if (prune) {
    std::vector<int> counts;
    for (VertexSet e : h.edges()) counts.push_back(e.intersection_size(options.parity_partition->a_side()));
    oracle.emplace(std::move(counts), h.n() / h.k(), h.n());
    if (!oracle->feasible(h.n() / h.k(), options.parity_partition->a_size()))
      return finish<MatchingWitness>({}, deadline, 0, start);
  }

  std::atomic<std::uint64_t> nodes{0};
  const auto& roots = by_low[0];
  auto found = first_success<MatchingWitness>(roots.size(), resolve_jobs(options.jobs), options.deterministic, deadline,
                                              [&](std::size_t i, const BranchControl& control) {
                                                MatchingSearch search(h, by_low, options.parity_partition,
                                                                      oracle ? &*oracle : nullptr, control);
                                                auto w = search.run(roots[i]);
                                                nodes += search.nodes();
                                                return w;
                                              });
  return finish(found ? std::optional(std::move(found->second)) : std::nullopt, deadline, nodes.load(), start);
}

std::optional<PathWitness> find_half_path(const Hypergraph& h, VertexSet start, VertexSet end, VertexSet allowed) {
  check_path_query(h, start, end, allowed);
  const BlockGraph g(h);
  PathSearch search(g);
  return search.find(h, start, end, allowed - start - end);
}

std::uint64_t count_connecting_sets(const Hypergraph& h, VertexSet s, VertexSet t, std::optional<int> size, int jobs) {
  require_even_k(h);
  const int half = h.k() / 2;
  const int c_size = size.value_or(3 * half);
  if (c_size < 0 || c_size % half != 0) throw InvalidInput("connecting set size must be a multiple of k/2");
  check_path_query(h, s, t, s | t);
  const BlockGraph g(h);
  std::vector<VertexSet> candidates;
  for_each_subset(h.vertices() - s - t, c_size, [&](VertexSet c) { candidates.push_back(c); });
  std::atomic<std::uint64_t> count{0};
  parallel_for(candidates.size(), resolve_jobs(jobs), [&](std::size_t i) {
    PathSearch search(g);
    if (search.find(h, s, t, candidates[i])) ++count;
  });
  return count.load();
}

SearchResult<AbsorbingWitness> find_absorbing_path(const Hypergraph& h, VertexSet x, const SolverOptions& options) {
  const auto start = Clock::now();
  require_even_k(h);
  if (x.size() != h.k() / 2 || !x.is_subset_of(h.vertices())) throw InvalidInput("absorbed set must be a (k/2)-set");
  const Deadline deadline(options.budget);
  const BlockGraph g(h);
  std::vector<std::uint32_t> roots;
  for (std::uint32_t i = 0; i < g.size(); ++i)
    if (!g.block(i).intersects(x)) roots.push_back(i);

  std::atomic<std::uint64_t> nodes{0};
  auto found = first_success<AbsorbingWitness>(roots.size(), resolve_jobs(options.jobs), options.deterministic,
                                               deadline, [&](std::size_t i, const BranchControl& control) {
                                                 AbsorberSearch search(h, g, x, control);
                                                 auto w = search.run(roots[i]);
                                                 nodes += search.nodes();
                                                 return w;
                                               });
  return finish(found ? std::optional(std::move(found->second)) : std::nullopt, deadline, nodes.load(), start);
}

}  // namespace hyperham
