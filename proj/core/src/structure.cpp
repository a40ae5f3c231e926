#include "hyperham/structure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hyperham/combinatorics.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/parallel.hpp"

namespace hyperham {

namespace {

using boost::multiprecision::cpp_int;

cpp_int power(int base, int exp) {
  cpp_int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  return value;
}

std::uint64_t variant_size(int n, int k, int a, Variant variant) {
  std::uint64_t total = 0;
  for (int i = variant == Variant::B ? 1 : 0; i <= std::min(a, k); i += 2) total += binomial(a, i) * binomial(n - a, k - i);
  return total;
}

std::uint64_t odd_edges(const Hypergraph& h, VertexSet a) {
  std::uint64_t count = 0;
  for (VertexSet e : h.edges()) count += e.intersection_size(a) & 1;
  return count;
}

struct Candidate {
  std::uint64_t distance;
  Variant variant;
};

// Best variant on one partition; B wins ties.
Candidate evaluate(const Hypergraph& h, VertexSet a, std::optional<Variant> variant) {
  const int n = h.n();
  const int k = h.k();
  const std::uint64_t odd = odd_edges(h, a);
  const std::uint64_t edges = h.edge_count();
  const int size = a.size();
  const auto to_b = edges + variant_size(n, k, size, Variant::B) - 2 * odd;
  const auto to_bbar = edges + variant_size(n, k, size, Variant::Bbar) - 2 * (edges - odd);
  if (variant == Variant::B) return {to_b, Variant::B};
  if (variant == Variant::Bbar) return {to_bbar, Variant::Bbar};
  return to_bbar < to_b ? Candidate{to_bbar, Variant::Bbar} : Candidate{to_b, Variant::B};
}

// A-sides searched by exact mode, in increasing mask order. Swapping A and B maps
// B and Bbar to themselves for even k, so vertex 0 may be fixed in A whenever the
// swapped partition stays inside the search space.
std::vector<VertexSet> exact_partitions(int n, bool all_sizes) {
  std::vector<VertexSet> out;
  const VertexSet rest = VertexSet::prefix(n).without(0);
  if (all_sizes) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) out.push_back(VertexSet(m << 1).with(0));
  } else if (n % 2 == 0) {
    for_each_subset(rest, n / 2 - 1, [&](VertexSet s) { out.push_back(s.with(0)); });
  } else {
    for_each_subset(VertexSet::prefix(n), n / 2, [&](VertexSet s) { out.push_back(s); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Closeness make_result(const Hypergraph& h, VertexSet a, Candidate c, bool upper_bound) {
  Closeness out;
  out.distance = c.distance;
  out.best_partition = Bipartition(h.n(), a);
  out.best_variant = c.variant;
  out.epsilon_equivalent = BigRational(cpp_int(c.distance), power(h.n(), h.k()));
  out.upper_bound = upper_bound;
  return out;
}

Closeness local_search(const Hypergraph& h, std::optional<Variant> variant) {
  const int n = h.n();
  VertexSet a = VertexSet::prefix(n / 2);
  Candidate best = evaluate(h, a, variant);

  // Step 0: move single vertices while that helps, like moving misplaced vertices to the other part.
  for (bool moved = true; moved;) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      const VertexSet next = a.contains(v) ? a.without(v) : a.with(v);
      const Candidate c = evaluate(h, next, variant);
      if (c.distance < best.distance) {
        a = next;
        best = c;
        moved = true;
      }
    }
  }
  // Restore balance by the cheapest single moves.
  const int target = a.size() > (n + 1) / 2 ? (n + 1) / 2 : n / 2;
  while (a.size() != target) {
    const bool shrink = a.size() > target;
    std::optional<std::pair<VertexSet, Candidate>> pick;
    for (int v = 0; v < n; ++v) {
      if (a.contains(v) != shrink) continue;
      const VertexSet next = shrink ? a.without(v) : a.with(v);
      const Candidate c = evaluate(h, next, variant);
      if (!pick || c.distance < pick->second.distance) pick.emplace(next, c);
    }
    a = pick->first;
    best = pick->second;
  }
  // Swap hill climbing keeps the partition balanced.
  for (bool improved = true; improved;) {
    improved = false;
    std::optional<std::pair<VertexSet, Candidate>> pick;
    for (int u : a) {
      for (int v = 0; v < n; ++v) {
        if (a.contains(v)) continue;
        const VertexSet next = a.without(u).with(v);
        const Candidate c = evaluate(h, next, variant);
        if (c.distance < (pick ? pick->second.distance : best.distance)) pick.emplace(next, c);
      }
    }
    if (pick) {
      a = pick->first;
      best = pick->second;
      improved = true;
    }
  }
  return make_result(h, a, best, true);
}

// Dense bitset over clique-search vertices.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return words_.size() * 64;
  }
  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }
  void subtract(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MaxClique {
 public:
  MaxClique(std::vector<Bits> adjacency, const Deadline& deadline)
      : adjacency_(std::move(adjacency)), deadline_(deadline) {}

  std::vector<std::size_t> run(std::size_t count) {
    Bits all(count);
    for (std::size_t i = 0; i < count; ++i) all.set(i);
    std::vector<std::size_t> clique;
    if (count > 0) expand(clique, all);
    return best_;
  }
  bool stopped() const { return stopped_; }

 private:
  void expand(std::vector<std::size_t>& clique, Bits candidates) {
    if ((++nodes_ & 255) == 0 && deadline_.passed()) stopped_ = true;
    if (stopped_) return;
    // greedy colouring gives an upper bound for each prefix of the order
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = candidates;
    for (std::size_t c = 1; uncoloured.any(); ++c) {
      Bits q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.lowest();
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(adjacency_[v]);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (clique.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      clique.push_back(v);
      const Bits next = candidates & adjacency_[v];
      if (next.any()) {
        expand(clique, next);
      } else if (clique.size() > best_.size()) {
        best_ = clique;
      }
      clique.pop_back();
      if (stopped_) return;
      candidates.reset(v);
    }
  }

  std::vector<Bits> adjacency_;
  const Deadline& deadline_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

bool forbidden_size(int size, int k) { return size == 0 || 2 * size == k; }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return {num, den};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const BigRational& r) { return r.numerator().str() + "/" + r.denominator().str(); }

ClosenessMode parse_closeness_mode(const std::string& text) {
  if (text == "exact") return ClosenessMode::exact;
  if (text == "balanced-only") return ClosenessMode::balanced_only;
  if (text == "local-search") return ClosenessMode::local_search;
  throw InvalidInput("unknown closeness mode '" + text + "'");
}

std::string to_string(ClosenessMode m) {
  switch (m) {
    case ClosenessMode::exact:
      return "exact";
    case ClosenessMode::balanced_only:
      return "balanced-only";
    case ClosenessMode::local_search:
      return "local-search";
  }
  return "?";
}

bool Closeness::is_epsilon_close(const Rational& eps) const {
  return epsilon_equivalent <= BigRational(cpp_int(eps.numerator()), cpp_int(eps.denominator()));
}

std::uint64_t distance_to_variant(const Hypergraph& h, const Bipartition& p, Variant variant) {
  if (variant != Variant::B && variant != Variant::Bbar) throw InvalidInput("closeness compares against b or bbar");
  if (p.n() != h.n()) throw InvalidInput("partition has the wrong vertex count");
  return evaluate(h, p.a_side(), variant).distance;
}

Closeness closeness(const Hypergraph& h, std::optional<Variant> variant, ClosenessMode mode, ClosenessOptions options) {
  if (h.k() % 2 != 0) throw InvalidInput("closeness to B / Bbar needs even k");
  if (variant && *variant != Variant::B && *variant != Variant::Bbar)
    throw InvalidInput("closeness compares against b or bbar");
  switch (mode) {
    case ClosenessMode::balanced_only: {
      const VertexSet a = VertexSet::prefix(h.n() / 2);
      return make_result(h, a, evaluate(h, a, variant), false);
    }
    case ClosenessMode::local_search:
      return local_search(h, variant);
    case ClosenessMode::exact:
      break;
  }
  if (h.n() > kExactClosenessMaxN)
    throw BudgetExceeded("exact closeness enumerates partitions only up to n = " + std::to_string(kExactClosenessMaxN));
  const auto partitions = exact_partitions(h.n(), options.all_sizes);
  std::vector<Candidate> values(partitions.size());
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (partitions.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, resolve_jobs(options.jobs), [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(partitions.size(), (c + 1) * kChunk); ++i)
      values[i] = evaluate(h, partitions[i], variant);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i].distance < values[best].distance) best = i;
  return make_result(h, partitions[best], values[best], false);
}

std::string to_string(SetClassKind c) {
  switch (c) {
    case SetClassKind::good:
      return "good";
    case SetClassKind::bad:
      return "bad";
    case SetClassKind::medium:
      return "medium";
    case SetClassKind::good_and_bad:
      return "good-and-bad";
  }
  return "?";
}

SetClass classify(VertexSet s, const Hypergraph& h, const Hypergraph& reference, const Rational& alpha) {
  if (h.n() != reference.n() || h.k() != reference.k()) throw IncompatibleHypergraphs("classify needs equal (n, k)");
  if (s.size() >= h.k()) throw InvalidQuery("classify needs |S| < k");
  if (!s.is_subset_of(h.vertices())) throw InvalidQuery("classified set leaves [0, n)");
  if (alpha < 0) throw InvalidInput("alpha must be non-negative");
  SetClass out;
  for (VertexSet e : reference.edges()) {
    if (!s.is_subset_of(e)) continue;
    (h.contains(e) ? out.present : out.missing) += 1;
  }
  const cpp_int bound = cpp_int(alpha.numerator()) * power(h.n(), h.k() - s.size());
  const cpp_int den = alpha.denominator();
  const bool good = cpp_int(out.missing) * den <= bound;
  const bool bad = cpp_int(out.present) * den <= bound;
  out.kind = good && bad ? SetClassKind::good_and_bad
             : good      ? SetClassKind::good
             : bad       ? SetClassKind::bad
                         : SetClassKind::medium;
  return out;
}

bool forbidden_intersection_ok(const std::vector<VertexSet>& family, int k) {
  for (VertexSet e : family)
    if (e.size() != k) throw InvalidInput("family member " + to_string(e) + " does not have k vertices");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (forbidden_size(family[i].intersection_size(family[j]), k)) return false;
  return true;
}

ForbiddenFamily max_forbidden_intersection_family(int n, int k, std::optional<std::chrono::milliseconds> budget) {
  if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw InvalidInput("forbidden family needs 1 <= k <= n <= 64");
  constexpr std::uint64_t kMaxCandidates = 4096;
  if (binomial(n, k) > kMaxCandidates) throw BudgetExceeded("too many candidate k-sets for clique search");
  std::vector<VertexSet> sets;
  for_each_subset(VertexSet::prefix(n), k, [&](VertexSet s) { sets.push_back(s); });
  std::vector<Bits> adjacency(sets.size(), Bits(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && !forbidden_size(sets[i].intersection_size(sets[j]), k)) adjacency[i].set(j);

  const Deadline deadline(budget);
  MaxClique search(std::move(adjacency), deadline);
  auto clique = search.run(sets.size());
  std::sort(clique.begin(), clique.end());
  ForbiddenFamily out;
  out.size = clique.size();
  for (auto i : clique) out.family.push_back(sets[i]);
  out.complete = !search.stopped();
  return out;
}

std::optional<EdgeTriple> find_three_edges(const Hypergraph& h) {
  const auto edges = h.edges();
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (forbidden_size(edges[i].intersection_size(edges[j]), h.k())) pairs.emplace_back(edges[i], edges[j]);
  for (VertexSet e1 : edges)
    for (const auto& [e2, e3] : pairs)
      if (!e1.intersects(e2 | e3)) return EdgeTriple{e1, e2, e3};
  return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> find_bridge_pair(const Hypergraph& h, const Bipartition& p,
                                                                Parity side) {
  if (p.n() != h.n()) throw InvalidInput("partition has the wrong vertex count");
  std::vector<VertexSet> chosen;
  for (VertexSet e : h.edges())
    if (p.parity(e) == side) chosen.push_back(e);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (forbidden_size(chosen[i].intersection_size(chosen[j]), h.k())) return std::pair{chosen[i], chosen[j]};
  return std::nullopt;
}

bool is_intersecting(const Hypergraph& h) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!edges[i].intersects(edges[j])) return false;
  return true;
}

std::optional<int> is_substar(const Hypergraph& h) {
  VertexSet common = h.vertices();
  for (VertexSet e : h.edges()) common = common & e;
  if (common.empty()) return std::nullopt;
  return common.lowest();
}

}  // namespace hyperham
