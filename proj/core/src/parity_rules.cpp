#include "hyperham/parity_rules.hpp"

#include <algorithm>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

constexpr int kCountSlots = 4;  // counts saturate at 3; caps never exceed 2

int saturate(int x) { return std::min(x, kCountSlots - 1); }

// Splits of a k-set meeting A in x vertices into two halves with A-counts (c, x-c).
void split_kinds(int k, int x, bool& even_even, bool& odd_odd) {
  const int half = k / 2;
  even_even = false;
  odd_odd = false;
  for (int c = std::max(0, x - half); c <= std::min(half, x); ++c) {
    if (c % 2 == 0 && (x - c) % 2 == 0) even_even = true;
    if (c % 2 == 1 && (x - c) % 2 == 1) odd_odd = true;
  }
}

std::optional<int> cap_for(std::size_t count, VertexSet common) {
  if (count == 0) return 0;
  if (count == 1) return 1;
  if (!common.empty()) return 2;
  return std::nullopt;
}

}  // namespace

TransitionRules derive_rules(const Hypergraph& h, const Bipartition& p) {
  if (h.k() % 2 != 0) throw InvalidInput("parity rules need even k");
  TransitionRules rules;
  rules.half = h.k() / 2;
  rules.stay_even = rules.stay_odd = rules.flip = false;
  std::size_t stay_edges = 0;
  std::size_t flip_edges = 0;
  VertexSet stay_common = h.vertices();
  VertexSet flip_common = h.vertices();
  for (VertexSet e : h.edges()) {
    const int x = e.intersection_size(p.a_side());
    if (x % 2 == 1) {
      rules.flip = true;
      ++flip_edges;
      flip_common = flip_common & e;
      continue;
    }
    bool ee = false;
    bool oo = false;
    split_kinds(h.k(), x, ee, oo);
    rules.stay_even = rules.stay_even || ee;
    rules.stay_odd = rules.stay_odd || oo;
    if (ee || oo) {
      ++stay_edges;
      stay_common = stay_common & e;
    }
  }
  rules.stay_cap = cap_for(stay_edges, stay_common);
  rules.flip_cap = cap_for(flip_edges, flip_common);
  return rules;
}

CycleParityOracle::CycleParityOracle(TransitionRules rules, int t) : rules_(rules), t_(t) {
  if (rules_.half < 1 || t < 1 || t > kMaxVertices) throw InvalidInput("parity oracle: bad shape");
  const auto slots = static_cast<std::size_t>(t + 1) * 2 * 2 * (kMaxVertices + 1) * kCountSlots * kCountSlots;
  memo_ = std::make_unique<std::atomic<std::int8_t>[]>(slots);
  for (std::size_t i = 0; i < slots; ++i) memo_[i].store(-1, std::memory_order_relaxed);
}

bool CycleParityOracle::step(int from, int to, int& stays, int& flips) const {
  if (from == to) {
    if (!(from == 0 ? rules_.stay_even : rules_.stay_odd)) return false;
    stays = saturate(stays + 1);
    return !rules_.stay_cap || stays <= *rules_.stay_cap;
  }
  if (!rules_.flip) return false;
  flips = saturate(flips + 1);
  return !rules_.flip_cap || flips <= *rules_.flip_cap;
}

bool CycleParityOracle::completion(int r, int current, int first, int a_remaining, int stays_used, int flips_used) {
  if (a_remaining < 0 || a_remaining > r * rules_.half) return false;
  const std::size_t key =
      ((((static_cast<std::size_t>(r) * 2 + current) * 2 + first) * (kMaxVertices + 1) + a_remaining) * kCountSlots +
       saturate(stays_used)) *
          kCountSlots +
      saturate(flips_used);
  auto& slot = memo_[key];
  if (const auto cached = slot.load(std::memory_order_relaxed); cached >= 0) return cached == 1;

  bool ok = false;
  if (r == 0) {
    int s = stays_used;
    int f = flips_used;
    ok = a_remaining == 0 && step(current, first, s, f);
  } else {
    for (int bit = 0; bit < 2 && !ok; ++bit) {
      int s = stays_used;
      int f = flips_used;
      if (!step(current, bit, s, f)) continue;
      for (int c = bit; c <= std::min(rules_.half, a_remaining) && !ok; c += 2)
        ok = completion(r - 1, bit, first, a_remaining - c, s, f);
    }
  }
  slot.store(ok ? 1 : 0, std::memory_order_relaxed);
  return ok;
}

bool CycleParityOracle::any_cycle(int a_total) {
  for (int bit = 0; bit < 2; ++bit)
    for (int c = bit; c <= std::min(rules_.half, a_total); c += 2)
      if (completion(t_ - 1, bit, bit, a_total - c, 0, 0)) return true;
  return false;
}

MatchingParityOracle::MatchingParityOracle(std::vector<int> a_counts, int max_edges, int max_a)
    : a_counts_(std::move(a_counts)), max_a_(max_a) {
  std::sort(a_counts_.begin(), a_counts_.end());
  a_counts_.erase(std::unique(a_counts_.begin(), a_counts_.end()), a_counts_.end());
  const auto slots = static_cast<std::size_t>(max_edges + 1) * (max_a + 1);
  memo_ = std::make_unique<std::atomic<std::int8_t>[]>(slots);
  for (std::size_t i = 0; i < slots; ++i) memo_[i].store(-1, std::memory_order_relaxed);
}

bool MatchingParityOracle::feasible(int r, int a_remaining) {
  if (a_remaining < 0 || a_remaining > max_a_) return false;
  if (r == 0) return a_remaining == 0;
  auto& slot = memo_[static_cast<std::size_t>(r) * (max_a_ + 1) + a_remaining];
  if (const auto cached = slot.load(std::memory_order_relaxed); cached >= 0) return cached == 1;
  bool ok = false;
  for (int c : a_counts_) {
    if (feasible(r - 1, a_remaining - c)) {
      ok = true;
      break;
    }
  }
  slot.store(ok ? 1 : 0, std::memory_order_relaxed);
  return ok;
}

}  // namespace hyperham
