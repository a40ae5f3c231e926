// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperham/extremal.hpp"
#include "hyperham/harness/json.hpp"
#include "hyperham/harness/report.hpp"
#include "hyperham/parity.hpp"
#include "hyperham/solver.hpp"
#include "hyperham/structure.hpp"
#include "support/oracles.hpp"

using namespace hyperham;
using harness::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Hamilton cycles collected along the way, for the decomposition check.
std::vector<std::pair<Hypergraph, CycleWitness>> g_cycles;

void keep_cycle(const Hypergraph& h, const CycleWitness& w) {
  if (h.n() % h.k() == 0) g_cycles.emplace_back(h, w);
}

Outcome prop12_suites() {
  int members = 0;
  std::ostringstream bad;
  for (auto [k, n_max] : {std::pair{4, 12}, {6, 15}}) {
    const auto report = harness::run_prop12_suite(k, n_max);
    const auto j = report.to_json();
    for (const auto& row : j["results"]["members"]) {
      ++members;
      const bool row_ok = row["check"].get<bool>() && row["solver"]["decision"] == "no" &&
                          row["solver_unpruned"]["decision"] == "no";
      if (!row_ok) bad << " " << describe(harness::spec_from_json(row["spec"]));
    }
    for (const auto& row : j["results"]["controls"]) {
      if (row["solver"]["witness"].is_null()) continue;
      const auto spec = harness::spec_from_json(row["spec"]);
      keep_cycle(build(spec, {true}), harness::cycle_from_json(row["solver"]["witness"]));
    }
    if (!report.passed || report.undecided) bad << " (suite k=" << k << " not passed)";
  }
  const auto failures = bad.str();
  return {failures.empty(), std::to_string(members) + " members certified and refuted" +
                                (failures.empty() ? "" : "; failing:" + failures)};
}

Outcome threshold_identity() {
  int checked = 0;
  std::ostringstream bad;
  for (int k : {4, 6}) {
    for (int n = 3 * k / 2; n <= 30; n += k / 2) {
      ++checked;
      const auto brute = threshold_bruteforce(n, k, k - 1);
      const auto formula = threshold_codegree(n, k);
      if (static_cast<std::int64_t>(brute.value) != formula)
        bad << " n=" << n << ",k=" << k << ": brute " << brute.value << " (" << describe(brute.argmax) << ") vs formula "
            << formula;
    }
  }
  const auto failures = bad.str();
  return {failures.empty(), std::to_string(checked) + " (n,k) pairs" + (failures.empty() ? "" : "; mismatch:" + failures)};
}

Outcome codegree_formulas() {
  int checked = 0;
  std::ostringstream bad;
  for (int k : {4, 6, 8}) {
    for (int n = 2 * k; n <= 24; n += k / 2) {
      for (int a = k; a <= n - k; ++a) {
        const std::int64_t smaller = std::min(a, n - a);
        const std::pair<Variant, std::int64_t> cases[] = {
            {Variant::Bbar, smaller - k + 1}, {Variant::B, smaller - k + 2}, {Variant::Bprime, smaller - k + 2}};
        for (auto [variant, expected] : cases) {
          const ExtremalSpec spec{variant, n, k, a, variant == Variant::Bprime ? std::optional<int>(0) : std::nullopt};
          const auto got = min_d_degree(build(spec, {true}), k - 1).min_degree;
          ++checked;
          if (static_cast<std::int64_t>(got) != expected) bad << " " << describe(spec) << "=" << got;
        }
      }
    }
  }
  const auto failures = bad.str();
  return {failures.empty(), std::to_string(checked) + " constructions" + (failures.empty() ? "" : "; wrong:" + failures)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  int agree = 0;
  int yes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hypergraph(8, 4, 0.5, rng);
    const Bipartition p(8, VertexSet(rng() & 0xFFU));
    const auto plain = find_hamilton_half_cycle(h);
    SolverOptions pruned;
    pruned.parity_partition = p;
    const auto with_pruning = find_hamilton_half_cycle(h, pruned);
    const bool expected = oracle::naive_half_cycle_exists(h);
    const bool same = (plain.decision == Decision::yes) == expected && plain.decision == with_pruning.decision &&
                      (!plain.witness || verify(h, *plain.witness));
    agree += same;
    if (plain.witness) {
      ++yes;
      keep_cycle(h, *plain.witness);
    }
  }
  return {agree == 100, std::to_string(agree) + "/100 agree (" + std::to_string(yes) + " Hamiltonian)"};
}

Outcome decomposition() {
  std::size_t good = 0;
  for (const auto& [h, w] : g_cycles) {
    const auto [first, second] = split_into_matchings(w);
    bool disjoint = true;
    for (VertexSet e : first.edges)
      for (VertexSet f : second.edges) disjoint = disjoint && e != f;
    good += verify(h, first) && verify(h, second) && disjoint;
  }
  return {good == g_cycles.size() && !g_cycles.empty(),
          std::to_string(good) + "/" + std::to_string(g_cycles.size()) + " cycles split into two perfect matchings"};
}

Outcome binary_invariant() {
  std::mt19937_64 rng(777);
  const std::pair<int, int> shapes[] = {{8, 4}, {10, 4}, {12, 4}, {9, 6}, {12, 6}};
  int cycles = 0;
  int good = 0;
  for (int attempt = 0; cycles < 1000 && attempt < 20000; ++attempt) {
    const auto [n, k] = shapes[attempt % 5];
    const auto perm = oracle::random_permutation(n, rng);
    const auto h = oracle::random_hypergraph(n, k, 0.6, rng).relabeled(perm);
    const auto r = find_hamilton_half_cycle(h);
    if (!r.witness || !verify(h, *r.witness)) continue;
    ++cycles;
    keep_cycle(h, *r.witness);
    const Bipartition p(n, VertexSet(rng() & VertexSet::prefix(n).bits()));
    const auto bits = binary_representation(h, *r.witness, p).bits;
    const auto& blocks = r.witness->blocks;
    bool ok = true;
    int sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const std::size_t next = (i + 1) % bits.size();
      sum += bits[i];
      ok = ok && p.is_odd(blocks[i] | blocks[next]) == (bits[i] != bits[next]);
    }
    good += ok && sum % 2 == p.a_size() % 2;
  }
  return {cycles == 1000 && good == cycles, std::to_string(good) + "/" + std::to_string(cycles) + " cycles"};
}

Outcome split_cases() {
  int cases = 0;
  int good = 0;
  for (int k : {4, 6, 8}) {
    const Bipartition p = Bipartition::prefix(2 * k, k);
    for (int x = 0; x <= k; x += 2) {
      VertexSet set = VertexSet::prefix(x);
      for (int j = 0; j < k - x; ++j) set = set.with(k + j);
      bool odd_odd = false;
      bool even_even = false;
      for_each_subset(set, k / 2, [&](VertexSet half) {
        const bool a = p.is_odd(half);
        const bool b = p.is_odd(set - half);
        odd_odd = odd_odd || (a && b);
        even_even = even_even || (!a && !b);
      });
      const bool k_in_4n = k % 4 == 0;
      const bool claim_odd = (0 < x && x < k) || (x == k && !k_in_4n);
      const bool claim_even = x < k || (x == k && k_in_4n);
      const auto lib = split_parities(set, p);
      ++cases;
      good += odd_odd == claim_odd && even_even == claim_even && lib.odd_odd == odd_odd && lib.even_even == even_even;
    }
  }
  return {good == cases, std::to_string(good) + "/" + std::to_string(cases) + " (k, x) cases"};
}

Outcome witness_oracles() {
  std::mt19937_64 rng(99);
  int triples = 0;
  int triples_found = 0;
  int pairs = 0;
  int pairs_found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 5;
    const auto h = oracle::random_hypergraph(n, 4, 0.02 + 0.02 * (trial % 4), rng);
    const auto got = find_three_edges(h);
    const auto expected = oracle::naive_three_edges(h);
    bool same = got.has_value() == expected.has_value();
    if (same && got) {
      const auto& [a, b, c] = *expected;
      same = *got == EdgeTriple{a, b, c};
    }
    triples += same;
    triples_found += got.has_value();
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 5;
    const auto h = oracle::random_hypergraph(n, 4, 0.04 + 0.03 * (trial % 3), rng);
    const Bipartition p(n, VertexSet(rng() & VertexSet::prefix(n).bits()));
    const Parity side = trial % 2 ? Parity::odd : Parity::even;
    const auto got = find_bridge_pair(h, p, side);
    pairs += got == oracle::naive_bridge_pair(h, p.a_side(), side == Parity::odd);
    pairs_found += got.has_value();
  }
  std::ostringstream detail;
  detail << "three-edges " << triples << "/200 (" << triples_found << " found), bridge pairs " << pairs << "/200 ("
         << pairs_found << " found)";
  return {triples == 200 && pairs == 200, detail.str()};
}

Outcome closeness_sanity() {
  std::mt19937_64 rng(5150);
  int zero = 0;
  for (int n : {8, 10})
    for (Variant v : {Variant::B, Variant::Bbar})
      zero += closeness(build({v, n, 4, n / 2, std::nullopt}, {true}), v, ClosenessMode::exact).distance == 0;
  int exact = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = trial % 2 ? 10 : 8;
    const Variant v = trial % 4 < 2 ? Variant::B : Variant::Bbar;
    const int m = 1 + trial % 4;
    auto ksets = oracle::all_k_sets(n, 4);
    std::shuffle(ksets.begin(), ksets.end(), rng);
    auto h = build({v, n, 4, n / 2, std::nullopt}, {true});
    for (int i = 0; i < m; ++i) h = h.contains(ksets[i]) ? h.without_edge(ksets[i]) : h.with_edge(ksets[i]);
    exact += closeness(h, v, ClosenessMode::exact).distance == static_cast<std::uint64_t>(m);
  }
  return {zero == 4 && exact == 50,
          std::to_string(zero) + "/4 self-distances zero, " + std::to_string(exact) + "/50 flips recovered exactly"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"prop12 suites (k=4 n<=12, k=6 n<=15)", prop12_suites},
      {"codegree threshold identity (k=4,6; n<=30)", threshold_identity},
      {"per-construction codegree formulas (k=4,6,8; n<=24)", codegree_formulas},
      {"solver vs permutation oracle, pruning on = off", oracle_equivalence},
      {"cycle decomposition into perfect matchings", decomposition},
      {"binary representation invariant", binary_invariant},
      {"even k-set split cases", split_cases},
      {"three-edge and bridge-pair witness oracles", witness_oracles},
      {"closeness sanity under edge flips", closeness_sanity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.ok;
    std::printf("%s %d %s: %s [%.1fs]\n", outcome.ok ? "PASS" : "FAIL", index, name, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures;
}
