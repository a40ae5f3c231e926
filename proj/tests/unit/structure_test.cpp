#include <gtest/gtest.h>

#include <random>

#include "hyperham/combinatorics.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/extremal.hpp"
#include "hyperham/structure.hpp"
#include "support/oracles.hpp"

using namespace hyperham;

namespace {

Hypergraph make(Variant v, int n, int k, int a) { return build({v, n, k, a, std::nullopt}, {true}); }

// Flips the membership of m distinct random k-sets.
Hypergraph flip_edges(const Hypergraph& h, int m, std::mt19937_64& rng) {
  auto ksets = oracle::all_k_sets(h.n(), h.k());
  std::shuffle(ksets.begin(), ksets.end(), rng);
  Hypergraph out = h;
  for (int i = 0; i < m; ++i) out = out.contains(ksets[i]) ? out.without_edge(ksets[i]) : out.with_edge(ksets[i]);
  return out;
}

// Largest family of 4-subsets of [0, 6) with no forbidden intersection, over all 2^15 subfamilies.
std::size_t brute_force_family_size(int n, int k) {
  const auto ksets = oracle::all_k_sets(n, k);
  const std::size_t m = ksets.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i)
      for (std::size_t j = i + 1; ok && j < m; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U)) ok = !oracle::forbidden((ksets[i] & ksets[j]).size(), k);
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(Closeness, SpecExamples) {
  const auto b = make(Variant::B, 8, 4, 4);
  const auto self = closeness(b, Variant::B, ClosenessMode::exact);
  EXPECT_EQ(self.distance, 0U);
  EXPECT_EQ(self.best_partition.a_side(), VertexSet::prefix(4));

  const auto odd_edge = VertexSet::of({0, 4, 5, 6});
  ASSERT_TRUE(b.contains(odd_edge));
  EXPECT_EQ(closeness(b.without_edge(odd_edge), Variant::B, ClosenessMode::exact).distance, 1U);

  // Not the full C(8,4): other balanced partitions put B-bar much nearer to B.
  const auto bbar = make(Variant::Bbar, 8, 4, 4);
  EXPECT_EQ(distance_to_variant(bbar, Bipartition::prefix(8, 4), Variant::B), 70U);
  const auto c = closeness(bbar, Variant::B, ClosenessMode::exact);
  EXPECT_EQ(c.distance, 30U);
  std::uint64_t oracle = UINT64_MAX;
  for_each_subset(VertexSet::prefix(8), 4, [&](VertexSet a) {
    oracle = std::min(oracle, edit_distance(bbar, build({Variant::B, 8, 4, 4, std::nullopt}, {true}).relabeled([&] {
      std::vector<int> perm;
      for (int v : a.members()) perm.push_back(v);
      for (int v : (VertexSet::prefix(8) - a).members()) perm.push_back(v);
      return perm;
    }())));
  });
  EXPECT_EQ(c.distance, oracle);
  EXPECT_EQ(closeness(bbar, std::nullopt, ClosenessMode::exact).best_variant, Variant::Bbar);
}

TEST(Closeness, EpsilonEquivalent) {
  const auto bbar = make(Variant::Bbar, 8, 4, 4);
  const auto c = closeness(bbar, Variant::B, ClosenessMode::exact);
  EXPECT_EQ(c.epsilon_equivalent, BigRational(30, 4096));
  EXPECT_TRUE(c.is_epsilon_close(Rational(30, 4096)));
  EXPECT_FALSE(c.is_epsilon_close(Rational(29, 4096)));
}

TEST(Closeness, ModesAndLimits) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const auto h = oracle::random_hypergraph(10, 4, 0.5, rng);
    const auto exact = closeness(h, std::nullopt, ClosenessMode::exact);
    const auto local = closeness(h, std::nullopt, ClosenessMode::local_search);
    const auto prefix = closeness(h, std::nullopt, ClosenessMode::balanced_only);
    const auto all = closeness(h, std::nullopt, ClosenessMode::exact, {true, 1});
    EXPECT_TRUE(local.upper_bound);
    EXPECT_FALSE(exact.upper_bound);
    EXPECT_GE(local.distance, exact.distance);
    EXPECT_GE(prefix.distance, exact.distance);
    EXPECT_LE(all.distance, exact.distance);
    EXPECT_EQ(closeness(h, std::nullopt, ClosenessMode::exact, {false, 3}).distance, exact.distance);
  }
  EXPECT_THROW(closeness(Hypergraph(22, 4), Variant::B, ClosenessMode::exact), BudgetExceeded);
  EXPECT_EQ(parse_closeness_mode("balanced-only"), ClosenessMode::balanced_only);
  EXPECT_THROW(parse_closeness_mode("fuzzy"), InvalidInput);
}

TEST(Closeness, SmallFlipsCostExactlyTheirCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + trial % 4;
    const Variant v = trial % 2 ? Variant::B : Variant::Bbar;
    const auto h = flip_edges(make(v, 10, 4, 5), m, rng);
    EXPECT_EQ(closeness(h, v, ClosenessMode::exact).distance, static_cast<std::uint64_t>(m)) << trial;
  }
}

TEST(Classify, SpecExamples) {
  const auto ref = make(Variant::Bbar, 8, 4, 4);
  for (VertexSet s : {VertexSet::of({0}), VertexSet::of({1, 6}), VertexSet::of({2, 3, 7})})
    EXPECT_EQ(classify(s, ref, ref, Rational(0)).kind, SetClassKind::good);

  const auto bad = classify(VertexSet::of({2}), Hypergraph(8, 4), ref, Rational(1, 1000));
  EXPECT_EQ(bad.kind, SetClassKind::bad);
  EXPECT_EQ(bad.present, 0U);
  EXPECT_EQ(bad.missing, degree(ref, VertexSet::of({2})));
}

TEST(Classify, MediumAfterDeletingHalfTheIncidentEdges) {
  const auto ref = make(Variant::Bbar, 8, 4, 4);
  const auto s = VertexSet::of({0});
  std::vector<VertexSet> through;
  for (VertexSet e : ref.edges())
    if (e.contains(0)) through.push_back(e);
  // 0 ∈ A plus one or three more A-vertices
  ASSERT_EQ(through.size(), 19U);
  Hypergraph h = ref;
  for (std::size_t i = 0; i < through.size() / 2; ++i) h = h.without_edge(through[i]);
  const auto c = classify(s, h, ref, Rational(1, 64));  // α·n^3 = 8
  EXPECT_EQ(c.kind, SetClassKind::medium);
  EXPECT_EQ(c.missing, 9U);
  EXPECT_EQ(c.present, 10U);
  EXPECT_EQ(c.missing, oracle::naive_degree(ref, s) - oracle::naive_degree(h, s));
  EXPECT_EQ(classify(s, h, ref, Rational(9, 512)).kind, SetClassKind::good);
  EXPECT_EQ(classify(s, h, ref, Rational(10, 512)).kind, SetClassKind::good_and_bad);
  EXPECT_EQ(classify(s, h, ref, Rational(19, 10 * 512)).kind, SetClassKind::medium);
}

TEST(Classify, MonotoneInAlpha) {
  std::mt19937_64 rng(12);
  const auto ref = make(Variant::Bbar, 8, 4, 4);
  const Rational alphas[] = {Rational(0), Rational(1, 512), Rational(1, 64), Rational(1, 16), Rational(1)};
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = oracle::random_hypergraph(8, 4, 0.5, rng);
    const VertexSet s(rng() & 0xFFU);
    if (s.size() >= 4) continue;
    bool was_good = false;
    for (const auto& a : alphas) {
      const auto kind = classify(s, h, ref, a).kind;
      const bool good = kind == SetClassKind::good || kind == SetClassKind::good_and_bad;
      EXPECT_TRUE(good || !was_good);
      was_good = good;
    }
  }
}

TEST(Classify, RejectsBadInput) {
  const auto ref = Hypergraph::complete(8, 4);
  EXPECT_THROW(classify(VertexSet::prefix(4), ref, ref, Rational(1)), InvalidQuery);
  EXPECT_THROW(classify(VertexSet::of({0}), ref, Hypergraph(9, 4), Rational(1)), IncompatibleHypergraphs);
  EXPECT_THROW(classify(VertexSet::of({0}), ref, ref, Rational(-1)), InvalidInput);
}

TEST(ForbiddenIntersection, SpecExamples) {
  EXPECT_TRUE(forbidden_intersection_ok({VertexSet::of({1, 2, 3, 4}), VertexSet::of({1, 2, 3, 5})}, 4));
  EXPECT_FALSE(forbidden_intersection_ok({VertexSet::of({1, 2, 3, 4}), VertexSet::of({3, 4, 5, 6})}, 4));
  EXPECT_FALSE(forbidden_intersection_ok({VertexSet::of({1, 2, 3, 4}), VertexSet::of({5, 6, 7, 8})}, 4));
  EXPECT_THROW(forbidden_intersection_ok({VertexSet::of({1, 2, 3})}, 4), InvalidInput);
}

TEST(MaxForbiddenFamily, SpecExamples) {
  EXPECT_EQ(max_forbidden_intersection_family(4, 4).size, 1U);
  EXPECT_EQ(max_forbidden_intersection_family(5, 4).size, 5U);
  const auto six = max_forbidden_intersection_family(6, 4);
  EXPECT_TRUE(six.complete);
  EXPECT_EQ(six.size, brute_force_family_size(6, 4));
  EXPECT_EQ(six.size, 5U);
  EXPECT_TRUE(forbidden_intersection_ok(six.family, 4));
}

TEST(MaxForbiddenFamily, BeatsTheFixedCoreFamily) {
  // all k-sets through a fixed (k/2+1)-set: C(n-3, 1) for k = 4
  for (int n = 6; n <= 9; ++n) {
    const auto f = max_forbidden_intersection_family(n, 4);
    EXPECT_TRUE(forbidden_intersection_ok(f.family, 4));
    EXPECT_EQ(f.family.size(), f.size);
    EXPECT_GE(f.size, binomial(n - 3, 1));
  }
  EXPECT_THROW(max_forbidden_intersection_family(20, 6), BudgetExceeded);
}

TEST(ThreeEdges, SpecExamples) {
  const auto t = find_three_edges(Hypergraph::complete(12, 4));
  ASSERT_TRUE(t);
  EXPECT_TRUE((t->first & (t->second | t->third)).empty());
  EXPECT_TRUE(oracle::forbidden((t->second & t->third).size(), 4));
  EXPECT_FALSE(find_three_edges(build_star(12, 4, 0)));
}

TEST(ThreeEdges, MatchesTripleLoopOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_hypergraph(8 + trial % 3, 4, 0.03 + 0.01 * (trial % 5), rng);
    const auto got = find_three_edges(h);
    const auto expected = oracle::naive_three_edges(h);
    ASSERT_EQ(got.has_value(), expected.has_value()) << trial;
    if (got) {
      const auto& [a, b, c] = *expected;
      EXPECT_EQ(*got, (EdgeTriple{a, b, c}));
    }
  }
}

TEST(BridgePair, SpecExamples) {
  const auto p = Bipartition::prefix(12, 6);
  const auto pair = find_bridge_pair(Hypergraph::complete(12, 6), p, Parity::even);
  ASSERT_TRUE(pair);
  EXPECT_TRUE(oracle::forbidden((pair->first & pair->second).size(), 6));
  const auto whole = Hypergraph(12, 6, {VertexSet::prefix(6), VertexSet::prefix(12) - VertexSet::prefix(6)});
  EXPECT_EQ(find_bridge_pair(whole, p, Parity::even),
            (std::pair{VertexSet::prefix(6), VertexSet::prefix(12) - VertexSet::prefix(6)}));

  EXPECT_FALSE(find_bridge_pair(make(Variant::B, 12, 6, 6), p, Parity::even));
  const auto one_odd = make(Variant::Bbar, 12, 6, 6).with_edge(VertexSet::of({0, 6, 7, 8, 9, 10}));
  EXPECT_FALSE(find_bridge_pair(one_odd, p, Parity::odd));
}

TEST(BridgePair, MatchesPairLoopOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 8 + trial % 3;
    const auto h = oracle::random_hypergraph(n, 4, 0.05, rng);
    const Bipartition p(n, VertexSet(rng() & VertexSet::prefix(n).bits()));
    for (Parity side : {Parity::even, Parity::odd})
      EXPECT_EQ(find_bridge_pair(h, p, side), oracle::naive_bridge_pair(h, p.a_side(), side == Parity::odd));
  }
}

TEST(Intersecting, SpecExamples) {
  const auto star = build_star(8, 4, 0);
  EXPECT_TRUE(is_intersecting(star));
  EXPECT_EQ(is_substar(star), 0);

  const Hypergraph pm(8, 4, {VertexSet::prefix(4), VertexSet::of({4, 5, 6, 7})});
  EXPECT_FALSE(is_intersecting(pm));
  EXPECT_FALSE(is_substar(pm));

  std::vector<VertexSet> edges;
  for (VertexSet e : oracle::all_k_sets(8, 4))
    if (e.intersection_size(VertexSet::prefix(5)) >= 3) edges.push_back(e);
  const Hypergraph three_of_five(8, 4, edges);
  bool pairwise = true;
  for (VertexSet a : edges)
    for (VertexSet b : edges) pairwise = pairwise && a.intersects(b);
  EXPECT_TRUE(pairwise);
  EXPECT_TRUE(is_intersecting(three_of_five));
  EXPECT_FALSE(is_substar(three_of_five));

  const Hypergraph shifted(8, 4, {VertexSet::of({2, 3, 4, 5}), VertexSet::of({3, 5, 6, 7})});
  EXPECT_EQ(is_substar(shifted), 3);
}
