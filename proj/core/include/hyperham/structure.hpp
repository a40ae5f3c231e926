#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "hyperham/extremal.hpp"
#include "hyperham/hypergraph.hpp"

namespace hyperham {

using Rational = boost::rational<std::int64_t>;
using BigRational = boost::rational<boost::multiprecision::cpp_int>;

/// "p/q" or "p"; throws InvalidInput on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const BigRational& r);

enum class ClosenessMode {
  exact,          ///< every balanced partition (n <= 20)
  balanced_only,  ///< only the canonical prefix partition A = {0, ..., floor(n/2)-1}
  local_search,   ///< hill climbing; an upper bound
};

ClosenessMode parse_closeness_mode(const std::string& text);
std::string to_string(ClosenessMode m);

struct ClosenessOptions {
  /// Exact mode: search every |A| instead of balanced partitions only.
  bool all_sizes = false;
  int jobs = 1;
};

struct Closeness {
  std::uint64_t distance = 0;
  Bipartition best_partition{0, VertexSet{}};
  Variant best_variant = Variant::B;
  /// distance / n^k
  BigRational epsilon_equivalent;
  /// Set by local search: the distance is only an upper bound on the minimum.
  bool upper_bound = false;

  /// Within eps * n^k edits of the best variant found.
  bool is_epsilon_close(const Rational& eps) const;
};

/// Largest exact-mode instance.
inline constexpr int kExactClosenessMaxN = 20;

/// Edit distance from h to the B / Bbar hypergraph on partition p (no construction needed).
std::uint64_t distance_to_variant(const Hypergraph& h, const Bipartition& p, Variant variant);

/**
 * Minimum edit distance from h to B or Bbar over the mode's partition space. With
 * `variant` unset both variants are tried and the smaller distance wins (B on ties).
 * Requires even k. Exact mode beyond n = 20 throws BudgetExceeded.
 */
Closeness closeness(const Hypergraph& h, std::optional<Variant> variant, ClosenessMode mode,
                    ClosenessOptions options = {});

enum class SetClassKind { good, bad, medium, good_and_bad };
std::string to_string(SetClassKind c);

struct SetClass {
  SetClassKind kind = SetClassKind::medium;
  /// deg_{H' \ H}(S): reference edges through S missing from h.
  std::uint64_t missing = 0;
  /// deg_{H' ∩ H}(S): reference edges through S present in h.
  std::uint64_t present = 0;
};

/// α-good / α-bad classification of s relative to the reference hypergraph,
/// compared exactly against α·n^{k-|s|}. Requires |s| < k and matching (n, k).
SetClass classify(VertexSet s, const Hypergraph& h, const Hypergraph& reference, const Rational& alpha);

/// Every pair of sets meets in neither 0 nor k/2 vertices. Throws InvalidInput for a set of size != k.
bool forbidden_intersection_ok(const std::vector<VertexSet>& family, int k);

struct ForbiddenFamily {
  std::size_t size = 0;
  std::vector<VertexSet> family;
  /// False when the budget ran out; size is then only a lower bound.
  bool complete = true;
};

/// Largest family of k-subsets of [0, n) with no pairwise intersection of size 0 or k/2,
/// by maximum-clique search. Refuses more than 4096 candidate sets (BudgetExceeded).
ForbiddenFamily max_forbidden_intersection_family(int n, int k,
                                                  std::optional<std::chrono::milliseconds> budget = {});

struct EdgeTriple {
  VertexSet first;
  VertexSet second;
  VertexSet third;
  bool operator==(const EdgeTriple&) const = default;
};

/// Least (e1, e2, e3) in edge order with e1 ∩ (e2 ∪ e3) = ∅, e2 < e3 and |e2 ∩ e3| ∈ {0, k/2}.
std::optional<EdgeTriple> find_three_edges(const Hypergraph& h);

/// Least pair e1 < e2 of edges with the given parity w.r.t. p and |e1 ∩ e2| ∈ {0, k/2}.
std::optional<std::pair<VertexSet, VertexSet>> find_bridge_pair(const Hypergraph& h, const Bipartition& p,
                                                                Parity side);

bool is_intersecting(const Hypergraph& h);
/// Least vertex lying in every edge (0 for an edgeless h), or nullopt.
std::optional<int> is_substar(const Hypergraph& h);

}  // namespace hyperham
