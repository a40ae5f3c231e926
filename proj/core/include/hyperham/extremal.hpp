#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

/// Members of the parity-obstructed extremal family, plus one exploratory extra.
enum class Variant {
  B,      ///< all odd k-sets
  Bbar,   ///< all even k-sets
  Bprime, ///< all odd k-sets plus the k-subsets of A through the apex
  /// k = 4 only: Bbar plus every 4-set meeting A in 3 vertices and containing {0, 1}.
  /// Never part of the family; buildable only with force.
  BbarPrimeK4,
};

std::string to_string(Variant v);
/// Accepts "b", "bbar", "bprime", "bbar-prime4" (case-insensitive).
Variant parse_variant(const std::string& text);

/// A is always the prefix {0, ..., a_size-1}; apex (Bprime) defaults to 0.
struct ExtremalSpec {
  Variant variant = Variant::B;
  int n = 0;
  int k = 0;
  int a_size = 0;
  std::optional<int> apex;

  int apex_or_default() const { return apex.value_or(0); }
  Bipartition partition() const { return Bipartition::prefix(n, a_size); }
  bool operator==(const ExtremalSpec&) const = default;
};

std::string describe(const ExtremalSpec& spec);

/// True iff spec satisfies the membership conditions of the extremal family.
bool in_family(const ExtremalSpec& spec);

struct BuildOptions {
  /// Build even when the membership parity conditions fail (exploration / negative tests).
  bool force = false;
};

/// Throws InvalidSpec when spec is outside the family (unless forced) or structurally
/// malformed (k odd, n not a multiple of k/2, apex outside A, n > 64).
Hypergraph build(const ExtremalSpec& spec, BuildOptions options = {});

/// All k-sets through `apex`: C(n-1, k-1) edges.
Hypergraph build_star(int n, int k, int apex);

/// Every family member for (n, k), ordered by variant (B, Bbar, Bprime) then |A|.
/// Throws InvalidInput unless k is even, k >= 4 and n is a multiple of k/2.
std::vector<ExtremalSpec> enumerate_family(int n, int k);

/// Closed-form maximum minimum codegree over the family.
std::int64_t threshold_codegree(int n, int k);

struct ThresholdResult {
  std::uint64_t value = 0;
  ExtremalSpec argmax;
};

struct ThresholdOptions {
  int jobs = 1;
  /// Restrict the maximum to the n ∈ kN bullet's hypergraphs (B with n/k-|A| odd, Bbar with |A| odd).
  bool first_class_only = false;
};

/// max over enumerate_family(n, k) of δ_d, by building each member. Ties keep the
/// earliest spec in family order. Requires k/2 <= d <= k-1.
ThresholdResult threshold_bruteforce(int n, int k, int d, ThresholdOptions options = {});

}  // namespace hyperham
