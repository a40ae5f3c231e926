#include "hyperham/extremal.hpp"

#include <algorithm>
#include <cctype>

#include "hyperham/combinatorics.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/parallel.hpp"

namespace hyperham {

namespace {

bool is_odd(int x) { return (x % 2 + 2) % 2 == 1; }

void check_family_params(int n, int k) {
  if (k < 4 || k % 2 != 0) throw InvalidInput("k must be even and at least 4");
  if (n < 1 || n > kMaxVertices) throw InvalidInput("n must lie in [1, 64]");
  if (n % (k / 2) != 0) throw InvalidInput("n must be a multiple of k/2");
}

void check_structure(const ExtremalSpec& s) {
  if (s.k < 4 || s.k % 2 != 0) throw InvalidSpec("k must be even and at least 4");
  if (s.n < 1 || s.n > kMaxVertices) throw InvalidSpec("n must lie in [1, 64]");
  if (s.a_size < 0 || s.a_size > s.n) throw InvalidSpec("|A| must lie in [0, n]");
  if (s.apex && s.variant != Variant::Bprime) throw InvalidSpec("apex only applies to Bprime");
  if (s.variant == Variant::Bprime && !(s.apex_or_default() >= 0 && s.apex_or_default() < s.a_size))
    throw InvalidSpec("apex must lie in A");
  if (s.variant == Variant::BbarPrimeK4) {
    if (s.k != 4) throw InvalidSpec("bbar-prime4 is defined for k = 4 only");
    if (s.a_size < 2) throw InvalidSpec("bbar-prime4 needs |A| >= 2");
  }
}

// All k-sets of [0, n) whose A-parity equals `odd`, in increasing mask order.
std::vector<VertexSet> parity_edges(int n, int k, VertexSet a, bool odd) {
  std::vector<VertexSet> edges;
  for_each_subset(VertexSet::prefix(n), k, [&](VertexSet e) {
    if (((e.intersection_size(a) & 1) != 0) == odd) edges.push_back(e);
  });
  return edges;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::B:
      return "b";
    case Variant::Bbar:
      return "bbar";
    case Variant::Bprime:
      return "bprime";
    case Variant::BbarPrimeK4:
      return "bbar-prime4";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "b") return Variant::B;
  if (t == "bbar") return Variant::Bbar;
  if (t == "bprime") return Variant::Bprime;
  if (t == "bbar-prime4") return Variant::BbarPrimeK4;
  throw InvalidInput("unknown variant '" + text + "'");
}

std::string describe(const ExtremalSpec& spec) {
  std::string out = to_string(spec.variant) + "(n=" + std::to_string(spec.n) + ",k=" + std::to_string(spec.k) +
                    ",|A|=" + std::to_string(spec.a_size);
  if (spec.variant == Variant::Bprime) out += ",apex=" + std::to_string(spec.apex_or_default());
  return out + ")";
}

bool in_family(const ExtremalSpec& s) {
  if (s.k < 4 || s.k % 2 != 0 || s.n < 1 || s.n > kMaxVertices || s.n % (s.k / 2) != 0) return false;
  if (s.a_size < 0 || s.a_size > s.n) return false;
  const bool multiple_of_k = s.n % s.k == 0;
  const int floor_nk = s.n / s.k;
  switch (s.variant) {
    case Variant::B:
      return multiple_of_k ? is_odd(s.n / s.k - s.a_size) : true;
    case Variant::Bbar:
      return multiple_of_k && is_odd(s.a_size);
    case Variant::Bprime: {
      if (multiple_of_k) return false;
      const int apex = s.apex_or_default();
      if (apex < 0 || apex >= s.a_size) return false;
      return s.k % 4 == 0 ? is_odd(floor_nk - s.a_size) : !is_odd(floor_nk - s.a_size);
    }
    case Variant::BbarPrimeK4:
      return false;
  }
  return false;
}

Hypergraph build(const ExtremalSpec& spec, BuildOptions options) {
  check_structure(spec);
  if (!options.force && !in_family(spec)) throw InvalidSpec(describe(spec) + " is not a member of the extremal family");
  const VertexSet a = VertexSet::prefix(spec.a_size);
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.variant) {
    case Variant::B:
      return Hypergraph(n, k, parity_edges(n, k, a, true));
    case Variant::Bbar:
      return Hypergraph(n, k, parity_edges(n, k, a, false));
    case Variant::Bprime: {
      auto edges = parity_edges(n, k, a, true);
      const int apex = spec.apex_or_default();
      for_each_subset(a.without(apex), k - 1, [&](VertexSet rest) { edges.push_back(rest.with(apex)); });
      return Hypergraph(n, k, std::move(edges));
    }
    case Variant::BbarPrimeK4: {
      auto edges = parity_edges(n, k, a, false);
      const VertexSet pair = VertexSet::of({0, 1});
      for_each_subset(VertexSet::prefix(n), k, [&](VertexSet e) {
        if (e.intersection_size(a) == 3 && pair.is_subset_of(e)) edges.push_back(e);
      });
      return Hypergraph(n, k, std::move(edges));
    }
  }
  throw InvalidSpec("unknown variant");
}

Hypergraph build_star(int n, int k, int apex) {
  if (apex < 0 || apex >= n) throw InvalidInput("apex must lie in [0, n)");
  std::vector<VertexSet> edges;
  for_each_subset(VertexSet::prefix(n).without(apex), k - 1, [&](VertexSet rest) { edges.push_back(rest.with(apex)); });
  return Hypergraph(n, k, std::move(edges));
}

std::vector<ExtremalSpec> enumerate_family(int n, int k) {
  check_family_params(n, k);
  std::vector<ExtremalSpec> out;
  for (Variant v : {Variant::B, Variant::Bbar, Variant::Bprime}) {
    for (int a = 0; a <= n; ++a) {
      ExtremalSpec s{v, n, k, a, std::nullopt};
      if (v == Variant::Bprime) s.apex = 0;
      if (in_family(s)) out.push_back(s);
    }
  }
  return out;
}

std::int64_t threshold_codegree(int n, int k) {
  check_family_params(n, k);
  if (n % k == 0 && (n / 2 - n / k) % 2 == 0) return n / 2 - k + 1;
  return n / 2 - k + 2;
}

ThresholdResult threshold_bruteforce(int n, int k, int d, ThresholdOptions options) {
  check_family_params(n, k);
  if (d < k / 2 || d > k - 1) throw InvalidInput("threshold needs k/2 <= d <= k-1");
  if (options.first_class_only && n % k != 0) throw InvalidInput("the first class exists only for n in kN");
  auto family = enumerate_family(n, k);
  if (options.first_class_only) std::erase_if(family, [](const ExtremalSpec& s) { return s.variant == Variant::Bprime; });
  if (family.empty()) throw InvalidInput("empty extremal family");

  std::vector<std::uint64_t> values(family.size());
  parallel_for(family.size(), resolve_jobs(options.jobs),
               [&](std::size_t i) { values[i] = min_d_degree(build(family[i]), d).min_degree; });
  const auto it = std::max_element(values.begin(), values.end());  // first maximum
  return {*it, family[static_cast<std::size_t>(it - values.begin())]};
}

}  // namespace hyperham
