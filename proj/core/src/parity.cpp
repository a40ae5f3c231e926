#include "hyperham/parity.hpp"

#include <array>
#include <set>
#include <tuple>

#include "block_graph.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/parallel.hpp"

namespace hyperham {

namespace {

// Cyclic bit strings of length t over the allowed transitions; stays are capped
// when `stay_cap` is set. True iff one of them has Σ b_i ≡ a_parity (mod 2).
bool admissible_string_exists(int t, bool stay_even, bool stay_odd, bool flip, std::optional<int> stay_cap,
                              int a_parity) {
  // state: (first bit, current bit, stays used (saturated at 3), running parity)
  using State = std::tuple<int, int, int, int>;
  std::set<State> states;
  for (int b = 0; b < 2; ++b) states.emplace(b, b, 0, b);
  auto step = [&](int from, int to, int stays) -> std::optional<int> {
    if (from != to) return flip ? std::optional(stays) : std::nullopt;
    if (!(from == 0 ? stay_even : stay_odd)) return std::nullopt;
    const int next = std::min(stays + 1, 3);
    if (stay_cap && next > *stay_cap) return std::nullopt;
    return next;
  };
  for (int i = 1; i < t; ++i) {
    std::set<State> next;
    for (const auto& [first, cur, stays, sum] : states)
      for (int b = 0; b < 2; ++b)
        if (auto s = step(cur, b, stays)) next.emplace(first, b, *s, sum ^ b);
    states = std::move(next);
  }
  for (const auto& [first, cur, stays, sum] : states)
    if (step(cur, first, stays) && sum == a_parity) return true;
  return false;
}

std::string alternating(int t, int start) {
  std::string out;
  for (int i = 0; i < t; ++i) out += static_cast<char>('0' + ((start + i) & 1));
  return out;
}

bool shape_matches(const ParityCertificate& c, const Hypergraph& h, const Bipartition& p) {
  if (c.k < 4 || c.k % 2 != 0 || h.n() != c.n || h.k() != c.k || p.n() != c.n) return false;
  if (c.n % (c.k / 2) != 0 || c.t != 2 * c.n / c.k || c.t < 3) return false;
  return p.a_size() == c.a_size && c.floor_n_over_k == c.n / c.k && c.half_k_odd == ((c.k / 2) % 2 == 1);
}

}  // namespace

std::string BinaryRepresentation::str() const {
  std::string out;
  for (int b : bits) out += static_cast<char>('0' + b);
  return out;
}

BinaryRepresentation binary_representation(const Hypergraph& h, const CycleWitness& cycle, const Bipartition& p) {
  if (h.k() % 2 != 0 || cycle.ell != h.k() / 2 || !cycle.order.empty() || !verify(h, cycle))
    throw InvalidWitness("binary representation needs a verified block-form (k/2)-cycle");
  if (p.n() != h.n()) throw InvalidInput("partition has the wrong vertex count");
  BinaryRepresentation out;
  for (VertexSet block : cycle.blocks) out.bits.push_back(p.is_odd(block) ? 1 : 0);
  return out;
}

EdgeParityProfile edge_parity_profile(const Hypergraph& h, const Bipartition& p) {
  EdgeParityProfile out;
  for (VertexSet e : h.edges()) (p.is_odd(e) ? out.odd : out.even) += 1;
  return out;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::all_even_with_a_odd:
      return "all-even-with-|A|-odd";
    case CertificateKind::pm_cardinality_mismatch:
      return "pm-cardinality-mismatch";
    case CertificateKind::all_edges_odd_t_odd:
      return "all-edges-odd-t-odd";
    case CertificateKind::bprime_single_even_clash:
      return "bprime-single-even-parity-clash";
  }
  return "?";
}

CertificateKind parse_certificate_kind(const std::string& text) {
  for (auto kind : {CertificateKind::all_even_with_a_odd, CertificateKind::pm_cardinality_mismatch,
                    CertificateKind::all_edges_odd_t_odd, CertificateKind::bprime_single_even_clash})
    if (to_string(kind) == text) return kind;
  throw InvalidInput("unknown certificate kind '" + text + "'");
}

ParityCertificate certify_non_hamiltonian(const ExtremalSpec& spec) {
  if (!in_family(spec)) throw NoCertificate(describe(spec) + " is not a member of the extremal family");
  ParityCertificate c;
  c.n = spec.n;
  c.k = spec.k;
  c.t = 2 * spec.n / spec.k;
  c.a_size = spec.a_size;
  c.floor_n_over_k = spec.n / spec.k;
  c.half_k_odd = (spec.k / 2) % 2 == 1;
  const bool multiple_of_k = spec.n % spec.k == 0;
  switch (spec.variant) {
    case Variant::Bbar:
      c.kind = CertificateKind::all_even_with_a_odd;
      break;
    case Variant::B:
      c.kind = multiple_of_k ? CertificateKind::pm_cardinality_mismatch : CertificateKind::all_edges_odd_t_odd;
      if (multiple_of_k) c.form = alternating(c.t, 0);
      break;
    case Variant::Bprime: {
      c.kind = CertificateKind::bprime_single_even_clash;
      c.apex = spec.apex_or_default();
      // one stay between two blocks inside A (parity of k/2), then strict alternation
      const int stay = c.half_k_odd ? 1 : 0;
      c.form = std::string(2, static_cast<char>('0' + stay)) + alternating(c.t - 2, 1 - stay);
      break;
    }
    case Variant::BbarPrimeK4:
      throw NoCertificate("bbar-prime4 has no certificate");
  }
  return c;
}

bool check_certificate(const ParityCertificate& cert, const Hypergraph& h, const Bipartition& p) {
  if (!shape_matches(cert, h, p)) return false;
  const auto profile = edge_parity_profile(h, p);
  const int a_parity = cert.a_size & 1;
  const bool multiple_of_k = cert.n % cert.k == 0;

  switch (cert.kind) {
    case CertificateKind::all_even_with_a_odd:
      if (profile.odd != 0 || !multiple_of_k) return false;
      // a perfect matching of even edges meets A evenly
      if (a_parity == 0) return false;
      return !admissible_string_exists(cert.t, true, true, false, std::nullopt, a_parity);
    case CertificateKind::pm_cardinality_mismatch:
      if (profile.even != 0 || !multiple_of_k) return false;
      // n/k odd edges meet A in a number of parity n/k
      if ((cert.n / cert.k & 1) == a_parity) return false;
      return !admissible_string_exists(cert.t, false, false, true, std::nullopt, a_parity);
    case CertificateKind::all_edges_odd_t_odd:
      if (profile.even != 0) return false;
      return !admissible_string_exists(cert.t, false, false, true, std::nullopt, a_parity);
    case CertificateKind::bprime_single_even_clash: {
      if (!cert.apex || !p.a_side().contains(*cert.apex)) return false;
      for (VertexSet e : h.edges())
        if (!p.is_odd(e) && !(e.is_subset_of(p.a_side()) && e.contains(*cert.apex))) return false;
      // halves of an edge inside A have parity k/2; the shared apex allows at most two such edges
      return !admissible_string_exists(cert.t, !cert.half_k_odd, cert.half_k_odd, true, 2, a_parity);
    }
  }
  return false;
}

SplitParities split_parities(VertexSet x, const Bipartition& p) {
  if (x.size() % 2 != 0) throw InvalidInput("split parities need a set of even size");
  SplitParities out;
  for_each_subset(x, x.size() / 2, [&](VertexSet half) {
    const bool a = p.is_odd(half);
    const bool b = p.is_odd(x - half);
    if (a && b) out.odd_odd = true;
    if (!a && !b) out.even_even = true;
  });
  return out;
}

std::optional<PathWitness> find_patterned_path(const Hypergraph& h, const Bipartition& p, std::string_view pattern,
                                               const Rational& alpha, const Hypergraph& reference,
                                               PatternOptions options) {
  for (char c : pattern)
    if (c != '0' && c != '1') throw InvalidPattern("pattern symbols must be 0 or 1");
  if (pattern.size() < 2) throw InvalidPattern("pattern needs at least two blocks");
  if (h.k() % 2 != 0) throw InvalidInput("(k/2)-paths need even k");
  if (p.n() != h.n()) throw InvalidInput("partition has the wrong vertex count");
  if (reference.n() != h.n() || reference.k() != h.k()) throw IncompatibleHypergraphs("reference needs equal (n, k)");

  const detail::BlockGraph g(h);
  const auto m = pattern.size();
  std::vector<int> bit(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) bit[i] = p.is_odd(g.block(i)) ? 1 : 0;
  auto good = [&](std::uint32_t i) {
    const auto kind = classify(g.block(i), h, reference, alpha).kind;
    return kind == SetClassKind::good || kind == SetClassKind::good_and_bad;
  };
  std::vector<char> good_end(g.size(), 0);
  const int last_bit = pattern.back() - '0';
  for (std::uint32_t i = 0; i < g.size(); ++i)
    if (bit[i] == last_bit) good_end[i] = good(i) ? 1 : 0;

  std::vector<std::uint32_t> roots;
  for (std::uint32_t i = 0; i < g.size(); ++i)
    if (bit[i] == pattern.front() - '0' && (last_bit == bit[i] ? good_end[i] : good(i))) roots.push_back(i);

  const Deadline no_deadline;
  auto found = first_success<PathWitness>(
      roots.size(), resolve_jobs(options.jobs), options.deterministic, no_deadline,
      [&](std::size_t r, const BranchControl& control) -> std::optional<PathWitness> {
        std::vector<std::uint32_t> seq{roots[r]};
        std::uint64_t nodes = 0;
        bool stopped = false;
        auto dfs = [&](auto&& self, VertexSet used) -> bool {
          if (seq.size() == m) return true;
          const int want = pattern[seq.size()] - '0';
          const bool last = seq.size() + 1 == m;
          for (std::uint32_t nb : g.neighbors(seq.back())) {
            if (bit[nb] != want || g.block(nb).intersects(used) || (last && !good_end[nb])) continue;
            if ((++nodes & 1023) == 0 && control.should_stop()) stopped = true;
            if (stopped) return false;
            seq.push_back(nb);
            if (self(self, used | g.block(nb))) return true;
            seq.pop_back();
          }
          return false;
        };
        if (!dfs(dfs, g.block(roots[r]))) return std::nullopt;
        PathWitness w;
        for (auto i : seq) w.blocks.push_back(g.block(i));
        return w;
      });
  if (!found) return std::nullopt;
  return std::move(found->second);
}

}  // namespace hyperham
