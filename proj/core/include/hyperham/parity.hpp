#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperham/extremal.hpp"
#include "hyperham/hypergraph.hpp"
#include "hyperham/solver.hpp"
#include "hyperham/structure.hpp"
#include "hyperham/witness.hpp"

namespace hyperham {

/// b_i = 1 iff the i-th block of a (k/2)-cycle is odd w.r.t. A.
struct BinaryRepresentation {
  std::vector<int> bits;

  std::size_t length() const { return bits.size(); }
  std::string str() const;
};

/// Throws InvalidWitness unless `cycle` is a verified block-form (k/2)-cycle of h.
BinaryRepresentation binary_representation(const Hypergraph& h, const CycleWitness& cycle, const Bipartition& p);

struct EdgeParityProfile {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  bool operator==(const EdgeParityProfile&) const = default;
};

EdgeParityProfile edge_parity_profile(const Hypergraph& h, const Bipartition& p);

enum class CertificateKind {
  all_even_with_a_odd,         ///< only even edges, |A| odd, t even
  pm_cardinality_mismatch,     ///< only odd edges, n/k and |A| of different parity
  all_edges_odd_t_odd,         ///< only odd edges, t odd
  bprime_single_even_clash,    ///< odd edges plus even edges inside A through one apex
};

std::string to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(const std::string& text);

/**
 * Search-free proof that a hypergraph has no Hamilton (k/2)-cycle.
 *
 * The integers are everything the parity argument uses; `form` is the only
 * binary string shape the premise leaves open (empty when none survives at all).
 */
struct ParityCertificate {
  CertificateKind kind = CertificateKind::all_edges_odd_t_odd;
  int n = 0;
  int k = 0;
  int t = 0;
  int a_size = 0;
  int floor_n_over_k = 0;
  bool half_k_odd = false;
  std::optional<int> apex;
  std::string form;

  bool operator==(const ParityCertificate&) const = default;
};

/// Throws NoCertificate unless spec is a member of the extremal family.
ParityCertificate certify_non_hamiltonian(const ExtremalSpec& spec);

/**
 * Replays the certificate against h and p: the edge-parity premise must hold, and
 * every cyclic bit string the premise admits must contradict Σ b_i ≡ |A| (mod 2).
 * Kinds for n ∈ kN also replay the perfect matching count. Never throws.
 */
bool check_certificate(const ParityCertificate& cert, const Hypergraph& h, const Bipartition& p);

/// Which (k/2)+(k/2) splits an even k-set admits.
struct SplitParities {
  bool odd_odd = false;
  bool even_even = false;
  bool operator==(const SplitParities&) const = default;
};

/// Exhaustive over all splits of x. Requires even |x|.
SplitParities split_parities(VertexSet x, const Bipartition& p);

struct PatternOptions {
  bool deterministic = true;
  int jobs = 1;
};

/**
 * (k/2)-path whose block parities spell `pattern` and whose end blocks are
 * α-good w.r.t. `reference`. Blocks are tried in increasing mask order, so the
 * deterministic answer is the least such path. Throws InvalidPattern for a
 * symbol other than 0/1 or a pattern shorter than 2.
 */
std::optional<PathWitness> find_patterned_path(const Hypergraph& h, const Bipartition& p, std::string_view pattern,
                                               const Rational& alpha, const Hypergraph& reference,
                                               PatternOptions options = {});

}  // namespace hyperham
