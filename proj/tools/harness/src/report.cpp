#include "hyperham/harness/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>

#include "hyperham/errors.hpp"
#include "hyperham/parallel.hpp"

namespace hyperham::harness {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<int> suite_sizes(int k, int n_max) {
  if (k < 4 || k % 2 != 0) throw InvalidInput("suites need even k >= 4");
  std::vector<int> out;
  for (int n = 3 * k / 2; n <= n_max; n += k / 2) out.push_back(n);
  return out;
}

SolverOptions solver_options(const SuiteOptions& options, std::optional<Bipartition> partition) {
  SolverOptions s;
  s.deterministic = options.deterministic;
  s.budget = options.budget;
  s.parity_partition = std::move(partition);
  s.parity_pruning = s.parity_partition.has_value();
  return s;
}

struct MemberOutcome {
  json row;
  bool passed = true;
  bool undecided = false;
  std::uint64_t nodes = 0;
};

MemberOutcome run_member(const ExtremalSpec& spec, const SuiteOptions& options) {
  MemberOutcome out;
  const Hypergraph h = build(spec);
  const Bipartition p = spec.partition();
  const ParityCertificate cert = certify_non_hamiltonian(spec);
  const bool checked = check_certificate(cert, h, p);
  const auto pruned = find_hamilton_half_cycle(h, solver_options(options, p));
  out.nodes += pruned.nodes_explored;
  out.row = json{{"spec", to_json(spec)},
                 {"certificate", to_json(cert)},
                 {"check", checked},
                 {"solver", to_json(pruned)}};
  out.passed = checked && pruned.decision == Decision::no;
  out.undecided = pruned.decision == Decision::undecided;
  if (options.unpruned_cross_check) {
    const auto plain = find_hamilton_half_cycle(h, solver_options(options, std::nullopt));
    out.nodes += plain.nodes_explored;
    out.row["solver_unpruned"] = to_json(plain);
    out.passed = out.passed && plain.decision == Decision::no;
    out.undecided = out.undecided || plain.decision == Decision::undecided;
  }
  return out;
}

MemberOutcome run_control(const ExtremalSpec& spec, const SuiteOptions& options) {
  MemberOutcome out;
  const Hypergraph h = build(spec, BuildOptions{true});
  const auto result = find_hamilton_half_cycle(h, solver_options(options, spec.partition()));
  out.nodes = result.nodes_explored;
  out.row = json{{"spec", to_json(spec)}, {"in_family", in_family(spec)}, {"solver", to_json(result)}};
  if (result.witness) {
    const auto [first, second] = split_into_matchings(*result.witness);
    const bool ok = verify(h, first) && verify(h, second);
    out.row["decomposition"] = json{{"first", to_json(first)}, {"second", to_json(second)}, {"verified", ok}};
    out.passed = ok;
  }
  out.undecided = result.decision == Decision::undecided;
  return out;
}

std::vector<ExtremalSpec> control_specs(int n, int k) {
  std::vector<ExtremalSpec> out;
  if (n % k != 0) return out;
  for (int a : {2, 2 * (n / 4)}) {
    ExtremalSpec s{Variant::Bbar, n, k, a, std::nullopt};
    if (a > 0 && (out.empty() || out.back().a_size != a)) out.push_back(s);
  }
  return out;
}

}  // namespace

std::string content_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

json ExperimentReport::to_json() const {
  return json{{"command", command},
              {"input_digest", input_digest},
              {"parameters", parameters},
              {"results", results},
              {"wall_ms", wall_ms},
              {"nodes_explored", nodes_explored},
              {"version", version},
              {"passed", passed},
              {"undecided", undecided}};
}

ExperimentReport run_prop12_suite(int k, int n_max, const SuiteOptions& options) {
  const auto start = Clock::now();
  ExperimentReport report;
  report.command = "suite prop12";
  report.parameters = json{{"k", k}, {"n_max", n_max}, {"unpruned_cross_check", options.unpruned_cross_check}};

  std::vector<ExtremalSpec> members;
  std::vector<ExtremalSpec> controls;
  for (int n : suite_sizes(k, n_max)) {
    for (const auto& s : enumerate_family(n, k)) members.push_back(s);
    if (options.controls)
      for (const auto& s : control_specs(n, k)) controls.push_back(s);
  }
  report.input_digest = content_digest(report.parameters.dump());

  std::vector<MemberOutcome> member_out(members.size());
  std::vector<MemberOutcome> control_out(controls.size());
  const int jobs = resolve_jobs(options.jobs);
  parallel_for(members.size(), jobs, [&](std::size_t i) { member_out[i] = run_member(members[i], options); });
  parallel_for(controls.size(), jobs, [&](std::size_t i) { control_out[i] = run_control(controls[i], options); });

  json rows = json::array();
  json control_rows = json::array();
  for (const auto& m : member_out) {
    rows.push_back(m.row);
    report.passed = report.passed && m.passed;
    report.undecided = report.undecided || m.undecided;
    report.nodes_explored += m.nodes;
  }
  for (const auto& c : control_out) {
    control_rows.push_back(c.row);
    report.passed = report.passed && c.passed;
    report.undecided = report.undecided || c.undecided;
    report.nodes_explored += c.nodes;
  }
  report.results = json{{"members", rows}, {"controls", control_rows}};
  report.wall_ms = since(start);
  return report;
}

ExperimentReport run_threshold_scan(int k, int n_max, int d, const SuiteOptions& options) {
  const auto start = Clock::now();
  ExperimentReport report;
  report.command = "suite threshold";
  report.parameters = json{{"k", k}, {"n_max", n_max}, {"d", d}};
  report.input_digest = content_digest(report.parameters.dump());
  json rows = json::array();
  for (int n : suite_sizes(k, n_max)) {
    const auto brute = threshold_bruteforce(n, k, d, ThresholdOptions{options.jobs, false});
    json row{{"n", n}, {"brute", brute.value}, {"argmax", to_json(brute.argmax)}};
    if (d == k - 1) {
      const auto formula = threshold_codegree(n, k);
      row["formula"] = formula;
      row["match"] = formula == static_cast<std::int64_t>(brute.value);
      report.passed = report.passed && row["match"].get<bool>();
    } else {
      row["formula"] = nullptr;
    }
    rows.push_back(row);
  }
  report.results = json{{"rows", rows}};
  report.wall_ms = since(start);
  return report;
}

}  // namespace hyperham::harness
