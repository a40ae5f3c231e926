// hyperham: command-line front end for the toolkit.
//
// Exit codes: 0 success, 1 assertion failure, 2 budget exhausted / undecided,
// 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperham/errors.hpp"
#include "hyperham/extremal.hpp"
#include "hyperham/harness/json.hpp"
#include "hyperham/harness/report.hpp"
#include "hyperham/khg_io.hpp"
#include "hyperham/parity.hpp"
#include "hyperham/solver.hpp"
#include "hyperham/structure.hpp"

namespace {

using namespace hyperham;
using harness::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

struct Global {
  bool fast = false;
  std::optional<long long> budget_ms;
  int jobs = 0;
  bool table = false;
};

// Flattens nested JSON into "a.b[2]: value" lines.
void print_table(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_table(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Global& g, const json& j) {
  if (g.table) {
    print_table(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

SolverOptions solver_options(const Global& g) {
  SolverOptions s;
  s.deterministic = !g.fast;
  if (g.budget_ms) s.budget = std::chrono::milliseconds(*g.budget_ms);
  s.jobs = g.jobs;
  return s;
}

VertexSet parse_set(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const int v = std::stoi(item);
      if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex out of range: " + item);
      out = out.with(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("not a vertex list: '" + text + "'");
    }
  }
  return out;
}

std::string slurp_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return harness::content_digest(ss.str());
}

Hypergraph load(const std::string& path) {
  auto doc = read_khg(path);
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(doc.graph);
}

template <class W>
int decision_exit(const SearchResult<W>& r) {
  return r.decision == Decision::undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on parity-obstructed hypergraphs"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--deterministic,!--fast", [&](std::int64_t count) { g.fast = count < 0; },
               "least witness (default) or any witness");
  app.add_option("--budget-ms", g.budget_ms, "abort searches after this many milliseconds");
  app.add_option("--jobs", g.jobs, "worker threads (default: HYPERHAM_JOBS or 1)");
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", [&](std::int64_t) { g.table = false; }, "JSON output (default)");
  fmt->add_flag("--table", [&](std::int64_t) { g.table = true; }, "flat key: value output");
  app.fallthrough();

  int exit_code = kExitOk;

  // gen
  auto* gen = app.add_subcommand("gen", "build an extremal family member");
  std::string variant_name;
  int n = 0;
  int k = 0;
  int a = 0;
  std::optional<int> apex;
  bool force = false;
  std::string out_path;
  gen->add_option("--variant", variant_name, "b | bbar | bprime | bbar-prime4")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k)->required();
  gen->add_option("--a", a, "|A|")->required();
  gen->add_option("--apex", apex);
  gen->add_flag("--force", force, "build even outside the family");
  gen->add_option("-o,--out", out_path, "output .khg (default stdout)");
  gen->callback([&] {
    const ExtremalSpec spec{parse_variant(variant_name), n, k, a, apex};
    const Hypergraph h = build(spec, BuildOptions{force});
    if (out_path.empty()) {
      std::cout << to_khg(h);
    } else {
      write_khg(out_path, h);
    }
  });

  // solve
  auto* solve = app.add_subcommand("solve", "exhaustive structure search");
  std::string in_path;
  std::string structure = "half-cycle";
  int ell = 0;
  std::optional<int> parity_a;
  std::string start_text;
  std::string end_text;
  solve->add_option("--in", in_path)->required();
  solve->add_option("--structure", structure)->check(CLI::IsMember({"half-cycle", "l-cycle", "pm", "path"}));
  solve->add_option("--l", ell, "overlap for l-cycle");
  solve->add_option("--parity-a", parity_a, "prune by parity w.r.t. A = {0..N-1}");
  solve->add_option("--start", start_text, "path start, e.g. 0,1");
  solve->add_option("--end", end_text, "path end");
  solve->callback([&] {
    const Hypergraph h = load(in_path);
    SolverOptions opts = solver_options(g);
    if (parity_a) opts.parity_partition = Bipartition::prefix(h.n(), *parity_a);
    if (structure == "half-cycle") {
      const auto r = find_hamilton_half_cycle(h, opts);
      emit(g, harness::to_json(r));
      exit_code = decision_exit(r);
    } else if (structure == "l-cycle") {
      const auto r = find_hamilton_l_cycle(h, ell, opts);
      emit(g, harness::to_json(r));
      exit_code = decision_exit(r);
    } else if (structure == "pm") {
      const auto r = find_perfect_matching(h, opts);
      emit(g, harness::to_json(r));
      exit_code = decision_exit(r);
    } else {
      const VertexSet s = parse_set(start_text);
      const VertexSet t = parse_set(end_text);
      const auto w = find_half_path(h, s, t, h.vertices());
      json out{{"decision", w ? "yes" : "no"}};
      out["witness"] = w ? harness::to_json(*w) : json(nullptr);
      emit(g, out);
    }
  });

  // certify
  auto* certify = app.add_subcommand("certify", "parity certificate of non-Hamiltonicity");
  int a_size = 0;
  certify->add_option("--in", in_path)->required();
  certify->add_option("--a-size", a_size, "A = {0..N-1}")->required();
  certify->add_option("--apex", apex);
  certify->callback([&] {
    const Hypergraph h = load(in_path);
    const Bipartition p = Bipartition::prefix(h.n(), a_size);
    json out{{"input_digest", slurp_digest(in_path)}, {"certificate", nullptr}, {"check", false}};
    for (Variant v : {Variant::Bbar, Variant::B, Variant::Bprime}) {
      ExtremalSpec spec{v, h.n(), h.k(), a_size, std::nullopt};
      if (v == Variant::Bprime) spec.apex = apex.value_or(0);
      if (!in_family(spec)) continue;
      const auto cert = certify_non_hamiltonian(spec);
      if (check_certificate(cert, h, p)) {
        out["certificate"] = harness::to_json(cert);
        out["check"] = true;
        break;
      }
    }
    emit(g, out);
    if (!out["check"].get<bool>()) exit_code = kExitAssertion;
  });

  // closeness
  auto* close = app.add_subcommand("closeness", "edit distance to B / Bbar");
  std::string mode_name = "exact";
  bool all_sizes = false;
  std::string eps_text;
  variant_name = "any";
  close->add_option("--in", in_path)->required();
  close->add_option("--variant", variant_name, "b | bbar | any");
  close->add_option("--mode", mode_name)->check(CLI::IsMember({"exact", "balanced-only", "local-search"}));
  close->add_flag("--all-sizes", all_sizes, "exact mode: every |A|, not only balanced");
  close->add_option("--epsilon", eps_text, "also report epsilon-closeness, e.g. 1/100");
  close->callback([&] {
    const Hypergraph h = load(in_path);
    std::optional<Variant> v;
    if (variant_name != "any") v = parse_variant(variant_name);
    const auto c = closeness(h, v, parse_closeness_mode(mode_name), ClosenessOptions{all_sizes, g.jobs});
    json out = harness::to_json(c);
    if (!eps_text.empty()) out["epsilon_close"] = c.is_epsilon_close(parse_rational(eps_text));
    emit(g, out);
  });

  // witness
  auto* witness = app.add_subcommand("witness", "witness finders");
  std::string kind;
  std::string side = "even";
  std::string x_text;
  witness->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"three-edges", "bridge-pair", "ff-family", "absorbing", "connecting"}));
  witness->add_option("--in", in_path);
  witness->add_option("--a-size", a_size);
  witness->add_option("--side", side)->check(CLI::IsMember({"even", "odd"}));
  witness->add_option("--n", n);
  witness->add_option("--k", k);
  witness->add_option("--x", x_text, "absorbed set, e.g. 0,1");
  witness->add_option("--start", start_text);
  witness->add_option("--end", end_text);
  witness->callback([&] {
    json out;
    if (kind == "ff-family") {
      std::optional<std::chrono::milliseconds> budget;
      if (g.budget_ms) budget = std::chrono::milliseconds(*g.budget_ms);
      const auto f = max_forbidden_intersection_family(n, k, budget);
      out = json{{"size", f.size},
                 {"family", harness::to_json(f.family)},
                 {"complete", f.complete},
                 {"premise_ok", forbidden_intersection_ok(f.family, k)}};
      if (!f.complete) exit_code = kExitUndecided;
      emit(g, out);
      return;
    }
    if (in_path.empty()) throw InvalidInput("--in is required for this witness kind");
    const Hypergraph h = load(in_path);
    if (kind == "three-edges") {
      const auto w = find_three_edges(h);
      out["witness"] = w ? harness::to_json(std::vector{w->first, w->second, w->third}) : json(nullptr);
    } else if (kind == "bridge-pair") {
      const auto w = find_bridge_pair(h, Bipartition::prefix(h.n(), a_size), side == "odd" ? Parity::odd : Parity::even);
      out["witness"] = w ? harness::to_json(std::vector{w->first, w->second}) : json(nullptr);
    } else if (kind == "absorbing") {
      const auto r = find_absorbing_path(h, parse_set(x_text), solver_options(g));
      out = harness::to_json(r);
      exit_code = decision_exit(r);
    } else {
      out["count"] = count_connecting_sets(h, parse_set(start_text), parse_set(end_text), std::nullopt, g.jobs);
    }
    emit(g, out);
  });

  // threshold
  auto* threshold = app.add_subcommand("threshold", "degree thresholds over the extremal family");
  int d = 0;
  bool brute = false;
  threshold->add_option("--n", n)->required();
  threshold->add_option("--k", k)->required();
  threshold->add_option("--d", d, "default k-1");
  threshold->add_flag("--brute", brute, "maximize over the family by construction");
  threshold->callback([&] {
    if (d == 0) d = k - 1;
    json out{{"formula", nullptr}, {"brute", nullptr}, {"argmax", nullptr}};
    if (d == k - 1) out["formula"] = threshold_codegree(n, k);
    if (brute || d != k - 1) {
      const auto r = threshold_bruteforce(n, k, d, ThresholdOptions{g.jobs, false});
      out["brute"] = r.value;
      out["argmax"] = harness::to_json(r.argmax);
    }
    emit(g, out);
  });

  // suite
  auto* suite = app.add_subcommand("suite", "reproducible experiment suites");
  std::string suite_name;
  int n_max = 0;
  bool no_cross_check = false;
  std::string golden;
  suite->add_option("--name", suite_name)->required()->check(CLI::IsMember({"prop12", "threshold"}));
  suite->add_option("--k", k)->required();
  suite->add_option("--n-max", n_max)->required();
  suite->add_option("--d", d, "threshold suite: default k-1");
  suite->add_flag("--no-cross-check", no_cross_check, "prop12: skip the unpruned solver runs");
  suite->add_option("--golden", golden, "compare with a stored report, timing ignored");
  suite->add_option("-o,--out", out_path, "write the report here as well");
  suite->callback([&] {
    harness::SuiteOptions opts;
    opts.jobs = g.jobs;
    opts.deterministic = true;
    if (g.budget_ms) opts.budget = std::chrono::milliseconds(*g.budget_ms);
    opts.unpruned_cross_check = !no_cross_check;
    const auto report = suite_name == "prop12" ? harness::run_prop12_suite(k, n_max, opts)
                                               : harness::run_threshold_scan(k, n_max, d == 0 ? k - 1 : d, opts);
    const json j = report.to_json();
    if (!out_path.empty()) std::ofstream(out_path) << j.dump(2) << "\n";
    emit(g, j);
    if (report.undecided) {
      exit_code = kExitUndecided;
    } else if (!report.passed) {
      exit_code = kExitAssertion;
    }
    if (!golden.empty()) {
      std::ifstream in(golden);
      if (!in) throw InvalidInput("cannot open golden file " + golden);
      const json expected = json::parse(in);
      if (harness::strip_timing(expected) != harness::strip_timing(j)) {
        std::cerr << "report differs from golden file " << golden << "\n";
        exit_code = kExitAssertion;
      }
    }
  });

  // bridge
  auto* bridge = app.add_subcommand("bridge", "(k/2)-path with a prescribed parity pattern");
  std::string pattern;
  std::string alpha_text = "1";
  std::string ref = "self";
  bridge->add_option("--in", in_path)->required();
  bridge->add_option("--a-size", a_size)->required();
  bridge->add_option("--pattern", pattern)->required();
  bridge->add_option("--alpha", alpha_text, "goodness threshold for the end blocks, e.g. 1/100");
  bridge->add_option("--ref", ref, "self | b | bbar | path to a .khg");
  bridge->callback([&] {
    const Hypergraph h = load(in_path);
    const Bipartition p = Bipartition::prefix(h.n(), a_size);
    Hypergraph reference = h;
    if (ref == "b" || ref == "bbar") {
      reference = build(ExtremalSpec{parse_variant(ref), h.n(), h.k(), a_size, std::nullopt}, BuildOptions{true});
    } else if (ref != "self") {
      reference = load(ref);
    }
    PatternOptions opts;
    opts.deterministic = !g.fast;
    opts.jobs = g.jobs;
    const auto w = find_patterned_path(h, p, pattern, parse_rational(alpha_text), reference, opts);
    json out{{"pattern", pattern}, {"decision", w ? "yes" : "no"}};
    out["witness"] = w ? harness::to_json(*w) : json(nullptr);
    emit(g, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
