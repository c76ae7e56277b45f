// p4tract: exact solvers for edge and vertex deletion to cographs and to
// trivially perfect graphs, plus recognition, instance generation and a
// small benchmark harness.
//
// Exit codes for `solve`: 0 feasible, 1 infeasible, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "p4tract/p4tract.hpp"
#include "p4tract/report.hpp"

namespace {

using namespace p4tract;

double bound_constant(Problem p) {
  switch (p) {
    case Problem::CographEdge: return 2.562;
    case Problem::TpEdge: return 2.450;
    case Problem::CographVertex: return 3.303;
    case Problem::TpVertex: return 3.303;
    case Problem::CographVertexHS: return 3.115;
    case Problem::CographEdgeNaive: return 3.0;
    case Problem::TpEdgeNaive: return 3.0;
  }
  return 0.0;
}

struct SolveArgs {
  std::string problem;
  std::string input;
  int k = -1;
  bool minimize_flag = false;
  std::string report_path;
  int threads = 1;
  bool timing = false;
};

int run_solve(const SolveArgs& args) {
  const auto problem = parse_problem(args.problem);
  if (!problem) {
    std::cerr << "unknown problem '" << args.problem << "'\n";
    return 2;
  }
  if (!args.minimize_flag && args.k < 0) {
    std::cerr << "either --k K (K >= 0) or --minimize is required\n";
    return 2;
  }
  const Graph g = load_instance(args.input);

  SolveOptions opts;
  opts.threads = args.threads;

  RunReport rep;
  rep.problem = problem_name(*problem);
  rep.input_path = args.input;
  rep.input_digest = instance_digest(g);
  rep.n = g.vertex_count();
  rep.m = g.edge_count();

  const auto t0 = std::chrono::steady_clock::now();
  if (args.minimize_flag) {
    MinimizeResult res = minimize(g, *problem, opts);
    rep.k_spec = "min";
    rep.min_k = res.k;
    rep.feasible = true;
    rep.budget_used = res.solution.budget_used;
    rep.solution = std::move(res.solution);
    rep.stats = res.stats;
  } else {
    SolveResult res = solve(g, args.k, *problem, opts);
    rep.k_spec = std::to_string(args.k);
    rep.feasible = res.solution.feasible;
    rep.budget_used = res.solution.budget_used;
    rep.solution = std::move(res.solution);
    rep.stats = res.stats;
  }
  const auto t1 = std::chrono::steady_clock::now();
  if (args.timing) rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  // The deletion set is re-validated against the parsed input before the
  // report leaves the process.
  if (!validate_solution(g, *problem, rep.solution)) {
    std::cerr << "internal error: solution failed validation\n";
    return 2;
  }

  const std::string text = report_to_json(rep).dump(2) + "\n";
  if (args.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.report_path);
    if (!out) {
      std::cerr << "cannot write '" << args.report_path << "'\n";
      return 2;
    }
    out << text;
  }
  return rep.feasible ? 0 : 1;
}

int run_recognize(const std::string& input) {
  const Graph g = load_instance(input);
  std::cout << "input: " << input << "  n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";

  auto cg = check_cograph(g);
  if (auto* w = std::get_if<std::array<int, 4>>(&cg)) {
    std::cout << "cograph: no  (induced P4: " << (*w)[0] << "-" << (*w)[1] << "-" << (*w)[2] << "-" << (*w)[3]
              << ")\n";
  } else {
    std::cout << "cograph: yes\n";
  }

  if (auto c4 = find_induced_c4(g)) {
    std::cout << "trivially-perfect: no  (induced C4: " << (*c4)[0] << "-" << (*c4)[1] << "-" << (*c4)[2] << "-"
              << (*c4)[3] << ")\n";
  } else if (std::holds_alternative<std::array<int, 4>>(cg)) {
    const auto& w = std::get<std::array<int, 4>>(cg);
    std::cout << "trivially-perfect: no  (induced P4: " << w[0] << "-" << w[1] << "-" << w[2] << "-" << w[3]
              << ")\n";
  } else {
    std::cout << "trivially-perfect: yes\n";
  }

  auto dec = p4_sparse_decompose(g);
  if (auto* tree = std::get_if<DecompTree>(&dec)) {
    std::cout << "p4-sparse: yes";
    if (tree->kind == DecompNode::Kind::Spider) {
      const auto& sp = *tree->spider;
      std::cout << "  (spider: " << (sp.kind == SpiderKind::Thin ? "thin" : "thick") << ", |K|=" << sp.body.size()
                << ", |R|=" << sp.head.size() << ")";
    } else {
      int unions = 0, joins = 0, spiders = 0;
      detail::count_nodes(*tree, unions, joins, spiders);
      std::cout << "  (decomposition: " << unions << " union, " << joins << " join, " << spiders
                << " spider nodes)";
    }
    std::cout << "\n";
  } else {
    const auto inst = find_p4_sparse_obstruction(g);
    std::cout << "p4-sparse: no  (" << obstruction_name(inst->kind) << " on";
    for (int v : inst->embedding) std::cout << ' ' << v;
    std::cout << ")\n";
  }

  if (auto ext = find_extended_obstruction(g)) {
    std::cout << "extended-p4-sparse: no  (" << obstruction_name(ext->kind) << " on";
    for (int v : ext->embedding) std::cout << ' ' << v;
    std::cout << ")\n";
  } else {
    std::cout << "extended-p4-sparse: yes\n";
  }
  return 0;
}

struct GenArgs {
  std::string type;
  int n = 0;
  double p = 0.5;
  int k = 0;
  bool thin = false;
  bool thick = false;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& args) {
  SplitRng rng(args.seed);
  Graph g;
  std::string comment = "p4tract gen type=" + args.type + " n=" + std::to_string(args.n) +
                        " seed=" + std::to_string(args.seed);
  if (args.type == "cograph") {
    g = gen_cograph(args.n, rng);
  } else if (args.type == "spider") {
    if (args.thin == args.thick) {
      std::cerr << "spider generation needs exactly one of --thin / --thick\n";
      return 2;
    }
    g = gen_spider(args.n, args.thin ? SpiderKind::Thin : SpiderKind::Thick, rng);
    comment += args.thin ? " kind=thin" : " kind=thick";
  } else if (args.type == "gnp") {
    g = gen_gnp(args.n, args.p, rng);
    comment += " p=" + std::to_string(args.p);
  } else if (args.type == "planted-edge") {
    g = gen_planted_edge(args.n, args.k, rng);
    comment += " k=" + std::to_string(args.k);
  } else if (args.type == "planted-vertex") {
    g = gen_planted_vertex(args.n, args.k, rng);
    comment += " k=" + std::to_string(args.k);
  } else {
    std::cerr << "unknown generator type '" << args.type << "'\n";
    return 2;
  }

  if (args.out.empty()) {
    std::cout << "# " << comment << "\n" << serialize_instance(g);
  } else {
    save_instance(g, args.out, comment);
  }
  return 0;
}

struct OracleArgs {
  std::string problem;
  std::string input;
};

int run_oracle(const OracleArgs& args) {
  const auto problem = parse_problem(args.problem);
  if (!problem || problem == Problem::CographEdgeNaive || problem == Problem::TpEdgeNaive) {
    std::cerr << "oracle problems: cograph-edge, tp-edge, cograph-vertex, cograph-vertex-hs, tp-vertex\n";
    return 2;
  }
  const Graph g = load_instance(args.input);
  const OracleLimits limits = OracleLimits::from_env();
  const DeletionTarget target = problem_target(*problem);
  if (is_edge_problem(*problem)) {
    const auto res = oracle_min_edge_deletion(g, target, {}, limits);
    std::cout << "minimum: " << res.minimum << "\nwitness:";
    for (const Edge& e : res.witness) std::cout << ' ' << e.u << '-' << e.v;
    std::cout << "\nexplored: " << res.explored << "\n";
  } else {
    const auto res = oracle_min_vertex_deletion(g, target, {}, limits);
    std::cout << "minimum: " << res.minimum << "\nwitness:";
    for (int v : res.witness) std::cout << ' ' << v;
    std::cout << "\nexplored: " << res.explored << "\n";
  }
  return 0;
}

int run_rules(const std::string& out_path) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  auto dump_pattern = [](ObstructionKind k) {
    auto arr = nlohmann::ordered_json::array();
    for (const Edge& e : canonical_pattern(k).edges()) arr.push_back({e.u, e.v});
    return arr;
  };
  auto arr = nlohmann::ordered_json::array();
  for (int ki = 0; ki < kObstructionKindCount; ++ki) {
    const auto kind = static_cast<ObstructionKind>(ki);
    for (DeletionMode mode : {DeletionMode::Edge, DeletionMode::Vertex}) {
      for (DeletionTarget target : {DeletionTarget::P4Free, DeletionTarget::P4AndC4Free}) {
        const BranchRuleSet* rs = nullptr;
        try {
          rs = &synthesize_rules(kind, mode, target);
        } catch (const std::invalid_argument&) {
          continue;  // pattern already satisfies this target
        }
        nlohmann::ordered_json entry;
        entry["kind"] = obstruction_name(kind);
        entry["mode"] = deletion_mode_name(mode);
        entry["target"] = deletion_target_name(target);
        entry["pattern_edges"] = dump_pattern(kind);
        auto rules = nlohmann::ordered_json::array();
        if (mode == DeletionMode::Edge) {
          for (const EdgeSet& r : rs->edge_rules) {
            auto rule = nlohmann::ordered_json::array();
            for (const Edge& e : r) rule.push_back({e.u, e.v});
            rules.push_back(std::move(rule));
          }
        } else {
          for (const VertexSet& r : rs->vertex_rules) rules.push_back(r);
        }
        entry["rules"] = std::move(rules);
        arr.push_back(std::move(entry));
      }
    }
  }
  doc["families"] = std::move(arr);
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> problems;
  std::string report_path;
  int threads = 1;
};

int run_bench(const BenchArgs& args) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(args.corpus)) {
    std::cerr << "corpus directory '" << args.corpus << "' does not exist\n";
    return 2;
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(args.corpus))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "corpus directory '" << args.corpus << "' holds no files\n";
    return 2;
  }

  std::vector<Problem> problems;
  for (const auto& name : args.problems) {
    auto p = parse_problem(name);
    if (!p) {
      std::cerr << "unknown problem '" << name << "'\n";
      return 2;
    }
    problems.push_back(*p);
  }

  SolveOptions opts;
  opts.threads = args.threads;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::printf("%-28s %-18s %5s %8s %8s %10s %8s %12s %12s\n", "instance", "problem", "min_k", "nodes", "leaves",
              "bound", "ratio", "naive_nodes", "naive_leaves");
  std::map<Problem, std::vector<double>> node_counts, naive_node_counts;
  for (const auto& file : files) {
    const Graph g = load_instance(file);
    for (Problem p : problems) {
      const MinimizeResult res = minimize(g, p, opts);
      const double bound = std::ceil(std::pow(bound_constant(p), res.k));
      const double ratio = bound > 0 ? static_cast<double>(res.stats.leaves) / bound : 0.0;
      std::optional<MinimizeResult> naive;
      if (p == Problem::CographEdge) naive = minimize(g, Problem::CographEdgeNaive, opts);
      if (p == Problem::TpEdge) naive = minimize(g, Problem::TpEdgeNaive, opts);
      const std::string base = fs::path(file).filename().string();
      std::printf("%-28s %-18s %5d %8llu %8llu %10.0f %8.3f %12s %12s\n", base.c_str(), problem_name(p), res.k,
                  static_cast<unsigned long long>(res.stats.nodes),
                  static_cast<unsigned long long>(res.stats.leaves), bound, ratio,
                  naive ? std::to_string(naive->stats.nodes).c_str() : "-",
                  naive ? std::to_string(naive->stats.leaves).c_str() : "-");
      node_counts[p].push_back(static_cast<double>(res.stats.nodes));
      if (naive) naive_node_counts[p].push_back(static_cast<double>(naive->stats.nodes));
      nlohmann::ordered_json row;
      row["instance"] = base;
      row["problem"] = problem_name(p);
      row["min_k"] = res.k;
      row["nodes"] = res.stats.nodes;
      row["leaves"] = res.stats.leaves;
      row["branch_nodes"] = res.stats.branch_nodes();
      row["subroutine_calls"] = res.stats.subroutine_calls;
      row["bound"] = bound;
      row["leaf_bound_ratio"] = ratio;
      if (naive) {
        row["naive_nodes"] = naive->stats.nodes;
        row["naive_leaves"] = naive->stats.leaves;
      }
      rows.push_back(std::move(row));
    }
  }

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.empty() ? 0.0 : v[v.size() / 2];
  };
  for (auto& [p, counts] : node_counts) {
    if (!naive_node_counts.count(p)) continue;
    std::printf("median nodes %-18s %10.0f   naive %10.0f\n", problem_name(p), median(counts),
                median(naive_node_counts[p]));
  }

  if (!args.report_path.empty()) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["corpus"] = args.corpus;
    doc["rows"] = std::move(rows);
    std::ofstream out(args.report_path);
    if (!out) {
      std::cerr << "cannot write '" << args.report_path << "'\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph deletion to cographs and trivially perfect graphs"};
  app.set_version_flag("--version", std::string("p4tract ") + p4tract::kToolVersion);
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "decide or minimize a deletion problem");
  solve_cmd->add_option("--problem", solve_args.problem, "problem name")->required();
  solve_cmd->add_option("--input", solve_args.input, "instance file")->required();
  solve_cmd->add_option("--k", solve_args.k, "deletion budget");
  solve_cmd->add_flag("--minimize", solve_args.minimize_flag, "search for the smallest feasible budget");
  solve_cmd->add_option("--report", solve_args.report_path, "write the JSON report here instead of stdout");
  solve_cmd->add_option("--threads", solve_args.threads, "explore root branches with this many workers");
  solve_cmd->add_flag("--timing", solve_args.timing, "include wall-clock time in the report");

  std::string recognize_input;
  auto* rec_cmd = app.add_subcommand("recognize", "report class membership with witnesses");
  rec_cmd->add_option("--input", recognize_input, "instance file")->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  gen_cmd->add_option("--type", gen_args.type, "cograph|spider|gnp|planted-edge|planted-vertex")->required();
  gen_cmd->add_option("--n", gen_args.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen_args.p, "edge probability for gnp");
  gen_cmd->add_option("--k", gen_args.k, "plant count for planted types");
  gen_cmd->add_flag("--thin", gen_args.thin, "thin spider");
  gen_cmd->add_flag("--thick", gen_args.thick, "thick spider");
  gen_cmd->add_option("--seed", gen_args.seed, "rng seed")->required();
  gen_cmd->add_option("--out", gen_args.out, "output file (stdout when omitted)");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimum for a deletion problem");
  oracle_cmd->add_option("--problem", oracle_args.problem, "problem name")->required();
  oracle_cmd->add_option("--input", oracle_args.input, "instance file")->required();

  std::string rules_out;
  auto* rules_cmd = app.add_subcommand("rules", "dump the synthesized branching rule families as JSON");
  rules_cmd->add_option("--out", rules_out, "output file (stdout when omitted)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "minimize over a corpus and compare against tree-size bounds");
  bench_cmd->add_option("--corpus", bench_args.corpus, "directory of instance files")->required();
  bench_cmd->add_option("--problems", bench_args.problems, "problem names")->required()->delimiter(',');
  bench_cmd->add_option("--report", bench_args.report_path, "write a JSON report here");
  bench_cmd->add_option("--threads", bench_args.threads, "worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (rec_cmd->parsed()) return run_recognize(recognize_input);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
    if (rules_cmd->parsed()) return run_rules(rules_out);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
