// contagion: command-line front end for the percolation engine, the solvers,
// the graph generators and the theorem checkers.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contagion/contagion.hpp"

namespace {

using namespace contagion;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

VertexSet parse_seed_set(const std::string& csv, std::size_t n) {
  VertexSet seed(n);
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorKind::parse, "bad vertex id '" + item + "' in seed set");
    seed.insert(static_cast<Vertex>(v));
  }
  return seed;
}

void print_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s.members()) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

struct Options {
  std::string graph_path;
  std::string rho = "1/2";
  std::string seed_set;
  std::string method = "exact";
  std::size_t trials = 1000;
  std::uint64_t rng_seed = 1;
  std::string eps = "1/10";
  std::string csv_path;
  bool trace = false;
  std::size_t limit = default_component_limit;

  // gen
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 2;
  double edge_prob = 0.3;
  std::string out_path;

  // verify
  std::string check;
  std::string mode = "exact";
  std::size_t count = 100;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::vector<std::string> rhos;
  std::string corpus_family = "random-connected";
  bool tree_bound = false;
  bool thm3 = false;
  unsigned threads = 0;
};

int cmd_percolate(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto phi = make_proportional(g, parse_rational(o.rho));
  const auto trace = percolate(g, phi, parse_seed_set(o.seed_set, g.order()));
  const auto final_set = trace.final_set();
  if (o.trace) trace.dump(std::cout);
  std::cout << "infected: " << final_set.size() << '/' << g.order() << '\n';
  std::cout << "rounds: " << trace.last_round() << '\n';
  std::cout << "contagious: " << (final_set.size() == g.order() ? "yes" : "no") << '\n';
  return exit_ok;
}

int cmd_solve(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const Rational rho = parse_rational(o.rho);
  const auto phi = make_proportional(g, rho);
  SolveResult r;
  switch (parse_method(o.method)) {
    case Method::exact: r = exact_min_contagious(g, phi, o.limit); break;
    case Method::random_order_full: r = random_order_full(g, phi, o.trials, o.rng_seed); break;
    case Method::random_order_restricted: r = random_order_restricted(g, phi, o.trials, o.rng_seed); break;
    case Method::greedy: r = greedy_baseline(g, phi); break;
  }
  std::cout << "method: " << to_string(r.method) << '\n';
  std::cout << "size: " << r.size << '\n';
  if (r.trials_used > 0) std::cout << "trials: " << r.trials_used << '\n';
  std::cout << "set: ";
  print_set(std::cout, r.set);
  if (o.trace) r.certificate.dump(std::cout);
  return exit_ok;
}

int cmd_bound(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const Rational rho = parse_rational(o.rho);
  const auto phi = make_proportional(g, rho);
  std::cout << "n: " << g.order() << '\n';
  std::cout << "eq1: " << to_string(acker_bound(g, phi)) << '\n';
  std::cout << "eq2: " << to_string(cordasco_bound(g, phi)) << '\n';
  std::cout << "two_rho_n: " << to_string(2 * rho * g.order()) << '\n';
  if (rho > 0) {
    const auto classes = classify_degrees(g, rho);
    std::cout << "v1: " << classes.v1.size() << " v2: " << classes.v2.size()
              << " v_ge2: " << classes.v_ge2.size() << " m12: " << classes.m12 << '\n';
    std::cout << "expected_restricted: " << to_string(expected_restricted_size(g, rho)) << '\n';
  }
  return exit_ok;
}

int cmd_gen(const Options& o) {
  Graph g;
  const std::string& f = o.family;
  if (f == "complete") g = complete_graph(o.n);
  else if (f == "cycle") g = cycle_graph(o.n);
  else if (f == "path") g = path_graph(o.n);
  else if (f == "star") g = star_with_matching(o.n);
  else if (f == "two-level-tree") g = balanced_two_level_tree(o.d).graph;
  else if (f == "gadget") g = gadget_chain(GadgetParams(parse_rational(o.rho), o.k)).graph;
  else if (f == "random-connected") g = random_connected_graph(o.n, o.edge_prob, o.rng_seed);
  else if (f == "random-tree") g = random_tree(o.n, o.rng_seed);
  else throw Error(ErrorKind::invalid_argument, "unknown family '" + f + "'");

  if (o.out_path.empty()) {
    write_edge_list(std::cout, g);
    return exit_ok;
  }
  std::ofstream out(o.out_path);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + o.out_path + "' for writing");
  write_edge_list(out, g);
  if (!out) throw Error(ErrorKind::io, "failed writing '" + o.out_path + "'");
  return exit_ok;
}

int report(const TheoremCheckOutcome& outcome, bool hard) {
  std::cout << outcome << '\n';
  return (outcome.satisfied || !hard) ? exit_ok : exit_check_failed;
}

int cmd_verify(const Options& o) {
  const std::string& c = o.check;
  if (c == "thm2") return report(check_theorem2(load_graph(o.graph_path), parse_rational(o.rho), o.limit), true);
  if (c == "thm3")
    return report(check_theorem3(load_graph(o.graph_path), parse_rational(o.rho), parse_rational(o.eps), o.limit),
                  false);
  if (c == "obs1") return report(check_obs1(parse_rational(o.rho), o.limit), true);
  if (c == "obs3") return report(check_obs3(o.d, o.limit), true);
  if (c == "prop31") {
    const auto mode = o.mode == "structural" ? CheckMethod::structural : CheckMethod::exact;
    if (o.mode != "structural" && o.mode != "exact")
      throw Error(ErrorKind::invalid_argument, "mode must be exact or structural");
    return report(check_prop31(GadgetParams(parse_rational(o.rho), o.k), mode, o.limit), true);
  }
  if (c == "corpus") {
    CorpusSpec spec;
    if (o.corpus_family == "random-tree") spec.family = CorpusFamily::random_tree;
    else if (o.corpus_family != "random-connected")
      throw Error(ErrorKind::invalid_argument, "unknown corpus family '" + o.corpus_family + "'");
    spec.count = o.count;
    spec.n_min = o.n_min;
    spec.n_max = o.n_max;
    spec.edge_prob = o.edge_prob;
    if (!o.rhos.empty()) {
      spec.rhos.clear();
      for (const auto& r : o.rhos) spec.rhos.push_back(parse_rational(r));
    }
    spec.rng_seed = o.rng_seed;
    spec.trials = o.trials;
    spec.limit = o.limit;
    spec.threads = o.threads;
    CorpusChecks checks;
    checks.tree_bound = o.tree_bound;
    if (o.thm3) checks.thm3_eps = parse_rational(o.eps);

    CorpusSummary summary;
    if (o.csv_path.empty() || o.csv_path == "-") summary = run_corpus(spec, checks, std::cout);
    else summary = run_corpus(spec, checks, o.csv_path);
    for (const auto& m : summary.messages) std::cerr << m << '\n';
    std::cerr << "rows: " << summary.rows << " satisfied: " << summary.satisfied
              << " violations: " << summary.violations << " regime-noted: " << summary.regime_noted << '\n';
    return summary.ok() ? exit_ok : exit_check_failed;
  }
  throw Error(ErrorKind::invalid_argument, "unknown check '" + c + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-proportional bootstrap percolation toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", o.graph_path, "Edge-list file ('-' for stdin)");
    if (required) opt->required();
  };
  auto add_rho = [&](CLI::App* sub) { sub->add_option("--rho", o.rho, "Proportion rho as P/Q")->capture_default_str(); };

  auto* percolate_cmd = app.add_subcommand("percolate", "Run the infection process from a seed set");
  add_graph(percolate_cmd, true);
  add_rho(percolate_cmd);
  percolate_cmd->add_option("--seed-set", o.seed_set, "Comma-separated seed vertex ids");
  percolate_cmd->add_flag("--trace", o.trace, "Print one line per round");

  auto* solve_cmd = app.add_subcommand("solve", "Find a (minimum) contagious set");
  add_graph(solve_cmd, true);
  add_rho(solve_cmd);
  solve_cmd->add_option("--method", o.method, "exact | random-order-full | random-order-restricted | greedy")->capture_default_str();
  solve_cmd->add_option("--trials", o.trials, "Trials for randomised methods")->capture_default_str();
  solve_cmd->add_option("--rng-seed", o.rng_seed, "RNG seed")->capture_default_str();
  solve_cmd->add_option("--limit", o.limit, "Exact solver per-component vertex cap")->capture_default_str();
  solve_cmd->add_flag("--trace", o.trace, "Print the certificate trace");

  auto* bound_cmd = app.add_subcommand("bound", "Closed-form upper bounds and degree classes");
  add_graph(bound_cmd, true);
  add_rho(bound_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("family", o.family,
                      "complete | cycle | path | star | two-level-tree | gadget | random-connected | random-tree")
      ->required();
  gen_cmd->add_option("--n", o.n, "Order");
  gen_cmd->add_option("--d", o.d, "Two-level tree degree");
  gen_cmd->add_option("--k", o.k, "Gadget copies")->capture_default_str();
  add_rho(gen_cmd);
  gen_cmd->add_option("--p", o.edge_prob, "Extra-edge probability")->capture_default_str();
  gen_cmd->add_option("--rng-seed", o.rng_seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem/observation check or a corpus");
  verify_cmd->add_option("check", o.check, "thm2 | thm3 | obs1 | obs3 | prop31 | corpus")->required();
  add_graph(verify_cmd, false);
  add_rho(verify_cmd);
  verify_cmd->add_option("--eps", o.eps, "Epsilon as P/Q")->capture_default_str();
  verify_cmd->add_option("--d", o.d, "Two-level tree degree");
  verify_cmd->add_option("--k", o.k, "Gadget copies")->capture_default_str();
  verify_cmd->add_option("--mode", o.mode, "exact | structural")->capture_default_str();
  verify_cmd->add_option("--limit", o.limit, "Exact solver per-component vertex cap")->capture_default_str();
  verify_cmd->add_option("--count", o.count, "Corpus graphs")->capture_default_str();
  verify_cmd->add_option("--n-min", o.n_min, "Corpus minimum order")->capture_default_str();
  verify_cmd->add_option("--n-max", o.n_max, "Corpus maximum order")->capture_default_str();
  verify_cmd->add_option("--p", o.edge_prob, "Corpus extra-edge probability")->capture_default_str();
  verify_cmd->add_option("--rhos", o.rhos, "Corpus rho values (default 1/3 1/5 1/10)");
  verify_cmd->add_option("--family", o.corpus_family, "random-connected | random-tree")->capture_default_str();
  verify_cmd->add_option("--trials", o.trials, "Heuristic trials per row")->capture_default_str();
  verify_cmd->add_option("--rng-seed", o.rng_seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--csv", o.csv_path, "CSV output path (default stdout)");
  verify_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
  verify_cmd->add_flag("--tree-bound", o.tree_bound, "Assert h <= rho n on trees of order >= 1/rho");
  verify_cmd->add_flag("--thm3", o.thm3, "Report the girth-5 bound with --eps (informational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*percolate_cmd) return cmd_percolate(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*bound_cmd) return cmd_bound(o);
    if (*gen_cmd) return cmd_gen(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
