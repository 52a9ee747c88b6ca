#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tadpole/adversary.hpp"
#include "tadpole/advice.hpp"
#include "tadpole/error.hpp"
#include "tadpole/explorer.hpp"
#include "tadpole/graph_io.hpp"
#include "tadpole/harness.hpp"
#include "tadpole/optimal.hpp"

using namespace tadpole;

namespace {

int cmd_run(const std::string& path) {
  const auto config = load_config(path);
  const auto rows = run_experiment(config);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.pass ? 0 : 1;
  if (config.output.empty()) {
    std::cout << kCsvHeader << '\n';
    for (const auto& r : rows) std::cout << csv_line(r) << '\n';
  } else {
    std::cerr << rows.size() << " rows, " << failed << " failed, written to " << config.output << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int cmd_oracle(const std::string& path) {
  const Graph g = read_graph_file(path);
  const OptCost closed = opt_cost(g);
  std::string brute = "NA";
  if (g.vertex_count() <= kBruteForceLimit) brute = format_rational(brute_force_opt(g));
  std::cout << "opt_closed_form,opt_brute_force,shape\n"
            << format_rational(closed.cost) << ',' << brute << ',' << closed.shape.label() << '\n';
  return 0;
}

int cmd_adversary(const std::string& explorer, std::size_t k) {
  const GameResult r = adversary_game(explorer, k);
  std::cout << "explorer,k,case,t1,aux,explorer_cost,opt_cost,ratio,bound\n"
            << r.explorer << ',' << r.k << ',' << to_string(r.case_taken) << ',' << r.t1 << ',' << r.aux() << ','
            << format_rational(r.explorer_cost) << ',' << format_rational(r.opt_cost) << ','
            << format_rational(r.ratio) << ',' << format_rational(lb_ratio_bound(r.k, r.t1, r.stem_parameter()))
            << '\n';
  return 0;
}

int cmd_advice(const std::string& scheme_name, const std::string& path, VertexId start) {
  const Graph g = read_graph_file(path);
  const AdviceScheme scheme = parse_scheme(scheme_name);
  const AdviceString advice = advise(scheme, g, start);
  Session session = new_session(g, start);
  auto policy = make_advice_explorer(advice);
  const Tour tour = run_explorer(session, *policy);
  const Rational opt = opt_cost(g).cost;
  std::cout << "n,bits,advice,cost,opt,ratio\n"
            << g.vertex_count() << ',' << advice.size() << ',' << advice.to_string() << ','
            << format_rational(tour.total_cost) << ',' << format_rational(opt) << ','
            << format_rational(tour.total_cost / opt) << '\n';
  return 0;
}

int cmd_explore(const std::string& name, const std::string& path, VertexId start, const std::string& trace_path) {
  const Graph g = read_graph_file(path);
  Session session = new_session(g, start);
  auto policy = make_explorer(name);
  const Tour tour = run_explorer(session, *policy);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + trace_path + "'");
    out << trace_csv(session.trace());
  }
  std::cout << "explorer,start,moves,cost";
  std::string opt_cell;
  if (is_tadpole(g) || is_cycle(g)) {
    const Rational opt = opt_cost(g).cost;
    std::cout << ",opt,ratio";
    opt_cell = "," + format_rational(opt) + "," + format_rational(tour.total_cost / opt);
  }
  std::cout << '\n'
            << policy->name() << ',' << start << ',' << tour.moves.size() << ',' << format_rational(tour.total_cost)
            << opt_cell << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online exploration of tadpole and cycle graphs under fog of war"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment config and emit CSV");
  run->add_option("config", config_path, "key = value config file")->required();

  std::string graph_path;
  auto* oracle = app.add_subcommand("oracle", "Closed-form and brute-force optimal tour costs");
  oracle->add_option("graph", graph_path, "graph file")->required();

  std::string explorer = "greedy";
  std::size_t k = 4;
  auto* adversary = app.add_subcommand("adversary", "Play the adaptive lower-bound game");
  adversary->add_option("--explorer", explorer, "greedy, dfs or random:<seed>")->required();
  adversary->add_option("--k", k, "distance threshold (>= 4)")->required();

  std::string scheme;
  VertexId start = 0;
  auto* advice = app.add_subcommand("advice", "Generate advice and run the matching searcher");
  advice->add_option("--scheme", scheme, "2bit, cycle or tadpole")->required();
  advice->add_option("graph", graph_path, "graph file")->required();
  advice->add_option("--start", start, "start vertex")->required();

  std::string trace_path;
  auto* explore = app.add_subcommand("explore", "Run one searcher on a graph file");
  explore->add_option("--explorer", explorer, "greedy, dfs or random:<seed>")->required();
  explore->add_option("graph", graph_path, "graph file")->required();
  explore->add_option("--start", start, "start vertex")->required();
  explore->add_option("--trace", trace_path, "write the move trace as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path);
    if (*oracle) return cmd_oracle(graph_path);
    if (*adversary) return cmd_adversary(explorer, k);
    if (*advice) return cmd_advice(scheme, graph_path, start);
    if (*explore) return cmd_explore(explorer, graph_path, start, trace_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
