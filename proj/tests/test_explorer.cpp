#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tadpole/charging.hpp"
#include "tadpole/error.hpp"
#include "tadpole/explorer.hpp"
#include "tadpole/optimal.hpp"

using namespace tadpole;

namespace {

Graph unit_tadpole(std::size_t i, std::size_t j) { return make_tadpole(i, j, std::vector<Weight>(i + j, Weight(1))); }

std::vector<VertexId> visit_order(const std::vector<MoveEvent>& trace, VertexId start) {
  std::vector<VertexId> order{start};
  for (const auto& m : trace) {
    if (std::find(order.begin(), order.end(), m.to) == order.end()) order.push_back(m.to);
  }
  return order;
}

}  // namespace

TEST_CASE("greedy on unit T_{3,1} from the junction") {
  const Graph g = unit_tadpole(3, 1);
  Session s = new_session(g, 0);
  const Tour t = greedy_explore(s);
  CHECK(visit_order(s.trace(), 0) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(t.moves == std::vector<VertexId>{0, 1, 2, 0, 3, 0});
  CHECK(t.total_cost == 5);
  CHECK(opt_cost(g).cost == 5);
}

TEST_CASE("greedy stays within twice OPT on the heavy triangle") {
  const Graph g = make_tadpole(3, 1, {1, 1, 10, 1});
  Session s = new_session(g, 1);
  const Tour t = greedy_explore(s);
  CHECK(opt_cost(g).cost == 6);
  CHECK(t.total_cost <= 12);
  CHECK(is_valid_tour(g, 1, t));
}

TEST_CASE("two-vertex path is out and back") {
  const Graph g({0, 1}, {{0, 1, make_rational(7, 3)}});
  for (auto name : {"greedy", "dfs", "random:5"}) {
    Session s = new_session(g, 1);
    auto p = make_explorer(name);
    CHECK(run_explorer(s, *p).total_cost == make_rational(14, 3));
  }
}

TEST_CASE("dfs baselines") {
  Session t31 = new_session(unit_tadpole(3, 1), 0);
  CHECK(dfs_explore(t31).total_cost <= 6);

  Session c5 = new_session(make_cycle(5, std::vector<Weight>(5, Weight(1))), 0);
  CHECK(dfs_explore(c5).total_cost <= 8);

  // A tree: every edge exactly twice.
  const Graph tree({0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {0, 2, 3}, {1, 3, 1}, {1, 4, 5}, {2, 5, 7}});
  Session ts = new_session(tree, 3);
  dfs_explore(ts);
  for (auto c : oracle::traversal_counts(tree, ts.trace())) CHECK(c == 2);
}

TEST_CASE("random explorer is reproducible") {
  const Graph g = unit_tadpole(10, 5);
  Session a = new_session(g, 4), b = new_session(g, 4);
  random_explore(a, 99);
  random_explore(b, 99);
  CHECK(a.tour().moves == b.tour().moves);

  const Rational opt = opt_cost(g).cost;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Session s = new_session(g, 0);
    CHECK(random_explore(s, seed).total_cost >= opt);
  }
  Session small = new_session(unit_tadpole(3, 1), 2);
  CHECK(is_valid_tour(unit_tadpole(3, 1), 2, random_explore(small, 3)));
}

TEST_CASE("make_explorer names") {
  CHECK(make_explorer("greedy")->name() == "greedy");
  CHECK(make_explorer("dfs")->name() == "dfs");
  CHECK(make_explorer("random:42")->name() == "random:42");
  CHECK_THROWS_AS(make_explorer("random:x"), Error);
  CHECK_THROWS_AS(make_explorer("nearest"), Error);
}

TEST_CASE("a stalled explorer is reported") {
  struct Lazy final : ExplorerPolicy {
    std::optional<Decision> decide(const Observation&) override { return std::nullopt; }
    std::string name() const override { return "lazy"; }
  } lazy;
  struct Pacer final : ExplorerPolicy {
    std::optional<Decision> decide(const Observation& obs) override {
      return step_to(obs, obs.known_neighbors(obs.current()).begin()->first);
    }
    std::string name() const override { return "pacer"; }
  } pacer;
  Session s = new_session(unit_tadpole(3, 1), 0);
  try {
    run_explorer(s, lazy);
    FAIL("expected IncompleteTour");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTour);
  }
  Session p = new_session(unit_tadpole(3, 1), 3);
  try {
    run_explorer(p, pacer, 50);
    FAIL("expected NonterminatingExplorer");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonterminatingExplorer);
  }
}

TEST_CASE("charging audit on unit T_{3,1}") {
  const Graph g = unit_tadpole(3, 1);
  Session s = new_session(g, 0);
  greedy_explore(s);
  const ChargeReport r = charging_audit(s.trace(), g, 0);
  REQUIRE(r.records.size() == 4);
  CHECK(r.records[0].charged_edge);
  CHECK(r.records[1].charged_edge);
  CHECK_FALSE(r.records[2].charged_edge);
  CHECK_FALSE(r.records[3].charged_edge);
  CHECK(r.records[3].final_return);
  CHECK(r.paths_charged == 2);
  CHECK(r.total_cost == 5);
}

TEST_CASE("charging audit rejects a wasteful trace") {
  // Start 0, go the long way round to reach 1 repeatedly: many path charges.
  const Graph g = make_cycle(5, std::vector<Weight>(5, Weight(1)));
  Session s = new_session(g, 0);
  for (VertexId v : {4, 0, 1, 2, 1, 0, 4, 3, 4, 0}) s.move_to(v);
  CHECK_THROWS_AS(charging_audit(s.trace(), g, 0), Error);
}

TEST_CASE("greedy property sweep on small tadpoles and cycles") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const bool cyc = t % 3 == 0;
    const std::size_t i = 3 + rng() % 5, j = 1 + rng() % 2;
    auto w = oracle::random_weights(cyc ? i : i + j, rng, 50, 4);
    if (t % 5 == 0) oracle::force_heavy_edge(w, i, rng() % i, make_rational(1, 3));
    const Graph g = oracle::relabel(cyc ? make_cycle(i, w) : make_tadpole(i, j, w), rng);
    const Rational opt = oracle::tsp_by_permutation(g);
    for (auto start : g.vertices()) {
      Session s = new_session(g, start);
      const Tour tour = greedy_explore(s);
      CHECK(is_valid_tour(g, start, tour));
      CHECK(tour.total_cost <= (cyc ? make_rational(3, 2) : Rational(2)) * opt);
      if (!cyc) CHECK_NOTHROW(charging_audit(s.trace(), g, start));
    }
  }
}
