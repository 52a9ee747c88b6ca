#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tadpole/error.hpp"
#include "tadpole/harness.hpp"
#include "tadpole/optimal.hpp"

using namespace tadpole;

TEST_CASE("random tadpoles are deterministic and valid") {
  const WeightDist dist{1000, 10};
  CHECK(random_tadpole(5, {3, 40}, {1, 20}, dist) == random_tadpole(5, {3, 40}, {1, 20}, dist));
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto d = decompose_tadpole(random_tadpole(s, {3, 40}, {1, 20}, dist));
    CHECK(d.i >= 3);
    CHECK(d.i <= 40);
    CHECK(d.j >= 1);
    CHECK(d.j <= 20);
  }
  const Graph unit = random_tadpole(9, {3, 10}, {1, 5}, {1, 1});
  for (const auto& e : unit.edges()) CHECK(e.weight == 1);
  CHECK(is_cycle(random_cycle(3, {3, 16}, dist)));
}

TEST_CASE("trial seeds and start sampling") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
  const Graph small = make_tadpole(5, 3, std::vector<Weight>(8, Weight(1)));
  CHECK(sample_starts(small, 4).size() == 8);
  const Graph big = make_tadpole(10, 5, std::vector<Weight>(15, Weight(1)));
  const auto starts = sample_starts(big, 4);
  CHECK(starts.size() == 5);
  CHECK(starts == sample_starts(big, 4));
}

TEST_CASE("config parsing") {
  const auto c = parse_config(
      "mode = adversary-sweep\n# comment\nk = 4, 10\nexplorers = greedy,dfs\nseed = 77\ni = 3..9\noutput = x.csv\n");
  CHECK(c.mode == Mode::AdversarySweep);
  CHECK(c.ks == std::vector<std::size_t>{4, 10});
  CHECK(c.explorers == std::vector<std::string>{"greedy", "dfs"});
  CHECK(c.seed == 77);
  CHECK(c.i_range == Range{3, 9});
  CHECK(c.output == "x.csv");
  try {
    parse_config("mode = fuzz-greedy\nbogus = 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_config("i = 9..3\n"), ParseError);
  CHECK_THROWS_AS(parse_config("mode fuzz\n"), ParseError);
}

TEST_CASE("experiments are reproducible and write csv") {
  const std::string path = "harness_test_out.csv";
  ExperimentConfig c;
  c.mode = Mode::FuzzGreedy;
  c.trials = 20;
  c.seed = 3;
  c.i_range = {3, 12};
  c.j_range = {1, 6};
  c.output = path;
  const auto rows = run_experiment(c);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  run_experiment(c);
  std::ifstream again(path);
  std::stringstream second;
  second << again.rdbuf();
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  for (const auto& r : rows) CHECK(r.pass);
  std::remove(path.c_str());

  ExperimentConfig bad = c;
  bad.output = "/nonexistent/dir/out.csv";
  CHECK_THROWS_AS(run_experiment(bad), Error);
}

TEST_CASE("each mode runs") {
  ExperimentConfig c;
  c.trials = 4;
  c.mode = Mode::AdversarySweep;
  c.ks = {4, 5};
  c.random_seeds = 2;
  auto rows = run_experiment(c);
  CHECK(rows.size() == 8);
  for (const auto& r : rows) CHECK(r.pass);

  c.mode = Mode::AdviceCheck;
  c.scheme = "cycle";
  c.n_range = {3, 6};
  rows = run_experiment(c);
  for (const auto& r : rows) {
    CHECK(r.pass);
    CHECK(r.ratio == 1);
  }

  c.scheme = "2bit";
  c.i_range = {3, 8};
  c.j_range = {1, 4};
  for (const auto& r : run_experiment(c)) CHECK(r.pass);

  c.mode = Mode::OracleCheck;
  c.family = "tadpole";
  for (const auto& r : run_experiment(c)) CHECK(r.pass);
  c.family = "cycle";
  c.n_range = {3, 10};
  for (const auto& r : run_experiment(c)) CHECK(r.pass);
}

TEST_CASE("csv row rendering") {
  ResultRow r{3, "T_3_1", 0, "greedy", 5, 5, 1, "2", true};
  CHECK(csv_line(r) == "3,T_3_1,0,greedy,5/1,5/1,1.000000,2,true");
}
