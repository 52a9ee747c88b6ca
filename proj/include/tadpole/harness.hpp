#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tadpole/graph.hpp"
#include "tadpole/rational.hpp"

namespace tadpole {

/// Weights p/q with p uniform in [1, p_max] and q uniform in [1, q_max].
struct WeightDist {
  std::uint64_t p_max = 1;
  std::uint64_t q_max = 1;

  Weight draw(std::mt19937_64& rng) const;
};

using Range = std::pair<std::size_t, std::size_t>;  ///< inclusive

enum class Mode { FuzzGreedy, AdversarySweep, AdviceCheck, OracleCheck };

const char* to_string(Mode m);

/// Read from `key = value` lines; `#` starts a comment.
///
///   mode        fuzz-greedy | adversary-sweep | advice-check | oracle-check
///   trials      instances per mode (per n for cycles)
///   seed        master seed; the SEED environment variable wins
///   i, j, n     ranges as `lo..hi` (tadpole cycle size, stem size, cycle size)
///   p_max, q_max  weight distribution
///   family      tadpole | cycle (oracle-check, advice-check)
///   scheme      cycle | tadpole | 2bit (advice-check)
///   k           comma list for adversary-sweep
///   explorers   comma list; `random` expands to random:<derived seed>
///   random_seeds  how many random explorers per k
///   output      CSV path; empty means stdout only
struct ExperimentConfig {
  Mode mode = Mode::FuzzGreedy;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Range i_range{3, 40};
  Range j_range{1, 20};
  Range n_range{3, 16};
  WeightDist weights{1000, 10};
  std::string family = "tadpole";
  std::string scheme = "tadpole";
  std::vector<std::size_t> ks{4, 10, 50, 200};
  std::vector<std::string> explorers{"greedy", "dfs", "random"};
  std::size_t random_seeds = 10;
  std::string output;
};

/// Throws ParseError(MalformedLine) on bad lines or values.
ExperimentConfig parse_config(std::string_view text);
/// Reads a file and applies the SEED override. Throws Error(Io).
ExperimentConfig load_config(const std::string& path);

/// Seed for trial `index`, fixed by the master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

Graph random_tadpole(std::uint64_t seed, Range i_range, Range j_range, const WeightDist& weights);
Graph random_cycle(std::uint64_t seed, Range n_range, const WeightDist& weights);

/// Every vertex for n <= 12, otherwise 5 distinct vertices drawn with `seed`.
std::vector<VertexId> sample_starts(const Graph& g, std::uint64_t seed);

struct ResultRow {
  std::size_t trial = 0;
  std::string instance;
  VertexId start = 0;
  std::string explorer;
  Rational cost;
  Rational opt;
  Rational ratio;
  std::string bound;
  bool pass = false;
};

inline constexpr std::string_view kCsvHeader = "trial,instance,start,explorer,cost,opt,ratio,bound,pass";

std::string csv_line(const ResultRow& row);

/// Runs every trial, writes the CSV to config.output when set, returns the rows.
/// Throws Error(Io) naming the path on write failure.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

}  // namespace tadpole
