#include "tadpole/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tadpole/adversary.hpp"
#include "tadpole/advice.hpp"
#include "tadpole/error.hpp"
#include "tadpole/explorer.hpp"
#include "tadpole/optimal.hpp"

namespace tadpole {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(ErrorKind::MalformedLine, line, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

Range parse_range(std::string_view s, std::size_t line) {
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.first = r.second = parse_uint(s, line);
  } else {
    r.first = parse_uint(trim(s.substr(0, dots)), line);
    r.second = parse_uint(trim(s.substr(dots + 2)), line);
  }
  if (r.first > r.second) throw ParseError(ErrorKind::MalformedLine, line, "empty range '" + std::string(s) + "'");
  return r;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t draw_in(std::mt19937_64& rng, Range r) {
  return std::uniform_int_distribution<std::size_t>(r.first, r.second)(rng);
}

std::string tadpole_label(const Graph& g) {
  const auto d = decompose_tadpole(g);
  return "T_" + std::to_string(d.i) + "_" + std::to_string(d.j);
}

std::string instance_label(const Graph& g) {
  if (is_cycle(g)) return "C_" + std::to_string(g.vertex_count());
  return tadpole_label(g);
}

std::vector<ResultRow> fuzz_greedy(const ExperimentConfig& c) {
  std::vector<ResultRow> rows;
  for (std::size_t t = 0; t < c.trials; ++t) {
    const auto seed = trial_seed(c.seed, t);
    const Graph g = random_tadpole(seed, c.i_range, c.j_range, c.weights);
    const Rational opt = opt_cost(g).cost;
    for (auto s : sample_starts(g, trial_seed(seed, 1))) {
      Session session = new_session(g, s);
      const Tour tour = greedy_explore(session);
      const bool pass = tour.total_cost <= 2 * opt;
      rows.push_back({t, tadpole_label(g), s, "greedy", tour.total_cost, opt, tour.total_cost / opt, "2", pass});
    }
  }
  return rows;
}

std::vector<ResultRow> adversary_sweep(const ExperimentConfig& c) {
  std::vector<ResultRow> rows;
  std::size_t t = 0;
  for (auto k : c.ks) {
    std::vector<std::string> names;
    for (const auto& e : c.explorers) {
      if (e == "random") {
        for (std::size_t r = 0; r < c.random_seeds; ++r) names.push_back("random:" + std::to_string(trial_seed(c.seed, r)));
      } else {
        names.push_back(e);
      }
    }
    const Rational bound = lb_ratio_bound(k, 0, 0);
    for (const auto& name : names) {
      const GameResult r = adversary_game(name, k);
      rows.push_back({t++, "adversary_k" + std::to_string(k), 0, name, r.explorer_cost, r.opt_cost, r.ratio,
                      format_rational(bound), r.ratio >= bound});
    }
  }
  return rows;
}

ResultRow advice_row(std::size_t t, const Graph& g, VertexId s, AdviceScheme scheme, const Rational& opt) {
  const AdviceString a = advise(scheme, g, s);
  Session session = new_session(g, s);
  auto policy = make_advice_explorer(a);
  const Tour tour = run_explorer(session, *policy);
  const std::size_t n = g.vertex_count();
  ResultRow row{t, instance_label(g), s, std::string("advice-") + to_string(scheme) + ":" + a.to_string(),
                tour.total_cost, opt, tour.total_cost / opt, "1", false};
  switch (scheme) {
    case AdviceScheme::CycleLog: row.pass = a.size() == bits_needed(n) && tour.total_cost == opt; break;
    case AdviceScheme::TadpoleLogPlusOne: row.pass = a.size() == bits_needed(n) + 1 && tour.total_cost == opt; break;
    case AdviceScheme::TwoBit:
      row.bound = "valid";
      row.pass = a.size() == 2 && is_valid_tour(g, s, tour);
      break;
  }
  return row;
}

std::vector<ResultRow> advice_check(const ExperimentConfig& c) {
  const AdviceScheme scheme = parse_scheme(c.scheme);
  std::vector<ResultRow> rows;
  std::size_t t = 0;
  auto run = [&](const Graph& g, std::uint64_t seed) {
    const Rational opt = opt_cost(g).cost;
    for (auto s : sample_starts(g, trial_seed(seed, 1))) rows.push_back(advice_row(t, g, s, scheme, opt));
    ++t;
  };
  if (scheme == AdviceScheme::CycleLog) {
    for (std::size_t n = c.n_range.first; n <= c.n_range.second; ++n) {
      for (std::size_t d = 0; d < c.trials; ++d) {
        const auto seed = trial_seed(c.seed, t);
        run(random_cycle(seed, {n, n}, c.weights), seed);
      }
    }
  } else {
    for (std::size_t d = 0; d < c.trials; ++d) {
      const auto seed = trial_seed(c.seed, t);
      run(random_tadpole(seed, c.i_range, c.j_range, c.weights), seed);
    }
  }
  return rows;
}

std::vector<ResultRow> oracle_check(const ExperimentConfig& c) {
  std::vector<ResultRow> rows;
  for (std::size_t t = 0; t < c.trials; ++t) {
    const auto seed = trial_seed(c.seed, t);
    const Graph g = c.family == "cycle" ? random_cycle(seed, c.n_range, c.weights)
                                        : random_tadpole(seed, c.i_range, c.j_range, c.weights);
    const Rational closed = opt_cost(g).cost;
    const Rational brute = brute_force_opt(g);
    rows.push_back({t, instance_label(g), 0, "closed-form", closed, brute, closed / brute, "=", closed == brute});
  }
  return rows;
}

}  // namespace

Weight WeightDist::draw(std::mt19937_64& rng) const {
  const auto p = std::uniform_int_distribution<std::uint64_t>(1, p_max)(rng);
  const auto q = std::uniform_int_distribution<std::uint64_t>(1, q_max)(rng);
  Weight w(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  w.canonicalize();
  return w;
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::FuzzGreedy: return "fuzz-greedy";
    case Mode::AdversarySweep: return "adversary-sweep";
    case Mode::AdviceCheck: return "advice-check";
    case Mode::OracleCheck: return "oracle-check";
  }
  return "unknown";
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(ErrorKind::MalformedLine, line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "mode") {
      if (value == "fuzz-greedy") c.mode = Mode::FuzzGreedy;
      else if (value == "adversary-sweep") c.mode = Mode::AdversarySweep;
      else if (value == "advice-check") c.mode = Mode::AdviceCheck;
      else if (value == "oracle-check") c.mode = Mode::OracleCheck;
      else throw ParseError(ErrorKind::MalformedLine, line_no, "unknown mode '" + std::string(value) + "'");
    } else if (key == "trials") {
      c.trials = parse_uint(value, line_no);
    } else if (key == "seed") {
      c.seed = parse_uint(value, line_no);
    } else if (key == "i") {
      c.i_range = parse_range(value, line_no);
    } else if (key == "j") {
      c.j_range = parse_range(value, line_no);
    } else if (key == "n") {
      c.n_range = parse_range(value, line_no);
    } else if (key == "p_max") {
      c.weights.p_max = parse_uint(value, line_no);
    } else if (key == "q_max") {
      c.weights.q_max = parse_uint(value, line_no);
    } else if (key == "family") {
      if (value != "tadpole" && value != "cycle") throw ParseError(ErrorKind::MalformedLine, line_no, "bad family");
      c.family = value;
    } else if (key == "scheme") {
      c.scheme = value;
      try {
        parse_scheme(value);
      } catch (const Error& e) {
        throw ParseError(ErrorKind::MalformedLine, line_no, e.what());
      }
    } else if (key == "k") {
      c.ks.clear();
      for (const auto& item : split_list(value)) c.ks.push_back(parse_uint(item, line_no));
    } else if (key == "explorers") {
      c.explorers = split_list(value);
    } else if (key == "random_seeds") {
      c.random_seeds = parse_uint(value, line_no);
    } else if (key == "output") {
      c.output = value;
    } else {
      throw ParseError(ErrorKind::MalformedLine, line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (c.weights.p_max == 0 || c.weights.q_max == 0) throw Error(ErrorKind::InvalidArgument, "p_max and q_max must be >= 1");
  if (c.i_range.first < 3 || c.j_range.first < 1 || c.n_range.first < 3) {
    throw Error(ErrorKind::InvalidArgument, "need i >= 3, j >= 1, n >= 3");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ExperimentConfig c = parse_config(buf.str());
  if (const char* env = std::getenv("SEED")) {
    const std::string_view s(env);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::InvalidArgument, "SEED must be a non-negative integer");
    }
    c.seed = seed;
  }
  return c;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

Graph random_tadpole(std::uint64_t seed, Range i_range, Range j_range, const WeightDist& weights) {
  std::mt19937_64 rng(seed);
  const std::size_t i = draw_in(rng, i_range);
  const std::size_t j = draw_in(rng, j_range);
  std::vector<Weight> w(i + j);
  for (auto& x : w) x = weights.draw(rng);
  return make_tadpole(i, j, w);
}

Graph random_cycle(std::uint64_t seed, Range n_range, const WeightDist& weights) {
  std::mt19937_64 rng(seed);
  const std::size_t n = draw_in(rng, n_range);
  std::vector<Weight> w(n);
  for (auto& x : w) x = weights.draw(rng);
  return make_cycle(n, w);
}

std::vector<VertexId> sample_starts(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> all = g.vertices();
  if (all.size() <= 12) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(5);
  std::sort(all.begin(), all.end());
  return all;
}

std::string csv_line(const ResultRow& r) {
  return std::to_string(r.trial) + "," + r.instance + "," + std::to_string(r.start) + "," + r.explorer + "," +
         format_rational(r.cost) + "," + format_rational(r.opt) + "," + format_decimal(r.ratio) + "," + r.bound + "," +
         (r.pass ? "true" : "false");
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  std::vector<ResultRow> rows;
  switch (config.mode) {
    case Mode::FuzzGreedy: rows = fuzz_greedy(config); break;
    case Mode::AdversarySweep: rows = adversary_sweep(config); break;
    case Mode::AdviceCheck: rows = advice_check(config); break;
    case Mode::OracleCheck: rows = oracle_check(config); break;
  }
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + config.output + "'");
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << csv_line(r) << '\n';
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + config.output + "'");
  }
  return rows;
}

}  // namespace tadpole
