#include "tadpole/advice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tadpole/error.hpp"
#include "tadpole/optimal.hpp"

namespace tadpole {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorKind::AdviceMismatch, what); }

std::vector<bool> to_bits(std::uint64_t value, std::size_t width) {
  std::vector<bool> bits(width);
  for (std::size_t k = 0; k < width; ++k) bits[width - 1 - k] = (value >> k) & 1U;
  if (width < 64 && (value >> width) != 0) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  }
  return bits;
}

std::uint64_t from_bits(const std::vector<bool>& bits, std::size_t first, std::size_t last) {
  std::uint64_t value = 0;
  for (std::size_t k = first; k < last; ++k) value = (value << 1) | (bits[k] ? 1U : 0U);
  return value;
}

ExplorerFactory or_greedy(const ExplorerFactory& f) {
  if (f) return f;
  return [] { return std::make_unique<GreedyExplorer>(); };
}

// Depth-first search that never uses one cycle edge. The edge is either
// given up front or read off the reveal log once position `mark` exists.
class TreeDfs final : public ExplorerPolicy {
 public:
  explicit TreeDfs(std::size_t mark) : mark_(mark) {}
  explicit TreeDfs(Edge ignored) : ignored_(std::move(ignored)) {}

  std::optional<Decision> decide(const Observation& obs) override {
    if (!ignored_ && mark_ < obs.reveal_log().size()) ignored_ = obs.reveal_log()[mark_];
    if (stack_.empty()) stack_.push_back(obs.start());
    const VertexId cur = obs.current();
    if (stack_.back() != cur) throw Error(ErrorKind::IllegalMove, "tree walk left its stack");
    for (auto u : obs.unvisited_neighbors(cur)) {
      if (ignored_ && ignored_->same_endpoints({cur, u, 0})) continue;
      stack_.push_back(u);
      return step_to(obs, u);
    }
    stack_.pop_back();
    if (!stack_.empty()) return step_to(obs, stack_.back());
    if (!ignored_) mismatch("marked edge " + std::to_string(mark_) + " was never revealed");
    if (!obs.frontier().empty()) mismatch("marked edge does not split the graph into a tree");
    return std::nullopt;
  }
  std::string name() const override { return "advice-tree"; }

 private:
  std::size_t mark_ = 0;
  std::optional<Edge> ignored_;
  std::vector<VertexId> stack_;
};

// Walks the cycle once, taking the stem when the direction bit says so.
class ShapeOneWalker final : public ExplorerPolicy {
 public:
  explicit ShapeOneWalker(bool direction) : direction_(direction) {}

  std::optional<Decision> decide(const Observation& obs) override {
    const VertexId cur = obs.current();
    const auto next = obs.unvisited_neighbors(cur);
    if (!next.empty()) {
      VertexId pick = next.front();
      if (cur != obs.start() && next.size() == 2 && !used_) {
        used_ = true;
        pick = next[direction_ ? 1 : 0];
      }
      return step_to(obs, pick);
    }
    if (obs.frontier().empty()) {
      if (cur == obs.start()) return std::nullopt;
      return walk_to(obs, obs.start());
    }
    // Nearest visited vertex that still has an unvisited neighbor; the map
    // is ordered by id, so ties keep the smaller one.
    std::optional<KnownPath> best;
    for (auto& [v, path] : known_shortest_paths(obs)) {
      if (!obs.is_visited(v) || obs.unvisited_neighbors(v).empty()) continue;
      if (!best || path.cost < best->cost) best = std::move(path);
    }
    if (!best) throw Error(ErrorKind::Unreachable, "no visited vertex borders the frontier");
    return Decision{std::move(best->vertices)};
  }
  std::string name() const override { return "advice-walk"; }

 private:
  bool direction_;
  bool used_ = false;
};

// Decides between the two behaviors once start's edges are visible.
class CycleAdviceExplorer final : public ExplorerPolicy {
 public:
  explicit CycleAdviceExplorer(std::uint64_t index) : index_(index) {}

  std::optional<Decision> decide(const Observation& obs) override {
    if (!inner_) {
      const auto& log = obs.reveal_log();
      bool shape1 = false;
      if (index_ < log.size() && log[index_].touches(obs.start())) {
        const auto& nbs = obs.known_neighbors(obs.start());
        const auto cheapest =
            std::min_element(nbs.begin(), nbs.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        shape1 = log[index_].weight == cheapest->second;
      }
      if (shape1) {
        inner_ = std::make_unique<ShapeOneWalker>(false);
      } else {
        inner_ = std::make_unique<TreeDfs>(index_);
      }
    }
    return inner_->decide(obs);
  }
  std::string name() const override { return "advice-cycle"; }

 private:
  std::uint64_t index_;
  std::unique_ptr<ExplorerPolicy> inner_;
};

class TwoBitExplorer final : public ExplorerPolicy {
 public:
  TwoBitExplorer(bool bit1, bool bit2, ExplorerFactory sub) : bit1_(bit1), bit2_(bit2), factory_(std::move(sub)) {}

  std::optional<Decision> decide(const Observation& obs) override {
    const VertexId cur = obs.current();
    switch (stage_) {
      case Stage::Begin:
        if (obs.known_neighbors(cur).size() == 3) {
          const auto nbs = obs.unvisited_neighbors(cur);
          const std::size_t rank = (bit1_ ? 2 : 0) + (bit2_ ? 1 : 0);
          if (rank >= nbs.size()) mismatch("stem rank " + std::to_string(rank) + " at a degree-3 start");
          junction_ = cur;
          stem_entry_ = nbs[rank];
          stage_ = Stage::StemTrip;
        } else {
          stage_ = bit1_ ? Stage::StemWalk : Stage::CycleToJunction;
        }
        return decide(obs);

      case Stage::StemWalk:
        if (obs.known_neighbors(cur).size() == 3) {
          junction_ = cur;
          const VertexId pred = last_path_.at(last_path_.size() - 2);
          for (auto v : obs.known_vertices()) {
            if (v != cur && (v == pred || !obs.known_neighbors(cur).contains(v))) hidden_.insert(v);
          }
          stage_ = Stage::CycleFromJunction;
          return decide(obs);
        }
        if (const auto next = obs.unvisited_neighbors(cur); !next.empty()) return remember(step_to(obs, next.front()));
        if (auto path = nearest_frontier(obs)) return remember(Decision{std::move(path->vertices)});
        mismatch("no junction found from a start marked as on the stem");

      case Stage::CycleFromJunction:
        if (auto d = sub().decide(obs.restricted(hidden_, *junction_))) return d;
        stage_ = Stage::Finish;
        return decide(obs);

      case Stage::CycleToJunction:
        if (obs.known_neighbors(cur).size() == 3) {
          junction_ = cur;
          const VertexId pred = last_path_.at(last_path_.size() - 2);
          std::vector<VertexId> candidates;
          for (const auto& [v, w] : obs.known_neighbors(cur)) {
            if (v != pred) candidates.push_back(v);
          }
          stem_entry_ = candidates[bit2_ ? 1 : 0];
          if (obs.is_visited(stem_entry_)) mismatch("advised stem edge leads to a visited vertex");
          stage_ = Stage::StemTrip;
          return decide(obs);
        }
        if (auto d = sub().decide(obs)) return remember(std::move(*d));
        mismatch("cycle subroutine finished before reaching the junction");

      case Stage::StemTrip:
        if (cur == *junction_ && !hidden_.contains(stem_entry_)) {
          hidden_.insert(stem_entry_);
          return step_to(obs, stem_entry_);
        }
        if (cur != *junction_) {
          if (const auto next = obs.unvisited_neighbors(cur); !next.empty()) {
            hidden_.insert(next.front());
            return step_to(obs, next.front());
          }
          return walk_to(obs, *junction_);
        }
        stage_ = Stage::CycleRest;
        return decide(obs);

      case Stage::CycleRest:
        return sub().decide(obs.restricted(hidden_, obs.start()));

      case Stage::Finish:
        if (auto path = nearest_frontier(obs)) return Decision{std::move(path->vertices)};
        if (cur == obs.start()) return std::nullopt;
        return walk_to(obs, obs.start());
    }
    return std::nullopt;
  }
  std::string name() const override { return "advice-2bit"; }

 private:
  enum class Stage { Begin, StemWalk, CycleFromJunction, CycleToJunction, StemTrip, CycleRest, Finish };

  ExplorerPolicy& sub() {
    if (!sub_) sub_ = factory_();
    return *sub_;
  }
  std::optional<Decision> remember(Decision d) {
    last_path_ = d.path;
    return d;
  }

  bool bit1_;
  bool bit2_;
  ExplorerFactory factory_;
  std::unique_ptr<ExplorerPolicy> sub_;
  Stage stage_ = Stage::Begin;
  std::optional<VertexId> junction_;
  VertexId stem_entry_ = 0;
  std::set<VertexId> hidden_;
  std::vector<VertexId> last_path_;
};

// Runs `policy` from `start` until `stop` holds; returns the last walk.
std::vector<VertexId> simulate_until(const Graph& g, VertexId start, ExplorerPolicy& policy,
                                     const std::function<bool(const Observation&)>& stop) {
  Session session = new_session(g, start);
  std::vector<VertexId> last;
  const std::size_t budget = 4 * g.vertex_count() * g.vertex_count() + 16;
  for (std::size_t round = 0; round < budget; ++round) {
    auto d = policy.decide(session.observation());
    if (!d) break;
    for (std::size_t k = 1; k < d->path.size(); ++k) session.move_to(d->path[k]);
    last = std::move(d->path);
    if (stop(session.observation())) return last;
  }
  throw Error(ErrorKind::InvalidArgument, "simulated searcher never met the stop condition");
}

// Reveal-log position of `e` when the tree walk ignoring it runs from start.
std::size_t reveal_index(const Graph& g, VertexId start, const Edge& e) {
  Session session = new_session(g, start);
  TreeDfs walk(e);
  run_explorer(session, walk);
  const auto& log = session.observation().reveal_log();
  for (std::size_t k = 0; k < log.size(); ++k) {
    if (log[k].same_endpoints(e)) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "edge never revealed");
}

VertexId junction_predecessor(const Graph& g, VertexId start, VertexId junction, ExplorerPolicy& policy) {
  const auto last = simulate_until(g, start, policy, [&](const Observation& obs) { return obs.current() == junction; });
  return last.at(last.size() - 2);
}

bool stem_rank_among(const Graph& g, VertexId junction, VertexId excluded, VertexId stem_entry) {
  std::vector<VertexId> candidates;
  for (const auto& nb : g.neighbors(junction)) {
    if (nb.id != excluded) candidates.push_back(nb.id);
  }
  return candidates.at(1) == stem_entry;
}

void check_start(const Graph& g, VertexId start) {
  if (!g.contains(start)) throw Error(ErrorKind::UnknownStartVertex, "start " + std::to_string(start) + " not in graph");
}

}  // namespace

const char* to_string(AdviceScheme s) {
  switch (s) {
    case AdviceScheme::TwoBit: return "2bit";
    case AdviceScheme::CycleLog: return "cycle";
    case AdviceScheme::TadpoleLogPlusOne: return "tadpole";
  }
  return "unknown";
}

AdviceScheme parse_scheme(std::string_view text) {
  if (text == "2bit") return AdviceScheme::TwoBit;
  if (text == "cycle") return AdviceScheme::CycleLog;
  if (text == "tadpole") return AdviceScheme::TadpoleLogPlusOne;
  throw Error(ErrorKind::InvalidArgument, "unknown advice scheme '" + std::string(text) + "'");
}

std::string AdviceString::to_string() const {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

AdviceString AdviceString::parse(AdviceScheme scheme, std::string_view text) {
  AdviceString a{scheme, {}};
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorKind::AdviceMismatch, "advice must be a bit string");
    a.bits.push_back(c == '1');
  }
  if (scheme == AdviceScheme::TwoBit && a.bits.size() != 2) mismatch("2-bit advice needs exactly 2 bits");
  if (scheme == AdviceScheme::TadpoleLogPlusOne && a.bits.size() < 2) mismatch("tadpole advice needs at least 2 bits");
  return a;
}

std::size_t bits_needed(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "bits_needed(0)");
  std::size_t bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  return bits;
}

AdviceString advise_cycle(const Graph& g, VertexId start) {
  check_start(g, start);
  const OptCost opt = opt_cost_cycle(g);
  const std::size_t width = bits_needed(g.vertex_count());
  std::size_t index = 0;
  if (opt.shape.is_shape2()) {
    index = reveal_index(g, start, *opt.shape.e_infinity);
  } else {
    // Start's edges come first in the log, ordered by neighbor id.
    const auto nbs = g.neighbors(start);
    index = nbs[1].weight < nbs[0].weight ? 1 : 0;
  }
  return {AdviceScheme::CycleLog, to_bits(index, width)};
}

Tour explore_cycle_with_advice(Session& session, const AdviceString& advice) {
  auto policy = make_advice_explorer(advice);
  return run_explorer(session, *policy);
}

AdviceString advise_tadpole(const Graph& g, VertexId start) {
  check_start(g, start);
  const auto d = decompose_tadpole(g);
  const OptCost opt = opt_cost_tadpole(d);
  const std::size_t width = bits_needed(g.vertex_count()) + 1;
  if (opt.shape.is_shape2()) {
    const std::size_t index = reveal_index(g, start, *opt.shape.e_infinity);
    return {AdviceScheme::TadpoleLogPlusOne, to_bits(index + 2, width)};
  }
  bool direction = false;
  if (start != d.junction && !d.on_stem(start)) {
    ShapeOneWalker walker(false);
    const VertexId pred = junction_predecessor(g, start, d.junction, walker);
    direction = stem_rank_among(g, d.junction, pred, d.stem_vertices.front());
  }
  auto bits = to_bits(0, width);
  bits.back() = direction;
  return {AdviceScheme::TadpoleLogPlusOne, bits};
}

Tour explore_tadpole_with_advice(Session& session, const AdviceString& advice) {
  auto policy = make_advice_explorer(advice);
  return run_explorer(session, *policy);
}

AdviceString advise_2bit(const Graph& g, VertexId start, const ExplorerFactory& cycle_subroutine) {
  check_start(g, start);
  const auto d = decompose_tadpole(g);
  const VertexId entry = d.stem_vertices.front();
  if (start == d.junction) {
    const auto nbs = g.neighbors(start);
    std::uint64_t rank = 0;
    while (nbs[rank].id != entry) ++rank;
    return {AdviceScheme::TwoBit, to_bits(rank, 2)};
  }
  if (d.on_stem(start)) return {AdviceScheme::TwoBit, {true, false}};
  auto sub = or_greedy(cycle_subroutine)();
  const VertexId pred = junction_predecessor(g, start, d.junction, *sub);
  return {AdviceScheme::TwoBit, {false, stem_rank_among(g, d.junction, pred, entry)}};
}

Tour explore_2bit(Session& session, const AdviceString& advice, const ExplorerFactory& cycle_subroutine) {
  auto policy = make_advice_explorer(advice, cycle_subroutine);
  return run_explorer(session, *policy);
}

std::unique_ptr<ExplorerPolicy> make_advice_explorer(const AdviceString& advice,
                                                     const ExplorerFactory& cycle_subroutine) {
  const auto& bits = advice.bits;
  switch (advice.scheme) {
    case AdviceScheme::CycleLog:
      if (bits.empty() || bits.size() > 63) mismatch("cycle advice has a bad length");
      return std::make_unique<CycleAdviceExplorer>(from_bits(bits, 0, bits.size()));
    case AdviceScheme::TadpoleLogPlusOne: {
      if (bits.size() < 2 || bits.size() > 63) mismatch("tadpole advice has a bad length");
      if (from_bits(bits, 0, bits.size() - 1) == 0) return std::make_unique<ShapeOneWalker>(bits.back());
      return std::make_unique<TreeDfs>(from_bits(bits, 0, bits.size()) - 2);
    }
    case AdviceScheme::TwoBit:
      if (bits.size() != 2) mismatch("2-bit advice needs exactly 2 bits");
      return std::make_unique<TwoBitExplorer>(bits[0], bits[1], or_greedy(cycle_subroutine));
  }
  mismatch("unknown scheme");
}

AdviceString advise(AdviceScheme scheme, const Graph& g, VertexId start) {
  switch (scheme) {
    case AdviceScheme::CycleLog: return advise_cycle(g, start);
    case AdviceScheme::TadpoleLogPlusOne: return advise_tadpole(g, start);
    case AdviceScheme::TwoBit: return advise_2bit(g, start);
  }
  mismatch("unknown scheme");
}

}  // namespace tadpole
