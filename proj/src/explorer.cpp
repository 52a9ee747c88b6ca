#include "tadpole/explorer.hpp"

#include <charconv>

#include "tadpole/error.hpp"

namespace tadpole {

Decision walk_to(const Observation& obs, VertexId target) {
  return {known_shortest_path(obs, target).vertices};
}

Decision step_to(const Observation& obs, VertexId next) {
  return {{obs.current(), next}};
}

Tour run_explorer(Session& session, ExplorerPolicy& policy, std::size_t max_moves) {
  if (max_moves == 0) max_moves = 1'000'000;
  while (auto decision = policy.decide(session.observation())) {
    const auto& path = decision->path;
    if (path.empty() || path.front() != session.observation().current()) {
      throw Error(ErrorKind::IllegalMove, policy.name() + " produced a walk not starting at the current vertex");
    }
    for (std::size_t k = 1; k < path.size(); ++k) {
      session.move_to(path[k]);
      if (session.trace().size() > max_moves) {
        throw Error(ErrorKind::NonterminatingExplorer,
                    policy.name() + " exceeded " + std::to_string(max_moves) + " moves");
      }
    }
    if (path.size() == 1 && session.trace().size() >= max_moves) {
      throw Error(ErrorKind::NonterminatingExplorer, policy.name() + " stalled");
    }
  }
  if (!session.is_complete()) {
    throw Error(ErrorKind::IncompleteTour, policy.name() + " stopped before completing a closed tour");
  }
  return session.tour();
}

std::optional<Decision> GreedyExplorer::decide(const Observation& obs) {
  if (auto next = nearest_frontier(obs)) return Decision{std::move(next->vertices)};
  if (obs.current() == obs.start()) return std::nullopt;
  return walk_to(obs, obs.start());
}

std::optional<Decision> DfsExplorer::decide(const Observation& obs) {
  if (stack_.empty()) stack_.push_back(obs.start());
  if (obs.frontier().empty()) {
    if (obs.current() == obs.start()) return std::nullopt;
    return walk_to(obs, obs.start());
  }
  while (!stack_.empty() && stack_.back() != obs.current()) stack_.pop_back();
  if (stack_.empty()) throw Error(ErrorKind::IllegalMove, "dfs lost track of its stack");
  const auto next = obs.unvisited_neighbors(obs.current());
  if (!next.empty()) {
    stack_.push_back(next.front());
    return step_to(obs, next.front());
  }
  if (stack_.size() < 2) throw Error(ErrorKind::Unreachable, "dfs stack exhausted with unvisited vertices left");
  stack_.pop_back();
  return step_to(obs, stack_.back());
}

std::optional<Decision> RandomExplorer::decide(const Observation& obs) {
  const auto frontier = obs.frontier();
  if (frontier.empty()) {
    if (obs.current() == obs.start()) return std::nullopt;
    return walk_to(obs, obs.start());
  }
  std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
  return walk_to(obs, frontier[pick(rng_)]);
}

Tour greedy_explore(Session& session) {
  GreedyExplorer policy;
  return run_explorer(session, policy);
}

Tour dfs_explore(Session& session) {
  DfsExplorer policy;
  return run_explorer(session, policy);
}

Tour random_explore(Session& session, std::uint64_t seed) {
  RandomExplorer policy(seed);
  return run_explorer(session, policy);
}

std::unique_ptr<ExplorerPolicy> make_explorer(const std::string& name) {
  if (name == "greedy") return std::make_unique<GreedyExplorer>();
  if (name == "dfs") return std::make_unique<DfsExplorer>();
  if (name.starts_with("random:")) {
    const auto digits = std::string_view(name).substr(7);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorKind::InvalidArgument, "bad random seed in '" + name + "'");
    }
    return std::make_unique<RandomExplorer>(seed);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown explorer '" + name + "'");
}

}  // namespace tadpole
