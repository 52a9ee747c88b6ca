#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tadpole/session.hpp"

namespace tadpole {

/// A walk the driver should perform next: path.front() is the current
/// vertex, every consecutive pair must be a known edge.
struct Decision {
  std::vector<VertexId> path;

  VertexId target() const { return path.back(); }
};

/// Walk to `target` along the known shortest path.
Decision walk_to(const Observation& obs, VertexId target);
/// Single move along the known edge (current, next).
Decision step_to(const Observation& obs, VertexId next);

/// An online searcher. Sees only Observations; may keep private memory.
class ExplorerPolicy {
 public:
  virtual ~ExplorerPolicy() = default;

  /// Next walk, or nullopt once the tour is finished (searcher back at start).
  virtual std::optional<Decision> decide(const Observation& obs) = 0;
  virtual std::string name() const = 0;
};

using ExplorerFactory = std::function<std::unique_ptr<ExplorerPolicy>()>;

/// Runs `policy` until it reports completion. Throws
/// Error(NonterminatingExplorer) past `max_moves` and Error(IncompleteTour)
/// if the policy stops early.
Tour run_explorer(Session& session, ExplorerPolicy& policy, std::size_t max_moves = 0);

/// Nearest unvisited known vertex by known path cost; ties to the smaller id.
class GreedyExplorer final : public ExplorerPolicy {
 public:
  std::optional<Decision> decide(const Observation& obs) override;
  std::string name() const override { return "greedy"; }
};

/// Depth-first search, smallest neighbor id first, backtracking along the
/// DFS tree; once nothing is left unvisited it returns by a known shortest path.
class DfsExplorer final : public ExplorerPolicy {
 public:
  std::optional<Decision> decide(const Observation& obs) override;
  std::string name() const override { return "dfs"; }

 private:
  std::vector<VertexId> stack_;
};

/// Uniformly random unvisited known vertex each step, reached by a known shortest path.
class RandomExplorer final : public ExplorerPolicy {
 public:
  explicit RandomExplorer(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::optional<Decision> decide(const Observation& obs) override;
  std::string name() const override { return "random:" + std::to_string(seed_); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

Tour greedy_explore(Session& session);
Tour dfs_explore(Session& session);
Tour random_explore(Session& session, std::uint64_t seed);

/// Builds `greedy`, `dfs` or `random:<seed>`. Advice explorers need the
/// instance; see make_advice_explorer. Throws Error(InvalidArgument).
std::unique_ptr<ExplorerPolicy> make_explorer(const std::string& name);

}  // namespace tadpole
