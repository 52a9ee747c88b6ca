#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tadpole/graph.hpp"

namespace tadpole {

/// Supplies the hidden side of the exploration: called once per vertex, on
/// its first visit, to reveal its full neighborhood. Static graphs and the
/// online adversary both implement it.
class RevealSource {
 public:
  virtual ~RevealSource() = default;

  virtual bool contains(VertexId v) const = 0;
  virtual std::vector<Neighbor> reveal(VertexId v) = 0;
  /// Total vertex count once the graph is fixed; nullopt while it is still being built.
  virtual std::optional<std::size_t> vertex_count() const = 0;
  /// Non-null once the source wants the whole graph shown to the searcher.
  virtual const Graph* full_reveal() const { return nullptr; }
};

/// RevealSource backed by a fixed graph.
class StaticReveal final : public RevealSource {
 public:
  explicit StaticReveal(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {}

  bool contains(VertexId v) const override { return graph_->contains(v); }
  std::vector<Neighbor> reveal(VertexId v) override { return graph_->neighbors(v); }
  std::optional<std::size_t> vertex_count() const override { return graph_->vertex_count(); }

  const Graph& graph() const { return *graph_; }

 private:
  std::shared_ptr<const Graph> graph_;
};

struct MoveEvent {
  VertexId from = 0;
  VertexId to = 0;
  Weight weight;
};

/// Everything the searcher may know. Holds no reference to the hidden graph.
class Observation {
 public:
  VertexId current() const { return current_; }
  VertexId start() const { return start_; }
  const Rational& cost() const { return cost_; }

  const std::set<VertexId>& visited() const { return visited_; }
  bool is_visited(VertexId v) const { return visited_.contains(v); }
  bool is_known(VertexId v) const { return adjacency_.contains(v); }
  /// Visited vertices plus frontier, ascending.
  std::vector<VertexId> known_vertices() const;
  /// Known but unvisited, ascending.
  std::vector<VertexId> frontier() const;

  /// Known incident edges of v keyed by neighbor id; empty for unknown v.
  const std::map<VertexId, Weight>& known_neighbors(VertexId v) const;
  std::optional<Weight> known_weight(VertexId a, VertexId b) const;
  /// Unvisited ends of known edges at v, ascending.
  std::vector<VertexId> unvisited_neighbors(VertexId v) const;
  std::size_t known_edge_count() const { return edge_count_; }

  /// Edges in the order they became known. Edges revealed together (by one
  /// first visit) are ordered by the id of their far endpoint.
  const std::vector<Edge>& reveal_log() const { return reveal_log_; }

  /// True after the hidden side exposed the entire graph.
  bool fully_revealed() const { return fully_revealed_; }

  /// Copy with the given vertices (and their edges) removed and a new start.
  /// Used to hand a sub-explorer a restricted view.
  Observation restricted(const std::set<VertexId>& hidden, VertexId start) const;

 private:
  friend class Session;

  void add_edge(VertexId a, VertexId b, const Weight& w);

  VertexId current_ = 0;
  VertexId start_ = 0;
  Rational cost_ = 0;
  std::set<VertexId> visited_;
  std::map<VertexId, std::map<VertexId, Weight>> adjacency_;
  std::vector<Edge> reveal_log_;
  std::size_t edge_count_ = 0;
  bool fully_revealed_ = false;
};

struct KnownPath {
  std::vector<VertexId> vertices;  ///< from current to target, inclusive
  Rational cost;
};

/// Minimum-cost path over known edges from the current vertex to `target`.
/// Interior vertices must be visited (unless the graph is fully revealed).
/// Ties go to the lexicographically smallest vertex sequence.
/// Throws Error(Unreachable) if no such path exists.
KnownPath known_shortest_path(const Observation& obs, VertexId target);

/// Known shortest path to the cheapest frontier vertex (ties: smaller id);
/// nullopt when the frontier is empty.
std::optional<KnownPath> nearest_frontier(const Observation& obs);

/// Same rule, for every vertex reachable from the current one.
std::map<VertexId, KnownPath> known_shortest_paths(const Observation& obs);

/// A closed walk from the start vertex.
struct Tour {
  std::vector<VertexId> moves;
  Rational total_cost;
};

/// Exploration state machine. Single owner; not thread-safe.
class Session {
 public:
  Session(std::shared_ptr<RevealSource> source, VertexId start);

  const Observation& observation() const { return obs_; }
  const std::vector<MoveEvent>& trace() const { return trace_; }

  /// Moves along a known edge; pays its weight every time.
  /// Throws Error(IllegalMove) if (current, next) is not a known edge.
  const Observation& move_to(VertexId next);

  /// visited == V and current == start.
  bool is_complete() const;

  /// Number of moves made before the source exposed the whole graph, if it did.
  std::optional<std::size_t> full_reveal_at() const { return full_reveal_at_; }

  Tour tour() const;

 private:
  void visit(VertexId v);

  std::shared_ptr<RevealSource> source_;
  Observation obs_;
  std::vector<MoveEvent> trace_;
  std::optional<std::size_t> full_reveal_at_;
};

/// Throws Error(UnknownStartVertex) if start is not in g.
Session new_session(const Graph& g, VertexId start);
Session new_session(std::shared_ptr<const Graph> g, VertexId start);

/// `step,from,to,weight,cumulative_cost` with a header line; weights as p/q.
std::string trace_csv(const std::vector<MoveEvent>& trace);

/// Checks adjacency, closure and coverage of a tour against g.
bool is_valid_tour(const Graph& g, VertexId start, const Tour& tour);

}  // namespace tadpole
