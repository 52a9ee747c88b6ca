#include "tadpole/session.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

const std::map<VertexId, Weight> kNoNeighbors;

struct SearchState {
  std::map<VertexId, Rational> cost;
  std::map<VertexId, VertexId> pred;
  std::set<VertexId> settled;
};

std::vector<VertexId> path_to(const SearchState& st, VertexId source, VertexId v) {
  std::vector<VertexId> path{v};
  while (v != source) {
    v = st.pred.at(v);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Dijkstra over known edges from the current vertex. Vertices settle in cost
// order; a label only depends on strictly cheaper labels (weights > 0), so
// lexicographic tie-breaking is decided at relaxation time. `stop` is asked
// after each settled vertex and may end the search early.
SearchState search(const Observation& obs, const std::function<bool(VertexId, const Rational&)>& stop) {
  SearchState st;
  const VertexId source = obs.current();
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  st.cost[source] = 0;
  heap.push({Rational(0), source});
  while (!heap.empty()) {
    auto [c, v] = heap.top();
    heap.pop();
    if (st.settled.contains(v) || c != st.cost.at(v)) continue;
    st.settled.insert(v);
    if (stop && stop(v, c)) break;
    if (v != source && !obs.is_visited(v) && !obs.fully_revealed()) continue;
    for (const auto& [u, w] : obs.known_neighbors(v)) {
      if (st.settled.contains(u)) continue;
      Rational candidate = c + w;
      const auto it = st.cost.find(u);
      bool better = it == st.cost.end() || candidate < it->second;
      if (!better && candidate == it->second) {
        auto mine = path_to(st, source, v);
        mine.push_back(u);
        better = mine < path_to(st, source, u);
      }
      if (better) {
        st.cost[u] = candidate;
        st.pred[u] = v;
        heap.push({std::move(candidate), u});
      }
    }
  }
  return st;
}

}  // namespace

std::vector<VertexId> Observation::known_vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, nbs] : adjacency_) out.push_back(v);
  return out;
}

std::vector<VertexId> Observation::frontier() const {
  std::vector<VertexId> out;
  for (const auto& [v, nbs] : adjacency_) {
    if (!visited_.contains(v)) out.push_back(v);
  }
  return out;
}

const std::map<VertexId, Weight>& Observation::known_neighbors(VertexId v) const {
  const auto it = adjacency_.find(v);
  return it == adjacency_.end() ? kNoNeighbors : it->second;
}

std::optional<Weight> Observation::known_weight(VertexId a, VertexId b) const {
  const auto& nbs = known_neighbors(a);
  const auto it = nbs.find(b);
  if (it == nbs.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Observation::unvisited_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& [u, w] : known_neighbors(v)) {
    if (!visited_.contains(u)) out.push_back(u);
  }
  return out;
}

Observation Observation::restricted(const std::set<VertexId>& hidden, VertexId start) const {
  Observation view;
  view.current_ = current_;
  view.start_ = start;
  view.cost_ = cost_;
  view.fully_revealed_ = fully_revealed_;
  for (auto v : visited_) {
    if (!hidden.contains(v)) view.visited_.insert(v);
  }
  for (const auto& [v, nbs] : adjacency_) {
    if (hidden.contains(v)) continue;
    auto& mine = view.adjacency_[v];
    for (const auto& [u, w] : nbs) {
      if (!hidden.contains(u)) mine.emplace(u, w);
    }
  }
  for (const auto& e : reveal_log_) {
    if (!hidden.contains(e.u) && !hidden.contains(e.v)) view.reveal_log_.push_back(e);
  }
  view.edge_count_ = view.reveal_log_.size();
  return view;
}

void Observation::add_edge(VertexId a, VertexId b, const Weight& w) {
  adjacency_[a].emplace(b, w);
  adjacency_[b].emplace(a, w);
  reveal_log_.push_back({a, b, w});
  ++edge_count_;
}

KnownPath known_shortest_path(const Observation& obs, VertexId target) {
  if (!obs.is_known(target) && target != obs.current()) {
    throw Error(ErrorKind::Unreachable, "vertex " + std::to_string(target) + " is not known");
  }
  auto st = search(obs, [target](VertexId v, const Rational&) { return v == target; });
  if (!st.settled.contains(target)) {
    throw Error(ErrorKind::Unreachable, "no known path to " + std::to_string(target));
  }
  return {path_to(st, obs.current(), target), st.cost.at(target)};
}

std::optional<KnownPath> nearest_frontier(const Observation& obs) {
  std::optional<Rational> best;
  const auto st = search(obs, [&](VertexId v, const Rational& c) {
    if (best && c > *best) return true;
    if (!best && !obs.is_visited(v)) best = c;
    return false;
  });
  if (!best) {
    if (!obs.frontier().empty()) throw Error(ErrorKind::Unreachable, "frontier not reachable over known edges");
    return std::nullopt;
  }
  for (auto v : st.settled) {
    if (!obs.is_visited(v) && st.cost.at(v) == *best) return KnownPath{path_to(st, obs.current(), v), *best};
  }
  throw Error(ErrorKind::Unreachable, "nearest frontier vertex vanished");
}

std::map<VertexId, KnownPath> known_shortest_paths(const Observation& obs) {
  const auto st = search(obs, {});
  std::map<VertexId, KnownPath> out;
  for (auto v : st.settled) out.emplace(v, KnownPath{path_to(st, obs.current(), v), st.cost.at(v)});
  return out;
}

Session::Session(std::shared_ptr<RevealSource> source, VertexId start) : source_(std::move(source)) {
  if (!source_->contains(start)) {
    throw Error(ErrorKind::UnknownStartVertex, "start vertex " + std::to_string(start) + " is not in the graph");
  }
  obs_.current_ = start;
  obs_.start_ = start;
  obs_.adjacency_[start];
  visit(start);
}

void Session::visit(VertexId v) {
  obs_.visited_.insert(v);
  auto revealed = source_->reveal(v);
  std::sort(revealed.begin(), revealed.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  for (const auto& nb : revealed) {
    if (!obs_.known_weight(v, nb.id)) obs_.add_edge(v, nb.id, nb.weight);
  }
  if (obs_.fully_revealed_) return;
  if (const Graph* all = source_->full_reveal()) {
    for (const auto& e : all->edges()) {
      if (!obs_.known_weight(e.u, e.v)) obs_.add_edge(e.u, e.v, e.weight);
    }
    obs_.fully_revealed_ = true;
    full_reveal_at_ = trace_.size();
  }
}

const Observation& Session::move_to(VertexId next) {
  const auto w = obs_.known_weight(obs_.current_, next);
  if (!w) {
    throw Error(ErrorKind::IllegalMove,
                "no known edge " + std::to_string(obs_.current_) + "-" + std::to_string(next));
  }
  trace_.push_back({obs_.current_, next, *w});
  obs_.cost_ += *w;
  obs_.current_ = next;
  if (!obs_.visited_.contains(next)) visit(next);
  return obs_;
}

bool Session::is_complete() const {
  const auto n = source_->vertex_count();
  return n && obs_.visited_.size() == *n && obs_.current_ == obs_.start_;
}

Tour Session::tour() const {
  Tour t;
  t.moves.push_back(obs_.start_);
  for (const auto& m : trace_) t.moves.push_back(m.to);
  t.total_cost = obs_.cost_;
  return t;
}

Session new_session(std::shared_ptr<const Graph> g, VertexId start) {
  return Session(std::make_shared<StaticReveal>(std::move(g)), start);
}

Session new_session(const Graph& g, VertexId start) {
  return new_session(std::make_shared<const Graph>(g), start);
}

std::string trace_csv(const std::vector<MoveEvent>& trace) {
  std::string out = "step,from,to,weight,cumulative_cost\n";
  Rational total = 0;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    total += trace[k].weight;
    out += std::to_string(k + 1) + "," + std::to_string(trace[k].from) + "," + std::to_string(trace[k].to) + "," +
           format_rational(trace[k].weight) + "," + format_rational(total) + "\n";
  }
  return out;
}

bool is_valid_tour(const Graph& g, VertexId start, const Tour& tour) {
  if (tour.moves.empty() || tour.moves.front() != start || tour.moves.back() != start) return false;
  Rational total = 0;
  std::set<VertexId> seen{start};
  for (std::size_t k = 1; k < tour.moves.size(); ++k) {
    const auto w = g.weight(tour.moves[k - 1], tour.moves[k]);
    if (!w) return false;
    total += *w;
    seen.insert(tour.moves[k]);
  }
  return total == tour.total_cost && seen.size() == g.vertex_count();
}

}  // namespace tadpole
