#include "tadpole/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

std::string edge_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_positive(std::span<const Weight> weights) {
  for (const auto& w : weights) {
    if (w <= 0) throw Error(ErrorKind::NonPositiveWeight, "weight " + format_rational(w));
  }
}

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex id");
  }
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidArgument, "a graph needs at least 2 vertices");
  for (auto v : vertices) adjacency_[v];

  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!adjacency_.contains(e.u) || !adjacency_.contains(e.v)) {
      throw Error(ErrorKind::InvalidArgument, "edge " + edge_name(e.u, e.v) + " uses an undeclared vertex");
    }
    if (e.weight <= 0) {
      throw Error(ErrorKind::NonPositiveWeight, "edge " + edge_name(e.u, e.v) + " has weight " + format_rational(e.weight));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k - 1].u == edges[k].u && edges[k - 1].v == edges[k].v) {
      throw Error(ErrorKind::DuplicateEdge, "edge " + edge_name(edges[k].u, edges[k].v));
    }
  }
  for (const auto& e : edges) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  for (auto& [v, list] : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }

  std::set<VertexId> seen{vertices.front()};
  std::queue<VertexId> todo;
  todo.push(vertices.front());
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (const auto& nb : adjacency_.at(v)) {
      if (seen.insert(nb.id).second) todo.push(nb.id);
    }
  }
  if (seen.size() != vertices.size()) {
    throw Error(ErrorKind::Disconnected, std::to_string(vertices.size() - seen.size()) + " vertices unreachable");
  }

  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
}

const std::vector<Neighbor>& Graph::neighbors(VertexId v) const {
  const auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(v));
  return it->second;
}

std::optional<Weight> Graph::weight(VertexId a, VertexId b) const {
  const auto it = adjacency_.find(a);
  if (it == adjacency_.end()) return std::nullopt;
  for (const auto& nb : it->second) {
    if (nb.id == b) return nb.weight;
  }
  return std::nullopt;
}

Rational Graph::total_weight() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

Rational TadpoleDecomposition::cycle_weight() const {
  Rational sum = 0;
  for (const auto& e : cycle_edges) sum += e.weight;
  return sum;
}

Rational TadpoleDecomposition::stem_weight() const {
  Rational sum = 0;
  for (const auto& e : stem_edges) sum += e.weight;
  return sum;
}

bool TadpoleDecomposition::on_stem(VertexId v) const {
  return std::find(stem_vertices.begin(), stem_vertices.end(), v) != stem_vertices.end();
}

Graph make_tadpole(std::size_t i, std::size_t j, std::span<const Weight> weights) {
  if (i < 3) throw Error(ErrorKind::InvalidArgument, "tadpole cycle needs i >= 3");
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "tadpole stem needs j >= 1");
  if (weights.size() != i + j) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(i + j) + " weights, got " + std::to_string(weights.size()));
  }
  require_positive(weights);
  std::vector<VertexId> vertices(i + j);
  for (std::size_t v = 0; v < i + j; ++v) vertices[v] = v;
  std::vector<Edge> edges;
  edges.reserve(i + j);
  for (std::size_t c = 0; c < i; ++c) edges.push_back({c, (c + 1) % i, weights[c]});
  VertexId prev = 0;
  for (std::size_t s = 0; s < j; ++s) {
    edges.push_back({prev, i + s, weights[i + s]});
    prev = i + s;
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph make_cycle(std::size_t n, std::span<const Weight> weights) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
  if (weights.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }
  require_positive(weights);
  std::vector<VertexId> vertices(n);
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    vertices[v] = v;
    edges.push_back({v, (v + 1) % n, weights[v]});
  }
  return Graph(std::move(vertices), std::move(edges));
}

TadpoleDecomposition decompose_tadpole(const Graph& g) {
  std::vector<VertexId> ones, threes;
  for (auto v : g.vertices()) {
    switch (g.degree(v)) {
      case 1: ones.push_back(v); break;
      case 2: break;
      case 3: threes.push_back(v); break;
      default: throw Error(ErrorKind::NotATadpole, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (ones.size() != 1 || threes.size() != 1) {
    throw Error(ErrorKind::NotATadpole, "need exactly one degree-1 and one degree-3 vertex");
  }

  TadpoleDecomposition d;
  d.junction = threes.front();
  d.stem_end = ones.front();

  // Walk inward from the stem end; the walk stops at the junction.
  std::vector<Edge> inward;
  VertexId prev = d.stem_end;
  VertexId cur = g.neighbors(d.stem_end).front().id;
  inward.push_back({prev, cur, g.neighbors(d.stem_end).front().weight});
  while (cur != d.junction) {
    const auto& nbs = g.neighbors(cur);
    const auto& next = nbs[0].id == prev ? nbs[1] : nbs[0];
    inward.push_back({cur, next.id, next.weight});
    prev = cur;
    cur = next.id;
  }
  const VertexId stem_neighbor = prev;
  for (auto it = inward.rbegin(); it != inward.rend(); ++it) {
    d.stem_edges.push_back({it->v, it->u, it->weight});
    d.stem_vertices.push_back(it->u);
  }

  Neighbor first{};
  for (const auto& nb : g.neighbors(d.junction)) {
    if (nb.id != stem_neighbor) {
      first = nb;
      break;
    }
  }
  d.cycle_vertices.push_back(d.junction);
  d.cycle_edges.push_back({d.junction, first.id, first.weight});
  prev = d.junction;
  cur = first.id;
  while (cur != d.junction) {
    d.cycle_vertices.push_back(cur);
    const auto& nbs = g.neighbors(cur);
    const auto& next = nbs[0].id == prev ? nbs[1] : nbs[0];
    d.cycle_edges.push_back({cur, next.id, next.weight});
    prev = cur;
    cur = next.id;
  }
  d.i = d.cycle_vertices.size();
  d.j = d.stem_vertices.size();
  return d;
}

bool is_tadpole(const Graph& g) {
  try {
    decompose_tadpole(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_cycle(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  return std::all_of(g.vertices().begin(), g.vertices().end(), [&](VertexId v) { return g.degree(v) == 2; });
}

std::vector<Edge> cycle_order(const Graph& g, VertexId from) {
  if (!is_cycle(g)) throw Error(ErrorKind::NotACycle, "graph is not a simple cycle");
  if (!g.contains(from)) throw Error(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(from));
  std::vector<Edge> out;
  VertexId prev = from;
  const auto& first = g.neighbors(from).front();
  out.push_back({from, first.id, first.weight});
  VertexId cur = first.id;
  while (cur != from) {
    const auto& nbs = g.neighbors(cur);
    const auto& next = nbs[0].id == prev ? nbs[1] : nbs[0];
    out.push_back({cur, next.id, next.weight});
    prev = cur;
    cur = next.id;
  }
  return out;
}

}  // namespace tadpole
