#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace oracle {

namespace {

std::vector<std::vector<std::optional<Rational>>> distances(const Graph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<VertexId, std::size_t> idx;
  for (std::size_t k = 0; k < n; ++k) idx[vs[k]] = k;
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    d[s][s] = Rational(0);
    for (std::size_t round = 0; round + 1 < n; ++round) {
      for (const auto& e : g.edges()) {
        const std::size_t a = idx[e.u], b = idx[e.v];
        if (d[s][a] && (!d[s][b] || *d[s][a] + e.weight < *d[s][b])) d[s][b] = *d[s][a] + e.weight;
        if (d[s][b] && (!d[s][a] || *d[s][b] + e.weight < *d[s][a])) d[s][a] = *d[s][b] + e.weight;
      }
    }
  }
  return d;
}

}  // namespace

Rational tsp_by_permutation(const Graph& g) {
  const auto d = distances(g);
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::optional<Rational> best;
  do {
    Rational c = *d[0][order.front()] + *d[order.back()][0];
    for (std::size_t k = 0; k + 1 < order.size(); ++k) c += *d[order[k]][order[k + 1]];
    if (!best || c < *best) best = c;
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

tadpole::KnownPath known_path_by_enumeration(const tadpole::Observation& obs, VertexId target) {
  std::optional<tadpole::KnownPath> best;
  std::vector<VertexId> path{obs.current()};
  auto better = [](const tadpole::KnownPath& a, const tadpole::KnownPath& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.vertices < b.vertices);
  };
  auto go = [&](auto&& self, const Rational& cost) -> void {
    const VertexId at = path.back();
    if (at == target) {
      tadpole::KnownPath cand{path, cost};
      if (!best || better(cand, *best)) best = cand;
      return;
    }
    if (path.size() > 1 && !obs.is_visited(at) && !obs.fully_revealed()) return;
    for (const auto& [u, w] : obs.known_neighbors(at)) {
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      path.push_back(u);
      self(self, cost + w);
      path.pop_back();
    }
  };
  go(go, Rational(0));
  if (!best) return {{}, Rational(-1)};
  return *best;
}

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexId> ids = g.vertices();
  std::vector<VertexId> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t k = 0; k < ids.size(); ++k) to[ids[k]] = shuffled[k];
  std::vector<tadpole::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({to[e.u], to[e.v], e.weight});
  return Graph(ids, edges);
}

std::vector<Weight> random_weights(std::size_t count, std::mt19937_64& rng, unsigned p_max, unsigned q_max) {
  std::uniform_int_distribution<unsigned> p(1, p_max), q(1, q_max);
  std::vector<Weight> w(count);
  for (auto& x : w) {
    x = Weight(p(rng), q(rng));
    x.canonicalize();
  }
  return w;
}

void force_heavy_edge(std::vector<Weight>& w, std::size_t cycle_len, std::size_t heavy, const Rational& margin) {
  Rational rest = 0;
  for (std::size_t k = 0; k < cycle_len; ++k) {
    if (k != heavy) rest += w[k];
  }
  w[heavy] = rest + margin;
}

std::vector<std::size_t> traversal_counts(const Graph& g, const std::vector<tadpole::MoveEvent>& trace) {
  std::vector<std::size_t> counts(g.edges().size());
  for (const auto& m : trace) {
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      if (g.edges()[k].same_endpoints({m.from, m.to, 0})) ++counts[k];
    }
  }
  return counts;
}

}  // namespace oracle
