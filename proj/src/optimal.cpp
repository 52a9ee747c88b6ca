#include "tadpole/optimal.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

std::pair<VertexId, VertexId> endpoints(const Edge& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

Shape classify_cycle_edges(const std::vector<Edge>& cycle) {
  Rational total = 0;
  const Edge* heaviest = nullptr;
  for (const auto& e : cycle) {
    total += e.weight;
    if (!heaviest || e.weight > heaviest->weight ||
        (e.weight == heaviest->weight && endpoints(e) < endpoints(*heaviest))) {
      heaviest = &e;
    }
  }
  if (heaviest->weight > total - heaviest->weight) return {Shape::Kind::Two, *heaviest};
  return {Shape::Kind::One, std::nullopt};
}

template <class Scalar>
using Matrix = std::vector<std::vector<Scalar>>;

// All-pairs shortest path distances (Floyd-Warshall).
template <class Scalar>
Matrix<Scalar> metric_closure(Matrix<std::optional<Scalar>> direct) {
  const std::size_t n = direct.size();
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!direct[a][m]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!direct[m][b]) continue;
        Scalar via = *direct[a][m] + *direct[m][b];
        if (!direct[a][b] || via < *direct[a][b]) direct[a][b] = std::move(via);
      }
    }
  }
  Matrix<Scalar> dist(n, std::vector<Scalar>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!direct[a][b]) throw Error(ErrorKind::Disconnected, "metric closure has an unreachable pair");
      dist[a][b] = *direct[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (dist[a][c] > dist[a][b] + dist[b][c]) {
          throw Error(ErrorKind::InvalidArgument, "metric closure violates the triangle inequality");
        }
      }
    }
  }
  return dist;
}

// Held-Karp: best[mask][last] is the cheapest path from the anchor through
// exactly the vertices in `mask` (anchor excluded), ending at `last`.
template <class Scalar>
Scalar held_karp(const Matrix<Scalar>& dist, std::size_t anchor) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != anchor) others.push_back(v);
  }
  const std::size_t r = others.size();
  const std::size_t full = (std::size_t{1} << r) - 1;
  std::vector<std::vector<std::optional<Scalar>>> best(full + 1, std::vector<std::optional<Scalar>>(r));
  for (std::size_t a = 0; a < r; ++a) best[std::size_t{1} << a][a] = dist[anchor][others[a]];
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < r; ++last) {
      if (!best[mask][last]) continue;
      const Scalar here = *best[mask][last];
      for (std::size_t nxt = 0; nxt < r; ++nxt) {
        const std::size_t bit = std::size_t{1} << nxt;
        if (mask & bit) continue;
        Scalar cand = here + dist[others[last]][others[nxt]];
        auto& slot = best[mask | bit][nxt];
        if (!slot || cand < *slot) slot = std::move(cand);
      }
    }
  }
  std::optional<Scalar> answer;
  for (std::size_t last = 0; last < r; ++last) {
    Scalar cand = *best[full][last] + dist[others[last]][anchor];
    if (!answer || cand < *answer) answer = std::move(cand);
  }
  return *answer;
}

template <class Scalar, class Convert>
Scalar solve(const Graph& g, std::size_t anchor, Convert convert) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  Matrix<std::optional<Scalar>> direct(n, std::vector<std::optional<Scalar>>(n));
  for (std::size_t a = 0; a < n; ++a) direct[a][a] = Scalar(0);
  for (const auto& e : g.edges()) {
    direct[index(e.u)][index(e.v)] = convert(e.weight);
    direct[index(e.v)][index(e.u)] = convert(e.weight);
  }
  return held_karp(metric_closure<Scalar>(std::move(direct)), anchor);
}

}  // namespace

Shape classify_shape(const TadpoleDecomposition& d) { return classify_cycle_edges(d.cycle_edges); }

OptCost opt_cost_tadpole(const TadpoleDecomposition& d) {
  const Shape shape = classify_shape(d);
  const Rational stem = d.stem_weight();
  const Rational cycle = d.cycle_weight();
  if (shape.is_shape2()) return {2 * (stem + cycle - shape.e_infinity->weight), shape};
  return {2 * stem + cycle, shape};
}

OptCost opt_cost_cycle(const Graph& g) {
  const auto cycle = cycle_order(g, g.vertices().front());
  const Shape shape = classify_cycle_edges(cycle);
  Rational total = 0;
  for (const auto& e : cycle) total += e.weight;
  if (shape.is_shape2()) return {2 * (total - shape.e_infinity->weight), shape};
  return {total, shape};
}

OptCost opt_cost(const Graph& g) {
  if (is_cycle(g)) return opt_cost_cycle(g);
  if (is_tadpole(g)) return opt_cost_tadpole(decompose_tadpole(g));
  throw Error(ErrorKind::InvalidArgument, "closed form only exists for tadpoles and cycles");
}

Rational brute_force_opt(const Graph& g, std::optional<VertexId> anchor) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceLimit) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceeds the limit of " + std::to_string(kBruteForceLimit));
  }
  const VertexId root = anchor.value_or(g.vertices().front());
  if (!g.contains(root)) throw Error(ErrorKind::InvalidArgument, "anchor " + std::to_string(root) + " not in graph");
  const auto& vs = g.vertices();
  const auto root_index = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), root) - vs.begin());

  // Scale to a common denominator; run in machine integers when every
  // partial tour is guaranteed to fit.
  mpz_class denom = 1;
  for (const auto& e : g.edges()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), e.weight.get_den().get_mpz_t());
  mpz_class scaled_total = 0;
  for (const auto& e : g.edges()) scaled_total += e.weight.get_num() * (denom / e.weight.get_den());
  const mpz_class worst = scaled_total * static_cast<unsigned long>(n + 1) * 2;
  if (worst < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    const auto scaled = solve<std::int64_t>(g, root_index, [&](const Weight& w) {
      mpz_class s = w.get_num() * (denom / w.get_den());
      return static_cast<std::int64_t>(s.get_si());
    });
    Rational out(mpz_class(static_cast<long>(scaled)), denom);
    out.canonicalize();
    return out;
  }
  return solve<Rational>(g, root_index, [](const Weight& w) { return w; });
}

}  // namespace tadpole
