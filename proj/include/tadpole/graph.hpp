#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tadpole/rational.hpp"

namespace tadpole {

using VertexId = std::uint64_t;
using Weight = Rational;

/// Undirected weighted edge. Graph storage keeps u < v; decompositions keep
/// the traversal orientation instead.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight;

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool same_endpoints(const Edge& e) const {
    return (u == e.u && v == e.v) || (u == e.v && v == e.u);
  }
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
  }
};

struct Neighbor {
  VertexId id = 0;
  Weight weight;
};

/// Immutable connected simple graph with strictly positive exact weights.
class Graph {
 public:
  /// Validates: n >= 2, endpoints declared, no self-loops or parallel edges,
  /// positive weights, connected.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted ascending.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// Canonical (u < v), sorted lexicographically by endpoints.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(VertexId v) const { return adjacency_.contains(v); }
  /// Sorted by neighbor id. Throws InvalidArgument for unknown vertices.
  const std::vector<Neighbor>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::optional<Weight> weight(VertexId a, VertexId b) const;
  Rational total_weight() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::vector<Neighbor>> adjacency_;
};

/// Partition of a tadpole T_{i,j} into its cycle and its stem.
struct TadpoleDecomposition {
  /// Oriented around the cycle, starting and ending at the junction; the
  /// first edge leads to the junction's lower-id cycle neighbor.
  std::vector<Edge> cycle_edges;
  /// Oriented from the junction outward.
  std::vector<Edge> stem_edges;
  /// Junction first, then around the cycle in cycle_edges order.
  std::vector<VertexId> cycle_vertices;
  /// Stem vertices outward, excluding the junction; back() is the stem end.
  std::vector<VertexId> stem_vertices;
  VertexId junction = 0;
  VertexId stem_end = 0;
  std::size_t i = 0;  ///< cycle vertex count
  std::size_t j = 0;  ///< stem vertex count (junction excluded)

  Rational cycle_weight() const;
  Rational stem_weight() const;
  bool on_stem(VertexId v) const;  ///< junction excluded
};

/// T_{i,j}: junction 0, cycle 0..i-1 in order, stem i..i+j-1 outward.
/// Weights: cycle edges from the junction around, then stem edges outward.
Graph make_tadpole(std::size_t i, std::size_t j, std::span<const Weight> weights);
inline Graph make_tadpole(std::size_t i, std::size_t j, std::initializer_list<Weight> weights) {
  return make_tadpole(i, j, std::span<const Weight>(weights.begin(), weights.size()));
}

/// Simple cycle 0-1-...-(n-1)-0; weights[k] is edge (k, k+1 mod n).
Graph make_cycle(std::size_t n, std::span<const Weight> weights);
inline Graph make_cycle(std::size_t n, std::initializer_list<Weight> weights) {
  return make_cycle(n, std::span<const Weight>(weights.begin(), weights.size()));
}

/// Throws Error(NotATadpole) unless the degree multiset is {1, 3, 2^(n-2)}.
TadpoleDecomposition decompose_tadpole(const Graph& g);

bool is_tadpole(const Graph& g);
bool is_cycle(const Graph& g);

/// Cycle edges in traversal order from `from`, heading first to its lower-id
/// neighbor. Throws Error(NotACycle).
std::vector<Edge> cycle_order(const Graph& g, VertexId from);

}  // namespace tadpole
