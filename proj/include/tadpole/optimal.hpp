#pragma once

#include <optional>
#include <string>

#include "tadpole/graph.hpp"

namespace tadpole {

/// Shape of an optimal closed tour on a tadpole or cycle.
/// Shape 1: every cycle edge once, every stem edge twice.
/// Shape 2: every edge except `e_infinity` twice; only when c(e_infinity)
/// strictly exceeds the rest of the cycle.
struct Shape {
  enum class Kind { One, Two };
  Kind kind = Kind::One;
  std::optional<Edge> e_infinity;

  bool is_shape2() const { return kind == Kind::Two; }
  std::string label() const { return kind == Kind::One ? "shape1" : "shape2"; }
};

struct OptCost {
  Rational cost;
  Shape shape;
};

Shape classify_shape(const TadpoleDecomposition& d);
OptCost opt_cost_tadpole(const TadpoleDecomposition& d);
/// Throws Error(NotACycle).
OptCost opt_cost_cycle(const Graph& g);

/// Closed form for any tadpole or cycle; Error(InvalidArgument) otherwise.
OptCost opt_cost(const Graph& g);

inline constexpr std::size_t kBruteForceLimit = 14;

/// Exact TSP on the metric closure by subset dynamic programming, anchored at
/// `anchor` (default: smallest id). Throws Error(TooLarge) for n > 14.
Rational brute_force_opt(const Graph& g, std::optional<VertexId> anchor = std::nullopt);

}  // namespace tadpole
