#pragma once

#include <optional>
#include <vector>

#include "tadpole/graph.hpp"
#include "tadpole/session.hpp"

namespace tadpole {

/// One step of an exploration: the walk from one newly visited vertex to the
/// next (or the closing walk back to the start).
struct StepRecord {
  std::size_t step_index = 0;  ///< 1-based
  VertexId target = 0;
  std::vector<VertexId> path_taken;
  Rational step_cost;
  /// Set when the step is charged to an incident edge of its first vertex;
  /// otherwise the step charges its own walk.
  std::optional<Edge> charged_edge;
  bool final_return = false;
};

struct ChargeReport {
  std::vector<StepRecord> records;
  std::vector<Edge> edges_charged;
  std::size_t paths_charged = 0;
  Rational total_cost;
};

/// Re-derives the step decomposition of `trace` (starting at `start`) on `g`
/// and applies the edge/path charging rules. Throws Error(AuditViolation)
/// when a charged step costs more than its edge, an edge is charged twice,
/// more than two paths are charged, a second path charge is not the final
/// return, or the total exceeds three times the total edge weight.
ChargeReport charging_audit(const std::vector<MoveEvent>& trace, const Graph& g, VertexId start);

}  // namespace tadpole
