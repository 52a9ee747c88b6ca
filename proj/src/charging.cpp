#include "tadpole/charging.hpp"

#include <set>
#include <string>

#include "tadpole/error.hpp"

namespace tadpole {

namespace {

[[noreturn]] void violation(std::size_t step, const std::string& what) {
  throw Error(ErrorKind::AuditViolation, "step " + std::to_string(step) + ": " + what);
}

// Cheapest edge from v to an unvisited neighbor; ties to the smaller neighbor id.
std::optional<Edge> cheapest_open_edge(const Graph& g, VertexId v, const std::set<VertexId>& visited) {
  std::optional<Edge> best;
  for (const auto& nb : g.neighbors(v)) {
    if (visited.contains(nb.id)) continue;
    if (!best || nb.weight < best->weight) best = Edge{v, nb.id, nb.weight};
  }
  return best;
}

}  // namespace

ChargeReport charging_audit(const std::vector<MoveEvent>& trace, const Graph& g, VertexId start) {
  ChargeReport report;
  std::set<VertexId> visited{start};
  VertexId at = start;

  std::size_t k = 0;
  while (k < trace.size()) {
    StepRecord rec;
    rec.step_index = report.records.size() + 1;
    rec.path_taken.push_back(at);
    rec.step_cost = 0;
    rec.charged_edge = cheapest_open_edge(g, at, visited);
    const bool all_visited = visited.size() == g.vertex_count();

    // A step runs until a new vertex is reached, or to the end of the trace
    // for the closing return.
    bool reached_new = false;
    while (k < trace.size() && !reached_new) {
      const auto& m = trace[k++];
      if (m.from != at) violation(rec.step_index, "trace is not contiguous");
      const auto w = g.weight(m.from, m.to);
      if (!w || *w != m.weight) violation(rec.step_index, "move " + std::to_string(m.from) + "-" + std::to_string(m.to) + " does not match the graph");
      rec.step_cost += m.weight;
      rec.path_taken.push_back(m.to);
      at = m.to;
      reached_new = visited.insert(m.to).second;
    }
    rec.target = at;
    rec.final_return = all_visited;
    if (all_visited && k < trace.size()) violation(rec.step_index, "moves after the closing return");

    if (rec.charged_edge) {
      if (rec.step_cost > rec.charged_edge->weight) {
        violation(rec.step_index, "cost " + format_rational(rec.step_cost) + " exceeds charged edge weight " +
                                      format_rational(rec.charged_edge->weight));
      }
      for (const auto& e : report.edges_charged) {
        if (e.same_endpoints(*rec.charged_edge)) violation(rec.step_index, "edge charged twice");
      }
      report.edges_charged.push_back(*rec.charged_edge);
    } else {
      ++report.paths_charged;
      if (report.paths_charged > 2) violation(rec.step_index, "more than two path charges");
      if (report.paths_charged == 2 && !rec.final_return) {
        violation(rec.step_index, "second path charge is not the final return");
      }
    }
    report.total_cost += rec.step_cost;
    report.records.push_back(std::move(rec));
  }

  if (report.total_cost > 3 * g.total_weight()) {
    throw Error(ErrorKind::AuditViolation, "total " + format_rational(report.total_cost) +
                                               " exceeds three times the edge weight sum");
  }
  return report;
}

}  // namespace tadpole
