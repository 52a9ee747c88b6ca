#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tadpole/explorer.hpp"
#include "tadpole/graph.hpp"
#include "tadpole/session.hpp"

namespace tadpole {

enum class AdviceScheme { TwoBit, CycleLog, TadpoleLogPlusOne };

const char* to_string(AdviceScheme s);
/// Accepts `2bit`, `cycle`, `tadpole`.
AdviceScheme parse_scheme(std::string_view text);

struct AdviceString {
  AdviceScheme scheme = AdviceScheme::CycleLog;
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  /// ASCII bits, most significant first.
  std::string to_string() const;
  static AdviceString parse(AdviceScheme scheme, std::string_view text);
};

/// ceil(log2 n) for n >= 1.
std::size_t bits_needed(std::size_t n);

/// Position of an edge in the searcher's reveal log, written big-endian.
///
/// Cycle: ceil(log2 n) bits. Shape 1 marks the cheapest edge at start (the
/// first revealed one on ties); Shape 2 marks the heavy edge.
AdviceString advise_cycle(const Graph& g, VertexId start);
Tour explore_cycle_with_advice(Session& session, const AdviceString& advice);

/// Tadpole: ceil(log2 n) + 1 bits. Shape 1 is all zeros in the first
/// ceil(log2 n) bits followed by a direction bit for the first junction
/// arrival. Shape 2 is the whole string read as (reveal index + 2), which
/// keeps the leading part nonzero even when the heavy edge is revealed last.
AdviceString advise_tadpole(const Graph& g, VertexId start);
Tour explore_tadpole_with_advice(Session& session, const AdviceString& advice);

/// Two bits. At the junction both bits give the stem neighbor's rank among
/// the three neighbors. Elsewhere bit 1 says "start is on the stem" and bit 2
/// picks the stem among the two junction edges not used to arrive there.
AdviceString advise_2bit(const Graph& g, VertexId start, const ExplorerFactory& cycle_subroutine = {});
/// `cycle_subroutine` explores the cycle part; greedy when empty.
Tour explore_2bit(Session& session, const AdviceString& advice, const ExplorerFactory& cycle_subroutine = {});

/// The searcher used by the matching explore_* function.
std::unique_ptr<ExplorerPolicy> make_advice_explorer(const AdviceString& advice,
                                                     const ExplorerFactory& cycle_subroutine = {});

/// Computes advice for `start` under `scheme`.
AdviceString advise(AdviceScheme scheme, const Graph& g, VertexId start);

}  // namespace tadpole
