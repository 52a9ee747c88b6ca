#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tadpole/explorer.hpp"
#include "tadpole/session.hpp"

namespace tadpole {

enum class GameCase { Case1, Case2a, Case2b };

const char* to_string(GameCase c);

/// Builds a unit-weight tadpole online, one reveal at a time, against
/// whatever the searcher does.
///
/// The searcher starts on a degree-2 vertex s = 0 and sees two chains. The
/// first chain on which it reaches hop distance k ends in the junction t;
/// t1 is the farthest depth visited on the other chain at that moment.
/// Two further chains leave t. The other chain from s and one of the two
/// new chains will close the cycle with exactly k vertices strictly between
/// t and the t1-th vertex of the other chain; the remaining new chain is the
/// stem. Which one is which stays open until the searcher could otherwise
/// see every cycle vertex, at which point the graph is fixed and shown in
/// full.
class TadpoleAdversary final : public RevealSource {
 public:
  enum class Phase { PreJunction, PostJunction, Revealed };

  explicit TadpoleAdversary(std::size_t k);

  bool contains(VertexId v) const override { return v < next_id_; }
  std::vector<Neighbor> reveal(VertexId v) override;
  std::optional<std::size_t> vertex_count() const override;
  const Graph* full_reveal() const override { return committed_.get(); }

  Phase phase() const { return phase_; }
  std::size_t k() const { return k_; }
  std::size_t t1() const { return t1_; }
  VertexId junction() const { return junction_; }
  GameCase game_case() const { return case_; }
  /// Farthest visited depth on the chain that became the stem (k' or k2).
  std::size_t stem_depth() const { return stem_depth_; }
  /// Farthest visited depth on the chain that became part of the cycle (k1).
  std::size_t cycle_depth() const { return cycle_depth_; }
  /// True when the first of the two post-junction chains closed the cycle.
  bool first_branch_is_cycle() const { return cycle_branch_ == kBranchX; }
  std::shared_ptr<const Graph> committed() const { return committed_; }

 private:
  // Chains: A and B leave s; X and Y leave the junction.
  static constexpr int kChainA = 0;
  static constexpr int kChainB = 1;
  static constexpr int kBranchX = 2;
  static constexpr int kBranchY = 3;

  VertexId extend(int chain);
  VertexId predecessor(int chain, std::size_t depth) const;
  std::size_t side_revealed() const;
  void commit(int cycle_branch, int trigger_chain);

  std::size_t k_;
  Phase phase_ = Phase::PreJunction;
  VertexId next_id_ = 1;
  std::array<std::vector<VertexId>, 4> chain_;
  std::array<std::size_t, 4> visited_depth_{};
  std::map<VertexId, std::pair<int, std::size_t>> where_;
  int junction_chain_ = -1;
  int side_chain_ = -1;
  VertexId junction_ = 0;
  std::size_t t1_ = 0;
  GameCase case_ = GameCase::Case1;
  int cycle_branch_ = -1;
  std::size_t stem_depth_ = 0;
  std::size_t cycle_depth_ = 0;
  std::shared_ptr<const Graph> committed_;
};

struct GameResult {
  std::string explorer;
  std::size_t k = 0;
  std::size_t t1 = 0;
  GameCase case_taken = GameCase::Case1;
  std::size_t k_prime = 0;  ///< Case 1: farthest visited stem-side depth
  std::size_t k1 = 0;       ///< Case 2: farthest visited depth on the cycle branch
  std::size_t k2 = 0;       ///< Case 2: farthest visited stem-side depth
  bool first_branch_is_cycle = true;
  Rational explorer_cost;
  Rational opt_cost;
  Rational ratio;
  std::vector<MoveEvent> transcript;
  std::vector<Edge> reveal_log;
  std::size_t reveal_move = 0;  ///< moves made before the full reveal
  std::shared_ptr<const Graph> graph;

  /// k' in Case 1, k2 in Case 2.
  std::size_t stem_parameter() const { return case_taken == GameCase::Case1 ? k_prime : k2; }
  /// `kp=<k'>` or `k1=<k1>;k2=<k2>`.
  std::string aux() const;
};

/// Plays the full game. k >= 4. Throws Error(NonterminatingExplorer) if the
/// explorer exceeds 1000*k moves.
GameResult adversary_game(ExplorerPolicy& explorer, std::size_t k);
GameResult adversary_game(const std::string& explorer_name, std::size_t k);

/// 2 - 4/(3 + 2k + t1 + 2 k_prime). Requires k >= 4, t1 < k, k_prime < k.
Rational lb_ratio_bound(std::size_t k, std::size_t t1, std::size_t k_prime);

/// Smallest k >= 4 with 2 - 4/(3 + 2k) > 2 - epsilon, for 0 < epsilon < 1.
std::size_t min_k_for_epsilon(const Rational& epsilon);

/// Case-specific lower bound on the searcher's traversals:
/// Case 1: 4k + 2t1 + 4k' + 2; Case 2a: 4k + 3t1 + 2k1 + 4k2 + 3;
/// Case 2b: 6k + 4t1 + 4k2 + 2.
Rational case_cost_bound(const GameResult& r);
/// 2k + t1 + 2(stem parameter) + 3.
Rational case_opt_formula(const GameResult& r);

/// Checks the committed graph shape, the OPT formula, the ratio, and the
/// case-specific cost bound. Throws Error(AccountingMismatch) naming the
/// failed relation; returns true otherwise.
bool verify_case_accounting(const GameResult& r);

/// Replays the transcript on the committed graph: every move before the full
/// reveal must be legal in the ordinary fog model and reveal the same edges.
bool replay_consistent(const GameResult& r);

}  // namespace tadpole
