#include "tadpole/adversary.hpp"

#include <algorithm>

#include "tadpole/error.hpp"
#include "tadpole/optimal.hpp"

namespace tadpole {

namespace {

const Weight kUnit = 1;

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorKind::AccountingMismatch, what); }

}  // namespace

const char* to_string(GameCase c) {
  switch (c) {
    case GameCase::Case1: return "case1";
    case GameCase::Case2a: return "case2a";
    case GameCase::Case2b: return "case2b";
  }
  return "unknown";
}

TadpoleAdversary::TadpoleAdversary(std::size_t k) : k_(k) {
  if (k < 4) throw Error(ErrorKind::InvalidArgument, "adversary needs k >= 4");
}

std::optional<std::size_t> TadpoleAdversary::vertex_count() const {
  if (!committed_) return std::nullopt;
  return committed_->vertex_count();
}

VertexId TadpoleAdversary::extend(int chain) {
  const VertexId id = next_id_++;
  chain_[chain].push_back(id);
  where_[id] = {chain, chain_[chain].size()};
  return id;
}

VertexId TadpoleAdversary::predecessor(int chain, std::size_t depth) const {
  if (depth > 1) return chain_[chain][depth - 2];
  return chain == kBranchX || chain == kBranchY ? junction_ : VertexId{0};
}

// Revealed vertices on the side chain beyond depth t1.
std::size_t TadpoleAdversary::side_revealed() const { return chain_[side_chain_].size() - t1_; }

std::vector<Neighbor> TadpoleAdversary::reveal(VertexId v) {
  if (committed_) return committed_->neighbors(v);

  if (v == 0) {
    const VertexId a = extend(kChainA);
    const VertexId b = extend(kChainB);
    return {{a, kUnit}, {b, kUnit}};
  }

  const auto [chain, depth] = where_.at(v);
  visited_depth_[chain] = std::max(visited_depth_[chain], depth);
  const VertexId prev = predecessor(chain, depth);

  if (phase_ == Phase::PreJunction) {
    if (depth < k_) return {{prev, kUnit}, {extend(chain), kUnit}};
    junction_chain_ = chain;
    side_chain_ = chain == kChainA ? kChainB : kChainA;
    junction_ = v;
    t1_ = visited_depth_[side_chain_];
    phase_ = Phase::PostJunction;
    const VertexId x = extend(kBranchX);
    const VertexId y = extend(kBranchY);
    return {{prev, kUnit}, {x, kUnit}, {y, kUnit}};
  }

  if (chain == kBranchX || chain == kBranchY) {
    if (depth + 1 + side_revealed() >= k_) {
      commit(chain, chain);
      return committed_->neighbors(v);
    }
    return {{prev, kUnit}, {extend(chain), kUnit}};
  }

  if (chain == side_chain_) {
    const std::size_t side_after = depth + 1 - t1_;
    const bool x_closes = chain_[kBranchX].size() + side_after >= k_;
    const bool y_closes = chain_[kBranchY].size() + side_after >= k_;
    if (x_closes || y_closes) {
      int branch = x_closes ? kBranchX : kBranchY;
      if (x_closes && y_closes && chain_[kBranchY].size() > chain_[kBranchX].size()) branch = kBranchY;
      commit(branch, chain);
      return committed_->neighbors(v);
    }
    return {{prev, kUnit}, {extend(chain), kUnit}};
  }

  throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " revealed twice");
}

void TadpoleAdversary::commit(int cycle_branch, int trigger_chain) {
  const int stem_branch = cycle_branch == kBranchX ? kBranchY : kBranchX;
  cycle_branch_ = cycle_branch;
  stem_depth_ = visited_depth_[stem_branch];
  cycle_depth_ = visited_depth_[cycle_branch];
  const std::size_t side_visited = visited_depth_[side_chain_] - t1_;

  if (trigger_chain == side_chain_) {
    case_ = GameCase::Case2a;
  } else {
    case_ = side_visited == 0 ? GameCase::Case1 : GameCase::Case2b;
  }

  // The pending reveal: one more vertex on the triggering chain.
  extend(trigger_chain);
  if (chain_[cycle_branch].size() + side_revealed() != k_) {
    throw Error(ErrorKind::InvalidArgument, "adversary cycle bookkeeping broke");
  }

  std::vector<VertexId> vertices;
  for (VertexId id = 0; id < next_id_; ++id) vertices.push_back(id);
  std::vector<Edge> edges;
  auto path = [&](VertexId root, const std::vector<VertexId>& chain) {
    VertexId prev = root;
    for (auto id : chain) {
      edges.push_back({prev, id, kUnit});
      prev = id;
    }
  };
  path(0, chain_[junction_chain_]);
  path(0, chain_[side_chain_]);
  path(junction_, chain_[cycle_branch]);
  path(junction_, chain_[stem_branch]);
  edges.push_back({chain_[cycle_branch].back(), chain_[side_chain_].back(), kUnit});

  committed_ = std::make_shared<const Graph>(std::move(vertices), std::move(edges));
  phase_ = Phase::Revealed;
}

std::string GameResult::aux() const {
  if (case_taken == GameCase::Case1) return "kp=" + std::to_string(k_prime);
  return "k1=" + std::to_string(k1) + ";k2=" + std::to_string(k2);
}

GameResult adversary_game(ExplorerPolicy& explorer, std::size_t k) {
  auto adversary = std::make_shared<TadpoleAdversary>(k);
  Session session(adversary, 0);
  const Tour tour = run_explorer(session, explorer, 1000 * k);

  GameResult r;
  r.explorer = explorer.name();
  r.k = k;
  r.t1 = adversary->t1();
  r.case_taken = adversary->game_case();
  if (r.case_taken == GameCase::Case1) {
    r.k_prime = adversary->stem_depth();
  } else {
    r.k1 = adversary->cycle_depth();
    r.k2 = adversary->stem_depth();
  }
  r.first_branch_is_cycle = adversary->first_branch_is_cycle();
  r.graph = adversary->committed();
  r.explorer_cost = tour.total_cost;
  r.opt_cost = opt_cost_tadpole(decompose_tadpole(*r.graph)).cost;
  r.ratio = r.explorer_cost / r.opt_cost;
  r.transcript = session.trace();
  r.reveal_log = session.observation().reveal_log();
  r.reveal_move = session.full_reveal_at().value_or(session.trace().size());
  return r;
}

GameResult adversary_game(const std::string& explorer_name, std::size_t k) {
  auto explorer = make_explorer(explorer_name);
  return adversary_game(*explorer, k);
}

Rational lb_ratio_bound(std::size_t k, std::size_t t1, std::size_t k_prime) {
  if (k < 4 || t1 >= k || k_prime >= k) {
    throw Error(ErrorKind::InvalidArgument, "need k >= 4, t1 < k, k' < k");
  }
  return Rational(2) - make_rational(4, static_cast<long>(3 + 2 * k + t1 + 2 * k_prime));
}

std::size_t min_k_for_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
  // 4/(3 + 2k) < eps  <=>  k > (4/eps - 3)/2
  const Rational threshold = (Rational(4) / epsilon - 3) / 2;
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), threshold.get_num_mpz_t(), threshold.get_den_mpz_t());
  const mpz_class candidate = floor_value + 1;
  return std::max<std::size_t>(4, candidate.get_ui());
}

Rational case_cost_bound(const GameResult& r) {
  const long k = static_cast<long>(r.k), t1 = static_cast<long>(r.t1);
  switch (r.case_taken) {
    case GameCase::Case1: return Rational(4 * k + 2 * t1 + 4 * static_cast<long>(r.k_prime) + 2);
    case GameCase::Case2a:
      return Rational(4 * k + 3 * t1 + 2 * static_cast<long>(r.k1) + 4 * static_cast<long>(r.k2) + 3);
    case GameCase::Case2b: return Rational(6 * k + 4 * t1 + 4 * static_cast<long>(r.k2) + 2);
  }
  return Rational(0);
}

Rational case_opt_formula(const GameResult& r) {
  return Rational(static_cast<long>(2 * r.k + r.t1 + 2 * r.stem_parameter() + 3));
}

bool verify_case_accounting(const GameResult& r) {
  if (!r.graph) mismatch("game has no committed graph");
  const auto d = decompose_tadpole(*r.graph);
  if (d.i != 2 * r.k + r.t1 + 1) {
    mismatch("cycle has " + std::to_string(d.i) + " vertices, expected 2k + t1 + 1 = " +
             std::to_string(2 * r.k + r.t1 + 1));
  }
  if (d.j != r.stem_parameter() + 1) {
    mismatch("stem has " + std::to_string(d.j) + " vertices, expected " + std::to_string(r.stem_parameter() + 1));
  }
  if (r.t1 >= r.k) mismatch("t1 >= k");
  if (r.stem_parameter() >= r.k) mismatch("stem parameter >= k");
  const Rational opt = case_opt_formula(r);
  if (r.opt_cost != opt) mismatch("OPT " + format_rational(r.opt_cost) + " != " + format_rational(opt));
  if (r.ratio != r.explorer_cost / r.opt_cost) mismatch("ratio is not cost / OPT");
  Rational paid = 0;
  for (const auto& m : r.transcript) paid += m.weight;
  if (paid != r.explorer_cost) mismatch("transcript does not sum to the explorer cost");
  const Rational bound = case_cost_bound(r);
  if (r.explorer_cost < bound) {
    mismatch(std::string(to_string(r.case_taken)) + ": cost " + format_rational(r.explorer_cost) + " < bound " +
             format_rational(bound));
  }
  return true;
}

bool replay_consistent(const GameResult& r) {
  if (!r.graph) return false;
  try {
    Session replay = new_session(r.graph, 0);
    for (std::size_t m = 0; m < r.reveal_move; ++m) replay.move_to(r.transcript[m].to);
    const auto& seen = replay.observation().reveal_log();
    if (seen.size() > r.reveal_log.size() || !std::equal(seen.begin(), seen.end(), r.reveal_log.begin())) {
      return false;
    }
  } catch (const Error&) {
    return false;
  }
  Rational total = 0;
  for (const auto& m : r.transcript) {
    const auto w = r.graph->weight(m.from, m.to);
    if (!w || *w != m.weight) return false;
    total += m.weight;
  }
  return total == r.explorer_cost;
}

}  // namespace tadpole
