#include <doctest.h>

#include <algorithm>

#include "tadpole/adversary.hpp"
#include "tadpole/error.hpp"

using namespace tadpole;

namespace {

// Before the full reveal: always the unvisited neighbor with the largest id.
// After it: the cheapest order over the remaining vertices, ending at start.
class ClairvoyantFinish final : public ExplorerPolicy {
 public:
  std::optional<Decision> decide(const Observation& obs) override {
    if (!obs.fully_revealed()) {
      const auto next = obs.unvisited_neighbors(obs.current());
      if (!next.empty()) return step_to(obs, next.back());
      return walk_to(obs, nearest_frontier(obs)->vertices.back());
    }
    if (plan_.empty()) plan(obs);
    if (plan_.empty()) return std::nullopt;
    const VertexId target = plan_.front();
    plan_.erase(plan_.begin());
    return walk_to(obs, target);
  }
  std::string name() const override { return "clairvoyant"; }

 private:
  void plan(const Observation& obs) {
    auto dist = [&](VertexId a, VertexId b) {
      // Dijkstra-free: the whole graph is known, so Bellman-Ford over known edges.
      std::map<VertexId, Rational> d{{a, 0}};
      for (std::size_t round = 0; round < obs.known_vertices().size(); ++round) {
        for (auto u : obs.known_vertices()) {
          if (!d.contains(u)) continue;
          for (const auto& [v, w] : obs.known_neighbors(u)) {
            if (!d.contains(v) || d[u] + w < d[v]) d[v] = d[u] + w;
          }
        }
      }
      return d.at(b);
    };
    std::vector<VertexId> rest = obs.frontier();
    std::optional<Rational> best;
    do {
      Rational c = 0;
      VertexId at = obs.current();
      for (auto v : rest) {
        c += dist(at, v);
        at = v;
      }
      c += dist(at, obs.start());
      if (!best || c < *best) {
        best = c;
        plan_ = rest;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (obs.current() != obs.start()) plan_.push_back(obs.start());
  }

  std::vector<VertexId> plan_;
};

}  // namespace

TEST_CASE("ratio bound formula") {
  CHECK(lb_ratio_bound(4, 0, 0) == make_rational(18, 11));
  CHECK(lb_ratio_bound(50, 0, 0) == Rational(2) - make_rational(4, 103));
  CHECK(lb_ratio_bound(10, 3, 2) == Rational(2) - make_rational(4, 30));
  Rational prev = 0;
  for (std::size_t k = 4; k < 300; ++k) {
    const Rational r = lb_ratio_bound(k, 0, 0);
    CHECK(r > prev);
    CHECK(r < 2);
    prev = r;
  }
  CHECK_THROWS_AS(lb_ratio_bound(3, 0, 0), Error);
  CHECK_THROWS_AS(lb_ratio_bound(5, 5, 0), Error);
  CHECK_THROWS_AS(lb_ratio_bound(5, 0, 5), Error);
}

TEST_CASE("minimal k for epsilon") {
  CHECK(min_k_for_epsilon(make_rational(1, 100)) == 199);
  CHECK(min_k_for_epsilon(make_rational(1, 10)) == 19);
  CHECK(min_k_for_epsilon(make_rational(9, 10)) == 4);
  CHECK_THROWS_AS(min_k_for_epsilon(Rational(0)), Error);
}

TEST_CASE("greedy game at k = 4") {
  const GameResult r = adversary_game("greedy", 4);
  CHECK(r.case_taken == GameCase::Case1);
  CHECK(r.t1 == 0);
  CHECK(r.k_prime == 0);
  CHECK(r.explorer_cost == 18);
  CHECK(r.opt_cost == 11);
  CHECK(r.ratio == make_rational(18, 11));
  CHECK(r.ratio >= lb_ratio_bound(4, 0, 0));
  CHECK(r.aux() == "kp=0");
  CHECK(verify_case_accounting(r));
  CHECK(replay_consistent(r));
  const auto d = decompose_tadpole(*r.graph);
  CHECK(d.i == 9);
  CHECK(d.j == 1);
}

TEST_CASE("greedy and dfs at k = 50") {
  for (auto name : {"greedy", "dfs"}) {
    const GameResult r = adversary_game(name, 50);
    CHECK(r.ratio >= lb_ratio_bound(50, 0, 0));
    CHECK(verify_case_accounting(r));
    CHECK(replay_consistent(r));
  }
}

TEST_CASE("tampered results are rejected") {
  GameResult r = adversary_game("greedy", 10);
  r.explorer_cost -= 5;
  r.ratio = r.explorer_cost / r.opt_cost;
  try {
    verify_case_accounting(r);
    FAIL("expected AccountingMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AccountingMismatch);
  }
  CHECK_FALSE(replay_consistent(r));

  GameResult wrong_opt = adversary_game("dfs", 6);
  wrong_opt.opt_cost += 1;
  CHECK_THROWS_AS(verify_case_accounting(wrong_opt), Error);
}

TEST_CASE("committed graph shape across random searchers") {
  std::size_t case2b_checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t k = 4 + seed % 9;
    const GameResult r = adversary_game("random:" + std::to_string(seed), k);
    const auto d = decompose_tadpole(*r.graph);
    CHECK(d.i == 2 * k + r.t1 + 1);
    CHECK(d.j == r.stem_parameter() + 1);
    CHECK(r.t1 < k);
    CHECK(r.opt_cost == case_opt_formula(r));
    // With the shortcut below the worst case is 2 - 7/(2k + 3), reached in case 1.
    CHECK(r.ratio >= Rational(2) - make_rational(7, static_cast<long>(2 * k + 3)));
    CHECK(replay_consistent(r));
    // Case bounds hold up to the stem-first saving of 3 - t1 in cases 1 and 2b.
    const long saving = r.case_taken == GameCase::Case2a ? 0 : std::max(0L, 3 - static_cast<long>(r.t1));
    CHECK(r.explorer_cost >= case_cost_bound(r) - saving);
    if (r.case_taken == GameCase::Case2b && r.t1 >= 3) {
      ++case2b_checked;
      CHECK(r.explorer_cost >= Rational(static_cast<long>(6 * k + 4 * r.t1 + 4 * r.k2 + 2)));
      CHECK(verify_case_accounting(r));
    }
  }
  CHECK(case2b_checked > 0);
}

TEST_CASE("stem-first completion undercuts the case 1 bound when t1 < 3") {
  ClairvoyantFinish searcher;
  const GameResult r = adversary_game(searcher, 4);
  CHECK(r.case_taken == GameCase::Case1);
  CHECK(r.t1 == 0);
  CHECK(r.k_prime == 0);
  CHECK(r.opt_cost == 11);
  CHECK(r.explorer_cost == 15);
  CHECK(case_cost_bound(r) == 18);
  CHECK(r.ratio < lb_ratio_bound(4, 0, 0));
  CHECK(replay_consistent(r));
  CHECK_THROWS_AS(verify_case_accounting(r), Error);
}

TEST_CASE("adversary rejects small k and reveals lazily") {
  CHECK_THROWS_AS(TadpoleAdversary(3), Error);
  TadpoleAdversary adv(4);
  CHECK_FALSE(adv.vertex_count());
  const auto first = adv.reveal(0);
  CHECK(first.size() == 2);
  CHECK(adv.phase() == TadpoleAdversary::Phase::PreJunction);
  CHECK(adv.contains(2));
  CHECK_FALSE(adv.contains(3));
}
