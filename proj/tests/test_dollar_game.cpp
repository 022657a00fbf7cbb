#include <doctest.h>

#include <random>

#include "chipfire/catalog.hpp"
#include "chipfire/dollar_game.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

GameState game(Multigraph g, Divisor d) { return GameState(std::make_shared<const Multigraph>(std::move(g)), std::move(d)); }

Divisor replay(const Multigraph& g, Divisor d, const std::vector<Move>& moves) {
  GameState s(std::make_shared<const Multigraph>(g), std::move(d));
  for (const Move& m : moves) s.apply(m);
  return s.config();
}

}  // namespace

TEST_CASE("apply_move examples") {
  GameState s = game(cycle_graph(3), Divisor{0, 0, 0});
  GameState borrowed = apply_move(s, 1, MoveKind::Borrow);
  CHECK(borrowed.config() == Divisor{-1, 2, -1});
  CHECK(apply_move(borrowed, 1, MoveKind::Lend).config() == s.config());
  CHECK(borrowed.total() == 0);
  CHECK(degree(borrowed.config()) == 0);
  CHECK(borrowed.log() == std::vector<Move>{{1, MoveKind::Borrow}});
  CHECK_THROWS_AS(apply_move(s, 7, MoveKind::Lend), InvalidInput);
}

TEST_CASE("is_winnable examples") {
  CHECK_FALSE(is_winnable(game(cycle_graph(3), Divisor{-1, 1, 0})));
  CHECK_FALSE(is_winnable(game(banana_graph(2), Divisor{-1, 1})));
  CHECK(is_winnable(game(banana_graph(2), Divisor{-1, 2})));
}

TEST_CASE("winning_strategy examples") {
  auto none = winning_strategy(game(cycle_graph(4), Divisor{1, 0, 2, 0}));
  REQUIRE(none);
  CHECK(none->moves.empty());

  Multigraph c3 = cycle_graph(3);
  auto s = winning_strategy(game(c3, Divisor{-1, 2, -1}));
  REQUIRE(s);
  CHECK(s->moves == std::vector<Move>{{0, MoveKind::Borrow}, {2, MoveKind::Borrow}});
  CHECK(replay(c3, Divisor{-1, 2, -1}, s->moves) == Divisor{0, 0, 0});

  CHECK_FALSE(winning_strategy(game(banana_graph(2), Divisor{-1, 1})));
}

TEST_CASE("unwinnable_example examples") {
  CHECK(unwinnable_example(banana_graph(2), 0) == Divisor{-1, 1});
  CHECK(unwinnable_example(cycle_graph(3), 0) == Divisor{-1, 0, 1});
  Divisor tree = unwinnable_example(path_graph(3), 0);
  CHECK(degree(tree) == -1);
  Divisor lowered = unwinnable_example(five_vertex_chord_graph(), 2, Integer(-2));
  CHECK(degree(lowered) == -2);
  CHECK_THROWS_AS(unwinnable_example(cycle_graph(3), 0, Integer(1)), PreconditionViolation);
}

TEST_CASE("property: every reached configuration is equivalent, and Delta(f) is reachable") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    const std::size_t n = g.vertex_count();
    Divisor d = gen::divisor(rng, n, -4, 4);
    GameState s = game(g, d);
    std::uniform_int_distribution<VertexIndex> pick(0, n - 1);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 20; ++k) {
      s.apply({pick(rng), coin(rng) ? MoveKind::Borrow : MoveKind::Lend});
      CHECK(linearly_equivalent(g, s.config(), d));
      CHECK(s.config() == d + apply_laplacian(g, s.net_script()));
      CHECK(degree(s.config()) == s.total());
    }
    FiringScript f = gen::script(rng, n, -3, 3);
    std::vector<Move> moves;
    for (VertexIndex v = 0; v < n; ++v)
      for (Integer k = 0; k < (f[v] < 0 ? Integer(-f[v]) : f[v]); ++k)
        moves.push_back({v, f[v] > 0 ? MoveKind::Borrow : MoveKind::Lend});
    CHECK(replay(g, d, moves) == d + apply_laplacian(g, f));
  }
}

TEST_CASE("property: strategies win within the step bound and agree with the oracle") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    Divisor d = gen::divisor(rng, g.vertex_count(), -4, 4);
    GameState s = game(g, d);
    bool winnable = is_winnable(s);
    CHECK(winnable == oracle::winnable_by_borrowing(g, oracle::to_vec(d)));
    auto strategy = winning_strategy(s);
    CHECK(strategy.has_value() == winnable);
    if (!strategy) continue;
    CHECK(is_effective(replay(g, d, strategy->moves)));
    CHECK(Integer(strategy->moves.size()) <= strategy->step_bound);
    for (const Move& m : strategy->moves) CHECK(m.kind == MoveKind::Borrow);
  }
}

TEST_CASE("property: borrowing move count does not depend on the debtor policy") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    Divisor d = gen::divisor(rng, g.vertex_count(), -4, 4);
    if (!has_effective_representative(g, d)) continue;
    auto lowest = [](const Divisor&, const std::vector<VertexIndex>& debt) { return debt.front(); };
    BorrowingRun ref = borrowing_run(g, d, lowest, 1'000'000);
    REQUIRE(ref.reached_effective);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::mt19937_64 policy_rng(seed);
      auto random = [&](const Divisor&, const std::vector<VertexIndex>& debt) {
        std::uniform_int_distribution<std::size_t> pick(0, debt.size() - 1);
        return debt[pick(policy_rng)];
      };
      BorrowingRun other = borrowing_run(g, d, random, 1'000'000);
      CHECK(other.reached_effective);
      CHECK(other.borrowers.size() == ref.borrowers.size());
      CHECK(other.final_config == ref.final_config);
    }
  }
}

TEST_CASE("property: total >= g always winnable; the example at g - 1 is not") {
  for (const Multigraph& g : connected_multigraphs(4, 6)) {
    std::int64_t gg = genus(g);
    for (const Divisor& d : enumerate_reduced(g, 0, gg)) CHECK(is_winnable(game(g, d)));
    if (gg >= 1) CHECK_FALSE(is_winnable(game(g, unwinnable_example(g, 0))));
    CHECK_FALSE(is_winnable(game(g, unwinnable_example(g, 0, Integer(gg - 3)))));
  }
}
