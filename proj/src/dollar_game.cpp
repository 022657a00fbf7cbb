#include "chipfire/dollar_game.hpp"

#include <stdexcept>

#include "chipfire/errors.hpp"
#include "chipfire/rank.hpp"

namespace chipfire {

namespace {

constexpr std::uint64_t kStrategyHardCap = 50'000'000;

void borrow(const Multigraph& g, Divisor& d, VertexIndex v, const Integer& times = 1) {
  d[v] += times * g.degree(v);
  for (const Neighbor& nb : g.neighbors(v)) d[nb.vertex] -= times * nb.multiplicity;
}

}  // namespace

GameState::GameState(std::shared_ptr<const Multigraph> graph, Divisor initial)
    : graph_(std::move(graph)), initial_(std::move(initial)) {
  if (!graph_) throw InvalidInput("game requires a graph");
  if (initial_.size() != graph_->vertex_count()) throw InvalidInput("divisor size does not match graph");
  config_ = initial_;
  total_ = degree(initial_);
}

FiringScript GameState::net_script() const {
  FiringScript f(graph_->vertex_count());
  for (const Move& m : log_) f[m.vertex] += m.kind == MoveKind::Borrow ? 1 : -1;
  return f;
}

void GameState::apply(const Move& move) {
  if (move.vertex >= graph_->vertex_count()) throw InvalidInput("move vertex out of range");
  borrow(*graph_, config_, move.vertex, move.kind == MoveKind::Borrow ? 1 : -1);
  log_.push_back(move);
}

GameState apply_move(GameState s, VertexIndex v, MoveKind kind) {
  s.apply({v, kind});
  return s;
}

bool is_winnable(const GameState& s) { return has_effective_representative(s.graph(), s.config()); }

Integer borrowing_step_bound(const Multigraph& g, const Divisor& d) {
  return deg_plus(d) * diameter(g) * Integer(g.vertex_count());
}

BorrowingRun borrowing_run(const Multigraph& g, const Divisor& d, const DebtorPolicy& policy, std::uint64_t max_steps) {
  BorrowingRun run;
  run.final_config = d;
  std::vector<VertexIndex> in_debt;
  while (true) {
    in_debt.clear();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      if (run.final_config[v] < 0) in_debt.push_back(v);
    if (in_debt.empty()) {
      run.reached_effective = true;
      return run;
    }
    if (run.borrowers.size() >= max_steps) return run;
    VertexIndex v = policy(run.final_config, in_debt);
    if (run.final_config[v] >= 0) throw std::logic_error("debtor policy chose a vertex that is not in debt");
    borrow(g, run.final_config, v);
    run.borrowers.push_back(v);
  }
}

std::optional<Strategy> winning_strategy(const GameState& s) {
  if (!is_winnable(s)) return std::nullopt;
  Strategy strategy;
  strategy.step_bound = borrowing_step_bound(s.graph(), s.config());
  // Winnable positions always terminate under borrowing; the cap only guards
  // against pathological magnitudes.
  BorrowingRun run = borrowing_run(
      s.graph(), s.config(), [](const Divisor&, const std::vector<VertexIndex>& in_debt) { return in_debt.front(); },
      kStrategyHardCap);
  if (!run.reached_effective)
    throw GuardExceeded("dollar_game.strategy_steps", "more than " + std::to_string(kStrategyHardCap) + " borrows");
  for (VertexIndex v : run.borrowers) strategy.moves.push_back({v, MoveKind::Borrow});
  return strategy;
}

Divisor unwinnable_example(const Multigraph& g, VertexIndex v0, std::optional<Integer> total) {
  if (v0 >= g.vertex_count()) throw InvalidInput("base vertex out of range");
  std::vector<VertexIndex> sequence{v0};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (v != v0) sequence.push_back(v);
  Divisor d = nu_divisor(g, VertexOrder(sequence));
  const Integer top = genus(g) - 1;
  if (total) {
    if (*total > top) throw PreconditionViolation("every configuration with total >= g is winnable");
    d[sequence.back()] -= top - *total;
  }
  return d;
}

}  // namespace chipfire
