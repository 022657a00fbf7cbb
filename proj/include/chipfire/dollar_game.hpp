#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

enum class MoveKind { Borrow, Lend };

struct Move {
  VertexIndex vertex = 0;
  MoveKind kind = MoveKind::Borrow;
  friend bool operator==(const Move&, const Move&) = default;
};

/// A dollar-game position: borrowing at v adds Delta(chi_v), lending
/// subtracts it. Every move is legal.
class GameState {
 public:
  GameState(std::shared_ptr<const Multigraph> graph, Divisor initial);

  const Multigraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Multigraph>& graph_ptr() const noexcept { return graph_; }
  const Divisor& initial() const noexcept { return initial_; }
  const Divisor& config() const noexcept { return config_; }
  const std::vector<Move>& log() const noexcept { return log_; }
  const Integer& total() const noexcept { return total_; }

  /// Borrows minus lends per vertex; config == initial + Delta(net_script).
  FiringScript net_script() const;

  void apply(const Move& move);

 private:
  std::shared_ptr<const Multigraph> graph_;
  Divisor initial_;
  Divisor config_;
  std::vector<Move> log_;
  Integer total_;
};

GameState apply_move(GameState s, VertexIndex v, MoveKind kind);

bool is_winnable(const GameState& s);

struct Strategy {
  std::vector<Move> moves;
  Integer step_bound;  ///< deg+(D) * diameter * |V|
};

Integer borrowing_step_bound(const Multigraph& g, const Divisor& d);

/// Borrowing-only strategy, lowest-index debtor first. Empty when the
/// position is unwinnable (decided from the reduced form, not the bound).
std::optional<Strategy> winning_strategy(const GameState& s);

/// Chooses the next borrower among the vertices currently in debt.
using DebtorPolicy = std::function<VertexIndex(const Divisor& config, const std::vector<VertexIndex>& in_debt)>;

struct BorrowingRun {
  bool reached_effective = false;
  Divisor final_config;
  std::vector<VertexIndex> borrowers;
};

/// Lets debtors borrow under `policy` until no vertex is in debt or
/// `max_steps` borrows have happened.
BorrowingRun borrowing_run(const Multigraph& g, const Divisor& d, const DebtorPolicy& policy, std::uint64_t max_steps);

/// nu_P for the order (v0, then the rest by index), lowered at the last vertex
/// of that order to total `total` (default g - 1). Unwinnable; total > g - 1
/// is a PreconditionViolation.
Divisor unwinnable_example(const Multigraph& g, VertexIndex v0, std::optional<Integer> total = std::nullopt);

}  // namespace chipfire
