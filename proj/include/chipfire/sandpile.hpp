#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// K+ = sum (deg(v) - 1)(v).
Divisor k_plus(const Multigraph& g);

/// D* = K+ - D. An involution.
Divisor star_transform(const Multigraph& g, const Divisor& d);

/// Chip counts for the constrained game; every entry is non-negative.
class SandpileConfig {
 public:
  explicit SandpileConfig(Divisor chips);
  const Divisor& chips() const noexcept { return chips_; }

 private:
  Divisor chips_;
};

/// Picks the next vertex to fire among those with chips >= degree.
using FiringPolicy =
    std::function<VertexIndex(const std::vector<std::int64_t>& config, const std::vector<VertexIndex>& eligible)>;

FiringPolicy lowest_index_policy();
FiringPolicy random_policy(std::uint64_t seed);
/// Cycles through the vertex indices, firing the next eligible one.
FiringPolicy round_robin_policy(std::size_t vertex_count);

struct RunResult {
  enum class Outcome { Terminated, Infinite };
  Outcome outcome = Outcome::Terminated;
  std::optional<Divisor> terminal;
  std::uint64_t move_count = 0;
  FiringScript fired;  ///< firings per vertex
  std::string reason;
};

inline constexpr std::uint64_t kDefaultSandpileCap = 1'000'000;

/// Plays the constrained game. A repeated configuration proves the game
/// infinite. Reaching `cap` moves without a repeat is settled by duality when
/// that proves the game infinite, and raises GuardExceeded otherwise.
RunResult run(const Multigraph& g, const SandpileConfig& c, const FiringPolicy& policy,
              std::uint64_t cap = kDefaultSandpileCap);

/// The game from c terminates iff |c*| is non-empty.
bool finiteness_via_duality(const Multigraph& g, const SandpileConfig& c);

/// Some ordering v1..v_{n-1} of the other vertices has 0 <= D(v) <= deg(v) - 1
/// and D - Delta(chi_{v0..vk}) >= 0 off v0 for every k >= 1.
bool is_critical(const Multigraph& g, const Divisor& d, VertexIndex v0);

/// The ordering witnessing is_critical, if any.
std::optional<std::vector<VertexIndex>> critical_order(const Multigraph& g, const Divisor& d, VertexIndex v0);

}  // namespace chipfire
