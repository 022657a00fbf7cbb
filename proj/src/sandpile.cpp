#include "chipfire/sandpile.hpp"

#include <memory>
#include <random>
#include <set>

#include "chipfire/errors.hpp"
#include "chipfire/rank.hpp"

namespace chipfire {

Divisor k_plus(const Multigraph& g) {
  Divisor k(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 1;
  return k;
}

Divisor star_transform(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw InvalidInput("divisor size does not match graph");
  return k_plus(g) - d;
}

SandpileConfig::SandpileConfig(Divisor chips) : chips_(std::move(chips)) {
  for (VertexIndex v = 0; v < chips_.size(); ++v)
    if (chips_[v] < 0) throw InvalidInput("sandpile configurations must be non-negative");
}

FiringPolicy lowest_index_policy() {
  return [](const std::vector<std::int64_t>&, const std::vector<VertexIndex>& eligible) { return eligible.front(); };
}

FiringPolicy random_policy(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const std::vector<std::int64_t>&, const std::vector<VertexIndex>& eligible) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return eligible[pick(*rng)];
  };
}

FiringPolicy round_robin_policy(std::size_t vertex_count) {
  auto next = std::make_shared<std::size_t>(0);
  return [next, vertex_count](const std::vector<std::int64_t>&, const std::vector<VertexIndex>& eligible) {
    // eligible is sorted; take the first index at or after the cursor, wrapping.
    VertexIndex chosen = eligible.front();
    for (VertexIndex v : eligible)
      if (v >= *next) {
        chosen = v;
        break;
      }
    *next = (chosen + 1) % vertex_count;
    return chosen;
  };
}

RunResult run(const Multigraph& g, const SandpileConfig& c, const FiringPolicy& policy, std::uint64_t cap) {
  const std::size_t n = g.vertex_count();
  if (c.chips().size() != n) throw InvalidInput("configuration size does not match graph");
  std::vector<std::int64_t> config(n);
  for (VertexIndex v = 0; v < n; ++v) config[v] = to_int64(c.chips()[v], "sandpile.magnitude");

  RunResult result;
  result.fired = FiringScript(n);
  std::vector<std::uint64_t> fired(n, 0);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<VertexIndex> eligible;
  auto finish = [&] {
    for (VertexIndex v = 0; v < n; ++v) result.fired[v] = fired[v];
  };

  while (true) {
    eligible.clear();
    for (VertexIndex v = 0; v < n; ++v)
      if (config[v] >= g.degree(v)) eligible.push_back(v);
    if (eligible.empty()) {
      result.outcome = RunResult::Outcome::Terminated;
      Divisor terminal(n);
      for (VertexIndex v = 0; v < n; ++v) terminal[v] = config[v];
      result.terminal = std::move(terminal);
      result.reason = "no vertex can fire";
      finish();
      return result;
    }
    if (!seen.insert(config).second) {
      result.outcome = RunResult::Outcome::Infinite;
      result.reason = "configuration repeated";
      finish();
      return result;
    }
    if (result.move_count >= cap) {
      finish();
      if (!finiteness_via_duality(g, c)) {
        result.outcome = RunResult::Outcome::Infinite;
        result.reason = "move cap reached; the dual divisor has an empty linear system";
        return result;
      }
      throw GuardExceeded("sandpile.moves", "no repeat or termination within " + std::to_string(cap) + " moves");
    }
    VertexIndex v = policy(config, eligible);
    if (v >= n || config[v] < g.degree(v)) throw std::logic_error("firing policy chose an ineligible vertex");
    config[v] -= g.degree(v);
    for (const Neighbor& nb : g.neighbors(v)) config[nb.vertex] += nb.multiplicity;
    ++fired[v];
    ++result.move_count;
  }
}

bool finiteness_via_duality(const Multigraph& g, const SandpileConfig& c) {
  return has_effective_representative(g, star_transform(g, c.chips()));
}

std::optional<std::vector<VertexIndex>> critical_order(const Multigraph& g, const Divisor& d, VertexIndex v0) {
  const std::size_t n = g.vertex_count();
  if (d.size() != n) throw InvalidInput("divisor size does not match graph");
  if (v0 >= n) throw InvalidInput("base vertex out of range");
  for (VertexIndex v = 0; v < n; ++v)
    if (v != v0 && (d[v] < 0 || d[v] > g.degree(v) - 1)) return std::nullopt;

  // Firing B = {v0, ..., vk} leaves v in B with D(v) - (edges from v leaving B),
  // and only raises vertices outside B. Growing B relaxes every condition, so
  // adding any currently admissible vertex never blocks a completion.
  std::vector<bool> in_b(n, false);
  in_b[v0] = true;
  std::vector<VertexIndex> order;
  while (order.size() + 1 < n) {
    bool extended = false;
    for (VertexIndex v = 0; v < n && !extended; ++v) {
      if (in_b[v]) continue;
      std::int64_t leaving = 0;
      for (const Neighbor& nb : g.neighbors(v))
        if (!in_b[nb.vertex]) leaving += nb.multiplicity;
      if (d[v] >= leaving) {
        in_b[v] = true;
        order.push_back(v);
        extended = true;
      }
    }
    if (!extended) return std::nullopt;
  }
  return order;
}

bool is_critical(const Multigraph& g, const Divisor& d, VertexIndex v0) { return critical_order(g, d, v0).has_value(); }

}  // namespace chipfire
