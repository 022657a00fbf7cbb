#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

struct RankLimits {
  /// Cap on effective divisors E examined by one rank / linear-system query.
  /// The default covers n <= 10 at s <= 8 (C(17, 8) = 24310 per level).
  std::uint64_t max_effective_divisors = 500'000;
  /// Vertex orders are enumerated (n! of them) only up to this many vertices.
  std::size_t max_order_vertices = 8;
};

/// r(D) together with a failure witness: an effective E of degree r + 1 with
/// |D - E| empty. The witness is the lexicographically first such E; it is
/// absent only when the shortcut path skipped the search for it.
struct Rank {
  std::int64_t value;
  std::optional<Divisor> certificate;
};

struct LinearSystem {
  Divisor base;
  std::vector<Divisor> members;
};

/// Number of effective divisors of degree k on n vertices: C(n + k - 1, k).
Integer multiset_count(std::size_t n, std::int64_t k);

/// Effective divisors of degree k on n vertices, as sorted vertex multisets in
/// lexicographic order. Throws GuardExceeded past `cap`.
std::vector<Divisor> effective_divisors(std::size_t n, std::int64_t k, std::uint64_t cap);

/// |D| is non-empty: the base-reduced form is non-negative at the base.
bool has_effective_representative(const Multigraph& g, const Divisor& d, VertexIndex base = 0);

/// 1 when |D| is empty, else 0.
int epsilon(const Multigraph& g, const Divisor& d);

/// r(D). Degrees above 2g - 2 use r(D) = deg(D) - g; everything else is
/// decided by the definition.
Rank rank(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// r(D) straight from the definition, for every degree.
Rank rank_definitional(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// All effective divisors linearly equivalent to D.
LinearSystem linear_system(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// r(D) - r(K - D) == deg(D) + 1 - g, both ranks taken from the definition.
bool verify_riemann_roch(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// Exactly one of: an effective divisor equivalent to D, or a vertex order P
/// with an effective divisor equivalent to nu_P - D.
struct Dichotomy {
  enum class Branch { Effective, NonSpecialOrder };
  Branch branch;
  Divisor witness;
  std::optional<VertexOrder> order;
};

Dichotomy dichotomy(const Multigraph& g, const Divisor& d, VertexIndex base);

/// r(D) <= deg(D) / 2 for an effective special D. Throws
/// PreconditionViolation when D is not effective or not special.
bool clifford_check(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// Distinct classes (as 0-reduced divisors) of nu_P over all vertex orders.
std::vector<Divisor> nonspecial_order_classes(const Multigraph& g, const RankLimits& limits = {});

/// r(D) = min over D' ~ D and nu in N of deg+(D' - nu), minus one, with N
/// taken as the classes of the nu_P.
std::int64_t rank_via_nonspecial_orders(const Multigraph& g, const Divisor& d, const RankLimits& limits = {});

/// Memoizes definitional ranks per linear equivalence class.
class ClassRankCache {
 public:
  explicit ClassRankCache(const Multigraph& g, RankLimits limits = {}) : g_(&g), limits_(limits) {}
  std::int64_t rank(const Divisor& d);
  std::size_t size() const noexcept { return cache_.size(); }

 private:
  const Multigraph* g_;
  RankLimits limits_;
  std::map<Divisor, std::int64_t> cache_;
};

struct RrCriterionReport {
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  std::size_t classes_checked = 0;
  std::size_t nonspecial_classes = 0;
  bool rr1 = true;              ///< some nu in N with eps(D) + eps(nu - D) = 1
  bool rr2 = true;              ///< eps(D) = eps(K - D) in degree g - 1
  bool subadditivity = true;    ///< r(D + D') >= r(D) + r(D')
  bool rank_formula = true;     ///< min deg+ formula equals the definition
  std::vector<std::string> failures;

  bool ok() const noexcept { return rr1 && rr2 && subadditivity && rank_formula; }
};

/// Checks the Riemann-Roch criterion and its supporting identities on every
/// class with degree in [min_degree, max_degree].
RrCriterionReport verify_rr_criterion(const Multigraph& g, std::int64_t min_degree, std::int64_t max_degree,
                                      const RankLimits& limits = {});

}  // namespace chipfire
