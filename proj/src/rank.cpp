#include "chipfire/rank.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "chipfire/detail/reduction_engine.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

using Small = std::vector<std::int64_t>;

Small to_small(const Divisor& d) {
  Small out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = to_int64(d[i], "rank.magnitude");
  return out;
}

Divisor from_small(const Small& x) {
  Divisor d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i];
  return d;
}

Divisor multiset_divisor(std::size_t n, const std::vector<VertexIndex>& multiset) {
  Divisor d(n);
  for (VertexIndex v : multiset) d[v] += 1;
  return d;
}

void reduce_small(detail::ReductionEngine& engine, Small& x) {
  try {
    engine.reduce(x);
  } catch (const Overflow&) {
    throw GuardExceeded("rank.magnitude", "intermediate coefficient exceeds 64-bit range");
  }
}

bool winnable_small(detail::ReductionEngine& engine, Small x) {
  reduce_small(engine, x);
  return x[engine.base()] >= 0;
}

void check_size(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw InvalidInput("divisor size does not match graph");
}

void check_budget(const Integer& count, const RankLimits& limits, const char* guard) {
  if (count > limits.max_effective_divisors)
    throw GuardExceeded(guard, count.str() + " effective divisors exceed the cap of " +
                                   std::to_string(limits.max_effective_divisors));
}

// Visits multisets of size k over n vertices in lexicographic order; stops
// early when the visitor returns true. Returns whether it stopped early.
bool visit_multisets(std::size_t n, std::int64_t k, const std::function<bool(const std::vector<VertexIndex>&)>& visit) {
  std::vector<VertexIndex> current;
  std::function<bool(VertexIndex)> recurse = [&](VertexIndex first) -> bool {
    if (static_cast<std::int64_t>(current.size()) == k) return visit(current);
    for (VertexIndex v = first; v < n; ++v) {
      current.push_back(v);
      if (recurse(v)) return true;
      current.pop_back();
    }
    return false;
  };
  return recurse(0);
}

// True when some effective E of degree s makes x + E winnable.
bool some_completion_winnable(detail::ReductionEngine& engine, const Small& x, std::int64_t s,
                              const RankLimits& limits) {
  check_budget(multiset_count(x.size(), s), limits, "rank.effective_divisors");
  return visit_multisets(x.size(), s, [&](const std::vector<VertexIndex>& e) {
    Small y = x;
    for (VertexIndex v : e) ++y[v];
    return winnable_small(engine, std::move(y));
  });
}

}  // namespace

Integer multiset_count(std::size_t n, std::int64_t k) {
  if (k < 0) return 0;
  // C(n + k - 1, k)
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (static_cast<std::int64_t>(n) - 1 + i) / i;
  return result;
}

std::vector<Divisor> effective_divisors(std::size_t n, std::int64_t k, std::uint64_t cap) {
  Integer count = multiset_count(n, k);
  if (count > cap)
    throw GuardExceeded("effective_divisors.count", count.str() + " divisors exceed the cap of " + std::to_string(cap));
  std::vector<Divisor> out;
  if (k < 0) return out;
  visit_multisets(n, k, [&](const std::vector<VertexIndex>& e) {
    out.push_back(multiset_divisor(n, e));
    return false;
  });
  return out;
}

bool has_effective_representative(const Multigraph& g, const Divisor& d, VertexIndex base) {
  check_size(g, d);
  if (degree(d) < 0) return false;
  return reduce(g, d, base).divisor[base] >= 0;
}

int epsilon(const Multigraph& g, const Divisor& d) { return has_effective_representative(g, d) ? 0 : 1; }

Rank rank_definitional(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  const std::size_t n = g.vertex_count();
  if (degree(d) < 0) return {-1, Divisor(n)};
  detail::ReductionEngine engine(g, 0);
  Small start = to_small(reduce(g, d, 0).divisor);
  if (start[0] < 0) return {-1, Divisor(n)};

  // Level s holds the reduced forms of D - E for every effective E of degree
  // s, in lexicographic order of E; level s + 1 extends each E by one vertex
  // at or after its last, reusing the parent's reduced form.
  struct Node {
    Small reduced;
    std::vector<VertexIndex> multiset;
  };
  std::vector<Node> level{{std::move(start), {}}};
  std::uint64_t examined = 1;
  for (std::int64_t s = 1;; ++s) {
    std::vector<Node> next;
    for (const Node& node : level) {
      VertexIndex first = node.multiset.empty() ? 0 : node.multiset.back();
      for (VertexIndex v = first; v < n; ++v) {
        if (++examined > limits.max_effective_divisors)
          throw GuardExceeded("rank.effective_divisors",
                              "more than " + std::to_string(limits.max_effective_divisors) + " effective divisors");
        Small x = node.reduced;
        --x[v];
        reduce_small(engine, x);
        std::vector<VertexIndex> multiset = node.multiset;
        multiset.push_back(v);
        if (x[0] < 0) return {s - 1, multiset_divisor(n, multiset)};
        next.push_back({std::move(x), std::move(multiset)});
      }
    }
    level = std::move(next);
  }
}

Rank rank(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  const std::size_t n = g.vertex_count();
  Integer deg = degree(d);
  if (deg < 0) return {-1, Divisor(n)};
  const std::int64_t genus_value = genus(g);
  if (deg <= 2 * genus_value - 2) return rank_definitional(g, d, limits);

  // Riemann-Roch with r(K - D) = -1 since deg(K - D) < 0.
  std::int64_t value = to_int64(deg, "rank.magnitude") - genus_value;
  Rank result{value, std::nullopt};
  if (multiset_count(n, value + 1) > limits.max_effective_divisors) return result;
  detail::ReductionEngine engine(g, 0);
  Small start = to_small(reduce(g, d, 0).divisor);
  visit_multisets(n, value + 1, [&](const std::vector<VertexIndex>& e) {
    Small x = start;
    for (VertexIndex v : e) --x[v];
    if (winnable_small(engine, std::move(x))) return false;
    result.certificate = multiset_divisor(n, e);
    return true;
  });
  return result;
}

LinearSystem linear_system(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  const std::size_t n = g.vertex_count();
  LinearSystem system{d, {}};
  Integer deg = degree(d);
  if (deg < 0) return system;
  std::int64_t k = to_int64(deg, "linear_system.magnitude");
  check_budget(multiset_count(n, k), limits, "linear_system.effective_divisors");
  detail::ReductionEngine engine(g, 0);
  Small target = to_small(reduce(g, d, 0).divisor);
  visit_multisets(n, k, [&](const std::vector<VertexIndex>& e) {
    Small x(n, 0);
    for (VertexIndex v : e) ++x[v];
    Small member = x;
    reduce_small(engine, x);
    if (x == target) system.members.push_back(from_small(member));
    return false;
  });
  return system;
}

bool verify_riemann_roch(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  Divisor residual = canonical_divisor(g) - d;
  std::int64_t lhs = rank_definitional(g, d, limits).value - rank_definitional(g, residual, limits).value;
  Integer rhs = degree(d) + 1 - genus(g);
  return Integer(lhs) == rhs;
}

Dichotomy dichotomy(const Multigraph& g, const Divisor& d, VertexIndex base) {
  check_size(g, d);
  const std::size_t n = g.vertex_count();
  ReducedDivisor reduced = reduce(g, d, base);
  const Divisor& r = reduced.divisor;
  if (r[base] >= 0) return {Dichotomy::Branch::Effective, r, std::nullopt};

  // Peel vertices off greedily: each next vertex is short of the edges it
  // sends back to the vertices already placed, so r <= nu_P off the base.
  std::vector<VertexIndex> sequence{base};
  std::vector<bool> placed(n, false);
  placed[base] = true;
  while (sequence.size() < n) {
    VertexIndex chosen = n;
    for (VertexIndex v = 0; v < n && chosen == n; ++v) {
      if (placed[v]) continue;
      std::int64_t back_edges = 0;
      for (const Neighbor& w : g.neighbors(v))
        if (placed[w.vertex]) back_edges += w.multiplicity;
      if (r[v] < back_edges) chosen = v;
    }
    if (chosen == n) throw std::logic_error("reduced divisor violates the parking condition");
    placed[chosen] = true;
    sequence.push_back(chosen);
  }
  VertexOrder order(std::move(sequence));
  Divisor witness = nu_divisor(g, order) - r;
  return {Dichotomy::Branch::NonSpecialOrder, std::move(witness), std::move(order)};
}

bool clifford_check(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  if (!is_effective(d)) throw PreconditionViolation("clifford_check: divisor is not effective");
  if (!has_effective_representative(g, canonical_divisor(g) - d))
    throw PreconditionViolation("clifford_check: divisor is not special (|K - D| is empty)");
  std::int64_t r = rank(g, d, limits).value;
  return Integer(2 * r) <= degree(d);
}

std::vector<Divisor> nonspecial_order_classes(const Multigraph& g, const RankLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_order_vertices)
    throw GuardExceeded("rank.vertex_orders", std::to_string(n) + "! vertex orders exceed the cap");
  std::vector<VertexIndex> sequence(n);
  std::iota(sequence.begin(), sequence.end(), VertexIndex{0});
  std::set<Divisor> classes;
  do {
    classes.insert(reduce(g, nu_divisor(g, VertexOrder(sequence)), 0).divisor);
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return {classes.begin(), classes.end()};
}

std::int64_t rank_via_nonspecial_orders(const Multigraph& g, const Divisor& d, const RankLimits& limits) {
  check_size(g, d);
  const std::int64_t genus_value = genus(g);
  const std::int64_t excess = to_int64(degree(d), "rank.magnitude") - (genus_value - 1);
  detail::ReductionEngine engine(g, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Divisor& nu : nonspecial_order_classes(g, limits)) {
    // Over the class of X = D - nu, min deg+ = deg(X) + min{deg E' : |X + E'| nonempty}.
    Small x = to_small(reduce(g, d - nu, 0).divisor);
    for (std::int64_t s = std::max<std::int64_t>(0, -excess); excess + s < best; ++s) {
      if (some_completion_winnable(engine, x, s, limits)) {
        best = excess + s;
        break;
      }
    }
  }
  return best - 1;
}

std::int64_t ClassRankCache::rank(const Divisor& d) {
  Divisor key = reduce(*g_, d, 0).divisor;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::int64_t value = rank_definitional(*g_, key, limits_).value;
  cache_.emplace(std::move(key), value);
  return value;
}

RrCriterionReport verify_rr_criterion(const Multigraph& g, std::int64_t min_degree, std::int64_t max_degree,
                                      const RankLimits& limits) {
  RrCriterionReport report;
  report.min_degree = min_degree;
  report.max_degree = max_degree;
  const std::int64_t genus_value = genus(g);
  const Divisor canonical = canonical_divisor(g);
  const std::vector<Divisor> nonspecial = nonspecial_order_classes(g, limits);
  report.nonspecial_classes = nonspecial.size();

  std::vector<Divisor> classes;
  for (std::int64_t k = min_degree; k <= max_degree; ++k) {
    auto reps = enumerate_reduced(g, 0, k);
    classes.insert(classes.end(), reps.begin(), reps.end());
  }
  report.classes_checked = classes.size();

  auto describe = [&](const Divisor& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].str();
    return s + "]";
  };

  for (const Divisor& d : classes) {
    int e = epsilon(g, d);
    bool found = std::any_of(nonspecial.begin(), nonspecial.end(),
                             [&](const Divisor& nu) { return e + epsilon(g, nu - d) == 1; });
    if (!found) {
      report.rr1 = false;
      report.failures.push_back("RR1 fails at " + describe(d));
    }
  }

  for (const Divisor& d : enumerate_reduced(g, 0, genus_value - 1)) {
    if (epsilon(g, d) != epsilon(g, canonical - d)) {
      report.rr2 = false;
      report.failures.push_back("RR2 fails at " + describe(d));
    }
  }

  ClassRankCache ranks(g, limits);
  std::vector<std::int64_t> class_rank(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    class_rank[i] = ranks.rank(classes[i]);
    if (rank_via_nonspecial_orders(g, classes[i], limits) != class_rank[i]) {
      report.rank_formula = false;
      report.failures.push_back("rank formula disagrees at " + describe(classes[i]));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (class_rank[i] < 0) continue;
    for (std::size_t j = i; j < classes.size(); ++j) {
      if (class_rank[j] < 0) continue;
      if (ranks.rank(classes[i] + classes[j]) < class_rank[i] + class_rank[j]) {
        report.subadditivity = false;
        report.failures.push_back("subadditivity fails at " + describe(classes[i]) + " + " + describe(classes[j]));
      }
    }
  }
  return report;
}

}  // namespace chipfire
