#include "chipfire/reduction.hpp"

#include <algorithm>

#include "chipfire/detail/reduction_engine.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

void check_inputs(const Multigraph& g, const Divisor& d, VertexIndex base) {
  if (d.size() != g.vertex_count()) throw InvalidInput("divisor size does not match graph");
  if (base >= g.vertex_count()) throw InvalidInput("base vertex out of range");
}

}  // namespace

bool is_reduced_exhaustive(const Multigraph& g, const Divisor& d, VertexIndex base) {
  check_inputs(g, d, base);
  const std::size_t n = g.vertex_count();
  std::vector<VertexIndex> others;
  for (VertexIndex v = 0; v < n; ++v) {
    if (v == base) continue;
    if (d[v] < 0) return false;
    others.push_back(v);
  }
  if (others.size() >= 63) throw GuardExceeded("is_reduced.subsets", "too many vertices for subset scan");
  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  std::vector<bool> in_a(n);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::fill(in_a.begin(), in_a.end(), false);
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1u) in_a[others[i]] = true;
    bool some_vertex_short = false;
    for (VertexIndex v = 0; v < n && !some_vertex_short; ++v) {
      if (!in_a[v]) continue;
      std::int64_t outdeg = 0;
      for (const Neighbor& w : g.neighbors(v))
        if (!in_a[w.vertex]) outdeg += w.multiplicity;
      some_vertex_short = d[v] < outdeg;
    }
    if (!some_vertex_short) return false;
  }
  return true;
}

bool is_reduced_burning(const Multigraph& g, const Divisor& d, VertexIndex base) {
  check_inputs(g, d, base);
  detail::ReductionEngine engine(g, base);
  return engine.is_reduced(d.values());
}

bool is_reduced(const Multigraph& g, const Divisor& d, VertexIndex base) {
  if (g.vertex_count() <= kExhaustiveReducedMaxVertices) return is_reduced_exhaustive(g, d, base);
  return is_reduced_burning(g, d, base);
}

ReducedDivisor reduce(const Multigraph& g, const Divisor& d, VertexIndex base) {
  check_inputs(g, d, base);
  const std::size_t n = g.vertex_count();
  detail::ReductionEngine engine(g, base);

  bool small = std::all_of(d.values().begin(), d.values().end(), [](const Integer& c) { return fits_int64(c); });
  if (small) {
    std::vector<std::int64_t> work(n), lends(n, 0);
    for (std::size_t i = 0; i < n; ++i) work[i] = d[i].convert_to<std::int64_t>();
    try {
      engine.reduce(work, &lends);
      Divisor out(n);
      FiringScript script(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = work[i];
        script[i] = lends[i];
      }
      return {std::move(out), base, normalize_script(std::move(script))};
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  std::vector<Integer> work = d.values();
  std::vector<Integer> lends(n, Integer(0));
  engine.reduce(work, &lends);
  return {Divisor(std::move(work)), base, normalize_script(FiringScript(std::move(lends)))};
}

std::vector<Divisor> enumerate_reduced(const Multigraph& g, VertexIndex base, const Integer& degree,
                                       const EnumerationLimits& limits) {
  if (base >= g.vertex_count()) throw InvalidInput("base vertex out of range");
  const std::size_t n = g.vertex_count();
  // (P2) on singletons bounds D(v) by deg(v) - 1 off the base.
  std::uint64_t candidates = 1;
  for (VertexIndex v = 0; v < n; ++v) {
    if (v == base) continue;
    auto choices = static_cast<std::uint64_t>(g.degree(v));
    if (candidates > limits.max_candidates / std::max<std::uint64_t>(choices, 1))
      throw GuardExceeded("enumerate_reduced.candidates",
                          "more than " + std::to_string(limits.max_candidates) + " candidate divisors");
    candidates *= choices;
  }

  detail::ReductionEngine engine(g, base);
  std::vector<std::int64_t> work(n, 0);
  std::vector<Divisor> result;
  std::vector<VertexIndex> others;
  for (VertexIndex v = 0; v < n; ++v)
    if (v != base) others.push_back(v);
  std::int64_t off_base_sum = 0;
  while (true) {
    if (engine.is_reduced(work)) {
      Divisor d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = work[i];
      d[base] = degree - off_base_sum;
      result.push_back(std::move(d));
    }
    // Odometer over 0 <= D(v) <= deg(v) - 1.
    std::size_t k = 0;
    for (; k < others.size(); ++k) {
      VertexIndex v = others[k];
      if (work[v] + 1 < g.degree(v)) {
        ++work[v];
        ++off_base_sum;
        break;
      }
      off_base_sum -= work[v];
      work[v] = 0;
    }
    if (k == others.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace chipfire
