#pragma once

// Brute-force reference implementations. They read only the raw edge list and
// use plain arithmetic, so they share no algorithm with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/integer.hpp"
#include "chipfire/matrix.hpp"
#include "chipfire/multigraph.hpp"

namespace oracle {

using chipfire::Divisor;
using chipfire::Edge;
using chipfire::Integer;
using chipfire::IntegerMatrix;
using chipfire::Multigraph;
using chipfire::VertexIndex;
using Vec = std::vector<std::int64_t>;

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

inline bool connected_with(std::size_t n, const std::vector<Edge>& edges, const std::vector<bool>& use) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = n;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!use[e]) continue;
    std::size_t a = find_root(parent, edges[e].u), b = find_root(parent, edges[e].v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

/// Counts (n-1)-edge subsets forming a spanning tree.
inline std::uint64_t spanning_trees(const Multigraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (n == 1) return 1;
  std::uint64_t count = 0;
  std::vector<bool> use(m, false);
  std::fill(use.begin(), use.begin() + static_cast<long>(n - 1), true);
  std::sort(use.begin(), use.end());
  do {
    if (connected_with(n, g.edges(), use)) ++count;
  } while (std::next_permutation(use.begin(), use.end()));
  return count;
}

/// Edge ids whose deletion disconnects the graph.
inline std::vector<std::size_t> bridges(const Multigraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::vector<bool> use(g.edge_count(), true);
    use[e] = false;
    if (!connected_with(g.vertex_count(), g.edges(), use)) out.push_back(e);
  }
  return out;
}

/// Minimum cut over all bipartitions, by subset scan.
inline std::int64_t min_cut(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::int64_t best = -1;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::int64_t cut = 0;
    for (const Edge& e : g.edges()) cut += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

/// Delta(f) read straight off the edge list.
inline Vec laplacian_apply(const Multigraph& g, const Vec& f) {
  Vec out(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    out[e.u] += f[e.u] - f[e.v];
    out[e.v] += f[e.v] - f[e.u];
  }
  return out;
}

inline Vec to_vec(const Divisor& d) {
  Vec v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = static_cast<std::int64_t>(d[i]);
  return v;
}

inline Divisor to_divisor(const Vec& v) {
  Divisor d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i];
  return d;
}

/// Searches f with f(0) = 0 and |f(v)| <= bound such that a - b = Delta(f).
inline bool equivalent_by_search(const Multigraph& g, const Vec& a, const Vec& b, std::int64_t bound) {
  const std::size_t n = g.vertex_count();
  Vec target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = a[i] - b[i];
  Vec f(n, 0);
  if (n == 1) return target[0] == 0;
  for (std::size_t i = 1; i < n; ++i) f[i] = -bound;
  while (true) {
    if (laplacian_apply(g, f) == target) return true;
    std::size_t i = 1;
    while (i < n && f[i] == bound) f[i++] = -bound;
    if (i == n) return false;
    ++f[i];
  }
}

inline std::int64_t outdeg(const Multigraph& g, VertexIndex v, const std::vector<bool>& in_a) {
  std::int64_t out = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == v && !in_a[e.v]) ++out;
    if (e.v == v && !in_a[e.u]) ++out;
  }
  return out;
}

/// The parking conditions checked over every non-empty subset.
inline bool is_reduced_by_subsets(const Multigraph& g, const Vec& d, VertexIndex base) {
  const std::size_t n = g.vertex_count();
  for (VertexIndex v = 0; v < n; ++v)
    if (v != base && d[v] < 0) return false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask >> base) & 1) continue;
    std::vector<bool> in_a(n);
    for (VertexIndex v = 0; v < n; ++v) in_a[v] = (mask >> v) & 1;
    bool some_short = false;
    for (VertexIndex v = 0; v < n && !some_short; ++v)
      if (in_a[v] && d[v] < outdeg(g, v, in_a)) some_short = true;
    if (!some_short) return false;
  }
  return true;
}

/// Winnability by letting the lowest debtor borrow until debt-free or a
/// configuration repeats (the reachable set is finite).
inline bool winnable_by_borrowing(const Multigraph& g, Vec d) {
  std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  if (total < 0) return false;
  std::set<Vec> seen;
  while (true) {
    auto debtor = std::find_if(d.begin(), d.end(), [](std::int64_t x) { return x < 0; });
    if (debtor == d.end()) return true;
    if (!seen.insert(d).second) return false;
    VertexIndex v = static_cast<VertexIndex>(debtor - d.begin());
    for (const Edge& e : g.edges()) {
      if (e.u == v) {
        ++d[v];
        --d[e.v];
      } else if (e.v == v) {
        ++d[v];
        --d[e.u];
      }
    }
  }
}

inline void for_each_multiset(std::size_t n, std::int64_t k, const std::function<void(const Vec&)>& visit) {
  Vec e(n, 0);
  std::function<void(VertexIndex, std::int64_t)> rec = [&](VertexIndex v, std::int64_t left) {
    if (v + 1 == n) {
      e[v] = left;
      visit(e);
      e[v] = 0;
      return;
    }
    for (std::int64_t c = left; c >= 0; --c) {
      e[v] = c;
      rec(v + 1, left - c);
    }
    e[v] = 0;
  };
  if (k >= 0) rec(0, k);
}

/// r(D) straight from the definition, with borrowing winnability.
inline std::int64_t rank_by_definition(const Multigraph& g, const Vec& d) {
  const std::size_t n = g.vertex_count();
  for (std::int64_t s = 0;; ++s) {
    bool all = true;
    for_each_multiset(n, s, [&](const Vec& e) {
      if (!all) return;
      Vec x = d;
      for (std::size_t i = 0; i < n; ++i) x[i] -= e[i];
      if (!winnable_by_borrowing(g, x)) all = false;
    });
    if (!all) return s - 1;
  }
}

inline Vec nu(const Multigraph& g, const std::vector<VertexIndex>& order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  Vec out(g.vertex_count(), -1);
  for (const Edge& e : g.edges()) ++out[pos[e.u] < pos[e.v] ? e.v : e.u];
  return out;
}

/// Some ordering of the other vertices keeps every D_k >= 0 off v0.
inline bool is_critical_by_permutations(const Multigraph& g, const Vec& d, VertexIndex v0) {
  const std::size_t n = g.vertex_count();
  for (VertexIndex v = 0; v < n; ++v) {
    if (v == v0) continue;
    if (d[v] < 0 || d[v] > static_cast<std::int64_t>(g.degree(v)) - 1) return false;
  }
  std::vector<VertexIndex> rest;
  for (VertexIndex v = 0; v < n; ++v)
    if (v != v0) rest.push_back(v);
  do {
    Vec f(n, 0);
    f[v0] = 1;
    bool ok = true;
    for (std::size_t k = 0; k < rest.size() && ok; ++k) {
      f[rest[k]] = 1;
      Vec dk = laplacian_apply(g, f);
      for (VertexIndex v = 0; v < n && ok; ++v)
        if (v != v0 && d[v] - dk[v] < 0) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

/// Constrained game by direct simulation (lowest eligible vertex fires);
/// true when it stops, false on a repeated configuration.
inline bool sandpile_terminates(const Multigraph& g, Vec c) {
  std::set<Vec> seen;
  while (true) {
    VertexIndex v = 0;
    while (v < c.size() && c[v] < static_cast<std::int64_t>(g.degree(v))) ++v;
    if (v == c.size()) return true;
    if (!seen.insert(c).second) return false;
    for (const Edge& e : g.edges()) {
      if (e.u == v) {
        --c[v];
        ++c[e.v];
      } else if (e.v == v) {
        --c[v];
        ++c[e.u];
      }
    }
  }
}

// Determinant by cofactor expansion; only for the tiny matrices below.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(row);
    }
    Integer term = m[0][c] * cofactor_det(sub);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

/// Invariant factors s_k = d_k / d_(k-1), d_k the gcd of all k x k minors.
/// Zero factors appear once the rank is exhausted.
inline std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    subsets_of_size(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets_of_size(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        Integer det = cofactor_det(sub);
        g = boost::multiprecision::gcd(g, det < 0 ? Integer(-det) : det);
      });
    });
    if (g == 0) {
      out.push_back(0);
      previous = 0;
      continue;
    }
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

/// Minimum of x^T G x over nonzero integer x with every |x_i| <= bound.
inline std::optional<Integer> shortest_in_box(const IntegerMatrix& gram, std::int64_t bound) {
  const std::size_t k = gram.rows();
  if (k == 0) return std::nullopt;
  std::vector<std::int64_t> x(k, -bound);
  std::optional<Integer> best;
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) {
      Integer norm = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) norm += gram(i, j) * x[i] * x[j];
      if (!best || norm < *best) best = norm;
    }
    std::size_t i = 0;
    while (i < k && x[i] == bound) x[i++] = -bound;
    if (i == k) return best;
    ++x[i];
  }
}

/// Random divisor with coefficients in [lo, hi].
inline Vec random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  Vec v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace oracle
