#include "chipfire/lattice.hpp"

#include <limits>

#include "chipfire/errors.hpp"
#include "chipfire/jacobian.hpp"

namespace chipfire {

namespace {

struct TreeChains {
  std::vector<VertexIndex> order;
  std::vector<VertexIndex> parent;
  std::vector<std::size_t> parent_edge;  ///< edge id joining v to its parent
  std::vector<bool> is_tree_edge;
  std::vector<std::vector<Integer>> gamma;  ///< chain of the tree path root -> v
};

TreeChains tree_chains(const Multigraph& g, const OrientedEdgeSpace& space, VertexIndex root) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  TreeChains t;
  std::tie(t.order, t.parent) = bfs_tree(g, root);
  t.parent_edge.assign(n, m);
  t.is_tree_edge.assign(m, false);
  for (VertexIndex v = 0; v < n; ++v) {
    if (v == root) continue;
    for (std::size_t e = 0; e < m; ++e) {
      const Edge& edge = space.oriented[e];
      if ((edge.u == v && edge.v == t.parent[v]) || (edge.v == v && edge.u == t.parent[v])) {
        t.parent_edge[v] = e;
        t.is_tree_edge[e] = true;
        break;
      }
    }
  }
  t.gamma.assign(n, std::vector<Integer>(m));
  for (VertexIndex v : t.order) {
    if (v == root) continue;
    std::size_t e = t.parent_edge[v];
    t.gamma[v] = t.gamma[t.parent[v]];
    t.gamma[v][e] += space.oriented[e].v == v ? 1 : -1;
  }
  return t;
}

IntegerMatrix gram_of(const std::vector<std::vector<Integer>>& vectors) {
  IntegerMatrix gram(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < vectors[i].size(); ++k) s += vectors[i][k] * vectors[j][k];
      gram(i, j) = s;
    }
  return gram;
}

// Solves m x = b over Q for nonsingular m.
std::vector<Rational> solve(const IntegerMatrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular Gram matrix");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

OrientedEdgeSpace boundary_operators(const Multigraph& g, const std::vector<bool>& flips) {
  const std::size_t m = g.edge_count();
  if (!flips.empty() && flips.size() != m) throw InvalidInput("orientation flips do not match the edge count");
  OrientedEdgeSpace space;
  space.d = IntegerMatrix(m, g.vertex_count());
  for (std::size_t e = 0; e < m; ++e) {
    VertexIndex tail = std::min(g.edges()[e].u, g.edges()[e].v);
    VertexIndex head = std::max(g.edges()[e].u, g.edges()[e].v);
    if (!flips.empty() && flips[e]) std::swap(tail, head);
    space.oriented.push_back({tail, head});
    space.d(e, head) = 1;
    space.d(e, tail) = -1;
  }
  return space;
}

LatticeBasis flow_lattice(const Multigraph& g, const OrientedEdgeSpace& space) {
  TreeChains t = tree_chains(g, space, 0);
  LatticeBasis basis;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (t.is_tree_edge[e]) continue;
    const Edge& edge = space.oriented[e];
    std::vector<Integer> cycle(g.edge_count());
    for (std::size_t k = 0; k < cycle.size(); ++k) cycle[k] = t.gamma[edge.u][k] - t.gamma[edge.v][k];
    cycle[e] += 1;
    basis.vectors.push_back(std::move(cycle));
  }
  basis.gram = gram_of(basis.vectors);
  return basis;
}

LatticeBasis cut_lattice(const Multigraph& g, const OrientedEdgeSpace& space) {
  TreeChains t = tree_chains(g, space, 0);
  const std::size_t n = g.vertex_count();
  // Subtree membership, filled leaves-first.
  std::vector<std::vector<bool>> subtree(n, std::vector<bool>(n, false));
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    subtree[*it][*it] = true;
    if (*it != 0)
      for (VertexIndex w = 0; w < n; ++w)
        if (subtree[*it][w]) subtree[t.parent[*it]][w] = true;
  }
  LatticeBasis basis;
  for (VertexIndex c : t.order) {
    if (c == 0) continue;
    std::vector<Integer> cut(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      cut[e] = Integer(int(subtree[c][space.oriented[e].v])) - Integer(int(subtree[c][space.oriented[e].u]));
    basis.vectors.push_back(std::move(cut));
  }
  basis.gram = gram_of(basis.vectors);
  return basis;
}

std::vector<Integer> quotient_group(const LatticeBasis& basis) {
  SmithForm snf = smith_normal_form(basis.gram);
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < basis.gram.rows(); ++i) factors.push_back(snf.diagonal(i, i));
  return factors;
}

std::vector<Rational> abel_map(const Multigraph& g, const OrientedEdgeSpace& space, const LatticeBasis& flows,
                               VertexIndex v0, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw InvalidInput("divisor size does not match graph");
  if (v0 >= g.vertex_count()) throw InvalidInput("base vertex out of range");
  if (degree(d) != 0) throw PreconditionViolation("abel_map requires a degree-0 divisor");
  if (flows.vectors.empty()) return {};
  TreeChains t = tree_chains(g, space, v0);
  std::vector<Integer> chain(g.edge_count());
  for (VertexIndex v = 0; v < d.size(); ++v)
    for (std::size_t e = 0; e < chain.size(); ++e) chain[e] += d[v] * t.gamma[v][e];
  std::vector<Rational> rhs;
  for (const auto& b : flows.vectors) {
    Integer s = 0;
    for (std::size_t e = 0; e < chain.size(); ++e) s += b[e] * chain[e];
    rhs.emplace_back(s);
  }
  std::vector<Rational> x = solve(flows.gram, rhs);
  for (auto& xi : x) xi = fractional_part(xi);
  return x;
}

std::optional<Integer> shortest_vector_norm(const LatticeBasis& basis, std::uint64_t max_box) {
  const std::size_t k = basis.vectors.size();
  if (k == 0) return std::nullopt;
  const IntegerMatrix& gram = basis.gram;
  Integer bound = gram(0, 0);
  for (std::size_t i = 1; i < k; ++i) bound = std::min(bound, gram(i, i));

  // Any x with x^T G x <= R has x_i^2 <= R (G^-1)_ii.
  std::vector<std::int64_t> radius(k);
  Integer box = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> unit(k, Rational(0));
    unit[i] = 1;
    Rational inv_ii = solve(gram, unit)[i];
    radius[i] = to_int64(isqrt_floor(inv_ii * Rational(bound)), "lattice.short_vector_box");
    box *= 2 * radius[i] + 1;
    if (box > max_box) throw GuardExceeded("lattice.short_vector_box", "coefficient box exceeds " + std::to_string(max_box));
  }

  std::vector<std::int64_t> g64(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g64[i * k + j] = to_int64(gram(i, j), "lattice.short_vector_box");

  std::vector<std::int64_t> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = -radius[i];
  Integer best = bound;
  while (true) {
    bool nonzero = false;
    for (auto xi : x) nonzero |= xi != 0;
    if (nonzero) {
      std::int64_t norm = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (x[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < k; ++j) row = checked_add(row, checked_mul(g64[i * k + j], x[j]));
        norm = checked_add(norm, checked_mul(x[i], row));
      }
      if (norm < best) best = norm;
    }
    std::size_t i = 0;
    while (i < k && x[i] == radius[i]) {
      x[i] = -radius[i];
      ++i;
    }
    if (i == k) break;
    ++x[i];
  }
  return best;
}

bool is_even(const LatticeBasis& basis) {
  for (std::size_t i = 0; i < basis.gram.rows(); ++i)
    if (basis.gram(i, i) % 2 != 0) return false;
  return true;
}

LatticeDiagnostics lattice_diagnostics(const Multigraph& g, std::uint64_t max_box) {
  OrientedEdgeSpace space = boundary_operators(g);
  LatticeBasis flows = flow_lattice(g, space);
  LatticeBasis cuts = cut_lattice(g, space);
  LatticeDiagnostics out;
  try {
    out.flow_min_norm = shortest_vector_norm(flows, max_box);
    out.cut_min_norm = shortest_vector_norm(cuts, max_box);
  } catch (const Overflow&) {
    throw GuardExceeded("lattice.short_vector_box", "Gram arithmetic overflow");
  }
  out.flow_even = is_even(flows);
  out.cut_even = is_even(cuts);
  return out;
}

}  // namespace chipfire
