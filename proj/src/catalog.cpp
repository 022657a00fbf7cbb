#include "chipfire/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  return components == 1;
}

// Lexicographically smallest upper-triangle multiplicity vector over all
// relabelings.
std::vector<int> canonical_form(std::size_t n, const std::vector<int>& mult) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, current;
  do {
    current.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) current.push_back(mult[perm[i] * n + perm[j]]);
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Multigraph> connected_multigraphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (VertexIndex i = 0; i < n; ++i)
      for (VertexIndex j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::set<std::vector<int>> seen;
    for (std::size_t m = n - 1; m <= max_edges; ++m) {
      if (n == 1 && m > 0) break;
      // Multisets of m pairs as non-decreasing index sequences.
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<Edge> edges;
        for (std::size_t p : pick) edges.push_back(pairs[p]);
        if (connected(n, edges)) {
          std::vector<int> mult(n * n, 0);
          for (const Edge& e : edges) {
            ++mult[e.u * n + e.v];
            ++mult[e.v * n + e.u];
          }
          if (seen.insert(canonical_form(n, mult)).second) out.emplace_back(numbered(n), edges);
        }
        std::size_t i = m;
        while (i > 0 && pick[i - 1] + 1 == pairs.size()) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < m; ++k) pick[k] = pick[i - 1];
      }
    }
  }
  return out;
}

Multigraph banana_graph(std::size_t m) {
  if (m < 1) throw InvalidInput("banana graph needs at least one edge");
  return Multigraph({"q", "p"}, std::vector<Edge>(m, Edge{0, 1}));
}

Multigraph cycle_graph(std::size_t n) {
  if (n < 2 || n > 26) throw InvalidInput("cycle length must be between 2 and 26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, char('a' + i));
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(names, edges);
}

Multigraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < n; ++i)
    for (VertexIndex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Multigraph(numbered(n), edges);
}

Multigraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(numbered(n), edges);
}

Multigraph five_vertex_chord_graph() {
  return Multigraph(numbered(5), std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 0}});
}

Multigraph two_triangles_with_bridge() {
  return Multigraph({"a1", "a2", "a3", "b1", "b2", "b3"},
                    std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  if (n == 0 || m + 1 < n) throw InvalidInput("random graph needs n >= 1 and m >= n - 1");
  if (n == 1 && m > 0) throw InvalidInput("a single vertex admits no loopless edges");
  std::vector<Edge> edges;
  for (VertexIndex v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexIndex> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::uniform_int_distribution<VertexIndex> any(0, n - 1);
  while (edges.size() < m) {
    VertexIndex a = any(rng), b = any(rng);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Multigraph(numbered(n), edges);
}

Multigraph random_bridged_multigraph(std::mt19937_64& rng, std::size_t blocks, std::size_t max_block_vertices,
                                     std::size_t max_block_extra_edges) {
  if (blocks < 2 || max_block_vertices < 1) throw InvalidInput("need at least two blocks");
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [first, first + size)
  std::size_t total = 0;
  std::uniform_int_distribution<std::size_t> size_dist(1, max_block_vertices);
  std::uniform_int_distribution<std::size_t> extra_dist(0, max_block_extra_edges);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t size = size_dist(rng);
    std::size_t extra = size == 1 ? 0 : extra_dist(rng);
    Multigraph block = random_connected_multigraph(rng, size, size - 1 + extra);
    for (const Edge& e : block.edges()) edges.push_back({e.u + total, e.v + total});
    ranges.emplace_back(total, size);
    total += size;
  }
  for (std::size_t b = 1; b < blocks; ++b) {
    std::uniform_int_distribution<std::size_t> earlier(0, b - 1);
    auto [first_a, size_a] = ranges[earlier(rng)];
    auto [first_b, size_b] = ranges[b];
    std::uniform_int_distribution<std::size_t> pick_a(0, size_a - 1), pick_b(0, size_b - 1);
    edges.push_back({first_a + pick_a(rng), first_b + pick_b(rng)});
  }
  return Multigraph(numbered(total), edges);
}

}  // namespace chipfire
