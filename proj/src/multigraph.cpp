#include "chipfire/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "chipfire/errors.hpp"

namespace chipfire {

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)) {
  validate_and_index();
}

Multigraph::Multigraph(std::vector<std::string> vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  for (VertexIndex i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate vertex '" + names_[i] + "'");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) edges_.push_back({index_of(a), index_of(b)});
  index_.clear();
  validate_and_index();
}

void Multigraph::validate_and_index() {
  const std::size_t n = names_.size();
  if (n == 0) throw InvalidInput("graph has no vertices");
  index_.clear();
  for (VertexIndex i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate vertex '" + names_[i] + "'");
  }
  adjacency_.assign(n * n, 0);
  degrees_.assign(n, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) throw InvalidInput("edge endpoint out of range");
    if (e.u == e.v) throw InvalidInput("loop edge at vertex '" + names_[e.u] + "'");
    ++adjacency_[e.u * n + e.v];
    ++adjacency_[e.v * n + e.u];
    ++degrees_[e.u];
    ++degrees_[e.v];
  }
  neighbors_.assign(n, {});
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = 0; v < n; ++v)
      if (adjacency_[u * n + v] > 0) neighbors_[u].push_back({v, adjacency_[u * n + v]});

  std::vector<bool> seen(n, false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexIndex u = stack.back();
    stack.pop_back();
    for (const Neighbor& w : neighbors_[u]) {
      if (!seen[w.vertex]) {
        seen[w.vertex] = true;
        ++reached;
        stack.push_back(w.vertex);
      }
    }
  }
  if (reached != n) throw InvalidInput("graph is not connected");
}

std::optional<VertexIndex> Multigraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Multigraph::index_of(std::string_view name) const {
  auto found = find(name);
  if (!found) throw InvalidInput("unknown vertex '" + std::string(name) + "'");
  return *found;
}

IntegerMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntegerMatrix q(n, n);
  for (VertexIndex i = 0; i < n; ++i) {
    q(i, i) = g.degree(i);
    for (const Neighbor& w : g.neighbors(i)) q(i, w.vertex) = -w.multiplicity;
  }
  return q;
}

IntegerMatrix reduced_laplacian(const Multigraph& g, VertexIndex v0) {
  if (v0 >= g.vertex_count()) throw InvalidInput("base vertex out of range");
  return laplacian(g).minor_matrix(v0, v0);
}

std::int64_t genus(const Multigraph& g) {
  return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

Integer spanning_tree_count(const Multigraph& g) { return determinant(reduced_laplacian(g, 0)); }

std::int64_t edge_connectivity(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return kUnboundedConnectivity;
  if (n > kMaxConnectivityVertices)
    throw GuardExceeded("edge_connectivity.vertices",
                        "exhaustive bipartition scan supports at most 20 vertices, got " + std::to_string(n));
  // Vertex n-1 is always on the "outside", so each bipartition is seen once.
  std::int64_t best = kUnboundedConnectivity;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::int64_t crossing = 0;
    for (const Edge& e : g.edges()) {
      bool a = e.u + 1 < n && (mask >> e.u & 1u);
      bool b = e.v + 1 < n && (mask >> e.v & 1u);
      crossing += a != b;
    }
    best = std::min(best, crossing);
  }
  return best;
}

std::vector<std::size_t> bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<VertexIndex, std::size_t>>> incident(n);
  for (std::size_t id = 0; id < g.edges().size(); ++id) {
    const Edge& e = g.edges()[id];
    incident[e.u].push_back({e.v, id});
    incident[e.v].push_back({e.u, id});
  }
  std::vector<std::int64_t> order(n, -1), low(n, 0);
  std::vector<std::size_t> result;
  std::int64_t timer = 0;
  const std::size_t no_edge = g.edges().size();
  std::function<void(VertexIndex, std::size_t)> visit = [&](VertexIndex u, std::size_t via) {
    order[u] = low[u] = timer++;
    for (auto [w, id] : incident[u]) {
      if (id == via) continue;
      if (order[w] >= 0) {
        low[u] = std::min(low[u], order[w]);
      } else {
        visit(w, id);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > order[u]) result.push_back(id);
      }
    }
  };
  visit(0, no_edge);
  std::sort(result.begin(), result.end());
  return result;
}

BridgeContraction contract_bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> bridge_ids = bridges(g);
  std::vector<bool> is_bridge(g.edge_count(), false);
  for (std::size_t id : bridge_ids) is_bridge[id] = true;

  std::vector<VertexIndex> parent(n);
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  std::function<VertexIndex(VertexIndex)> root = [&](VertexIndex v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (std::size_t id : bridge_ids) {
    VertexIndex a = root(g.edges()[id].u), b = root(g.edges()[id].v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexIndex> image(n);
  std::vector<VertexIndex> representative_slot(n, n);
  std::vector<std::string> names;
  for (VertexIndex v = 0; v < n; ++v) {
    VertexIndex r = root(v);
    if (representative_slot[r] == n) {
      representative_slot[r] = names.size();
      names.push_back(g.name(r));
    }
    image[v] = representative_slot[r];
  }
  std::vector<Edge> edges;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    if (is_bridge[id]) continue;
    edges.push_back({image[g.edges()[id].u], image[g.edges()[id].v]});
  }
  return {Multigraph(std::move(names), std::move(edges)), std::move(image)};
}

std::vector<std::int64_t> bfs_distances(const Multigraph& g, VertexIndex source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::deque<VertexIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexIndex u = queue.front();
    queue.pop_front();
    for (const Neighbor& w : g.neighbors(u)) {
      if (dist[w.vertex] < 0) {
        dist[w.vertex] = dist[u] + 1;
        queue.push_back(w.vertex);
      }
    }
  }
  return dist;
}

std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>> bfs_tree(const Multigraph& g, VertexIndex source) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexIndex> order{source};
  std::vector<VertexIndex> parent(n, n);
  parent[source] = source;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexIndex u = order[head];
    for (const Neighbor& w : g.neighbors(u)) {
      if (parent[w.vertex] == n) {
        parent[w.vertex] = u;
        order.push_back(w.vertex);
      }
    }
  }
  return {std::move(order), std::move(parent)};
}

std::int64_t diameter(const Multigraph& g) {
  std::int64_t best = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<std::int64_t> girth(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexIndex u = 0; u < n; ++u)
    for (const Neighbor& w : g.neighbors(u))
      if (w.multiplicity > 1) return 2;
  std::optional<std::int64_t> best;
  for (VertexIndex s = 0; s < n; ++s) {
    std::vector<std::int64_t> dist(n, -1);
    std::vector<VertexIndex> parent(n, n);
    std::deque<VertexIndex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      VertexIndex u = queue.front();
      queue.pop_front();
      for (const Neighbor& w : g.neighbors(u)) {
        if (dist[w.vertex] < 0) {
          dist[w.vertex] = dist[u] + 1;
          parent[w.vertex] = u;
          queue.push_back(w.vertex);
        } else if (parent[u] != w.vertex) {
          std::int64_t length = dist[u] + dist[w.vertex] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

bool is_bipartite(const Multigraph& g) {
  auto dist = bfs_distances(g, 0);
  for (const Edge& e : g.edges())
    if ((dist[e.u] - dist[e.v]) % 2 == 0) return false;
  return true;
}

bool is_eulerian(const Multigraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

}  // namespace chipfire
