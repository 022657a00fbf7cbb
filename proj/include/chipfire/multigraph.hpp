#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/integer.hpp"
#include "chipfire/matrix.hpp"

namespace chipfire {

/// Position of a vertex in a graph's stable vertex order.
using VertexIndex = std::size_t;

struct Edge {
  VertexIndex u;
  VertexIndex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexIndex vertex;
  std::int64_t multiplicity;
};

/// A finite, connected, loopless multigraph with a stable vertex order.
///
/// The edge multiset and the adjacency-multiplicity matrix are both kept;
/// they are built together at construction and never mutated afterwards.
/// Construction rejects loops, disconnected input, duplicate vertex names and
/// edges that mention unknown vertices (InvalidInput).
class Multigraph {
 public:
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);
  Multigraph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& name(VertexIndex v) const { return names_.at(v); }
  std::optional<VertexIndex> find(std::string_view name) const;
  /// Like find(), but throws InvalidInput for an unknown name.
  VertexIndex index_of(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::int64_t multiplicity(VertexIndex u, VertexIndex v) const { return adjacency_[u * vertex_count() + v]; }
  std::int64_t degree(VertexIndex v) const { return degrees_.at(v); }
  const std::vector<Neighbor>& neighbors(VertexIndex v) const { return neighbors_.at(v); }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void validate_and_index();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<std::int64_t> adjacency_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::vector<Neighbor>> neighbors_;
};

/// Q = D - A.
IntegerMatrix laplacian(const Multigraph& g);
/// Laplacian with the row and column of `v0` deleted.
IntegerMatrix reduced_laplacian(const Multigraph& g, VertexIndex v0);

/// |E| - |V| + 1.
std::int64_t genus(const Multigraph& g);

/// Number of spanning trees: determinant of the reduced Laplacian.
Integer spanning_tree_count(const Multigraph& g);

/// Returned by edge_connectivity() for the one-vertex graph, which is
/// k-edge-connected for every k.
inline constexpr std::int64_t kUnboundedConnectivity = std::numeric_limits<std::int64_t>::max();

/// Largest vertex count accepted by edge_connectivity().
inline constexpr std::size_t kMaxConnectivityVertices = 20;

/// Minimum number of edges crossing a bipartition of V into two non-empty
/// parts, by exhaustive scan. Throws GuardExceeded above 20 vertices.
std::int64_t edge_connectivity(const Multigraph& g);

/// Indices (into g.edges()) of edges lying on no cycle.
std::vector<std::size_t> bridges(const Multigraph& g);

struct BridgeContraction {
  Multigraph graph;
  /// vertex_map[v] is the image of v in `graph`.
  std::vector<VertexIndex> vertex_map;
};

/// Contracts every bridge. Each image vertex is named after the
/// lowest-indexed vertex of its preimage, and images keep that relative order.
BridgeContraction contract_bridges(const Multigraph& g);

std::vector<std::int64_t> bfs_distances(const Multigraph& g, VertexIndex source);
/// BFS vertex order from `source`; parent[v] precedes v (parent[source] == source).
std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>> bfs_tree(const Multigraph& g, VertexIndex source);
std::int64_t diameter(const Multigraph& g);
/// Length of the shortest cycle (2 for a parallel pair); nullopt for forests.
std::optional<std::int64_t> girth(const Multigraph& g);
bool is_bipartite(const Multigraph& g);
/// Every vertex has even degree.
bool is_eulerian(const Multigraph& g);

}  // namespace chipfire
