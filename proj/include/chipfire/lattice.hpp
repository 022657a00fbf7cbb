#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/matrix.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// An orientation of every edge together with the incidence operator
/// d: C^0 -> C^1, (df)(e) = f(head) - f(tail), stored as an |E| x |V| matrix.
struct OrientedEdgeSpace {
  std::vector<Edge> oriented;  ///< u = tail, v = head
  IntegerMatrix d;

  IntegerMatrix d_star() const { return d.transpose(); }
};

/// Default orientation: lower index -> higher index. `flips[e]` reverses edge e.
OrientedEdgeSpace boundary_operators(const Multigraph& g, const std::vector<bool>& flips = {});

struct LatticeBasis {
  std::vector<std::vector<Integer>> vectors;  ///< in edge coordinates
  IntegerMatrix gram;
};

/// Fundamental cycles of the BFS tree from vertex 0 (g vectors).
LatticeBasis flow_lattice(const Multigraph& g, const OrientedEdgeSpace& space);
/// Fundamental cuts d(chi_S) of the same tree (n - 1 vectors).
LatticeBasis cut_lattice(const Multigraph& g, const OrientedEdgeSpace& space);

/// Smith invariants of the Gram matrix, i.e. the factors of L^# / L.
std::vector<Integer> quotient_group(const LatticeBasis& basis);

/// Coordinates in [0, 1) of the orthogonal projection of sum a_v gamma_v onto
/// the flow space, in the flow basis; gamma_v is the tree path from v0 to v.
std::vector<Rational> abel_map(const Multigraph& g, const OrientedEdgeSpace& space, const LatticeBasis& flows,
                               VertexIndex v0, const Divisor& d);

inline constexpr std::uint64_t kDefaultShortVectorBox = 5'000'000;

/// Minimum squared norm over nonzero lattice vectors; empty for rank 0.
std::optional<Integer> shortest_vector_norm(const LatticeBasis& basis, std::uint64_t max_box = kDefaultShortVectorBox);

/// True when every lattice vector has even squared norm.
bool is_even(const LatticeBasis& basis);

struct LatticeDiagnostics {
  std::optional<Integer> flow_min_norm;
  std::optional<Integer> cut_min_norm;
  bool flow_even = true;
  bool cut_even = true;
};

LatticeDiagnostics lattice_diagnostics(const Multigraph& g, std::uint64_t max_box = kDefaultShortVectorBox);

}  // namespace chipfire
