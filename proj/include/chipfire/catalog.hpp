#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

/// All connected loopless multigraphs with 1..max_vertices vertices and at
/// most max_edges edges, one per isomorphism class. Vertices are v1..vn.
std::vector<Multigraph> connected_multigraphs(std::size_t max_vertices, std::size_t max_edges);

/// Two vertices q, p joined by m parallel edges.
Multigraph banana_graph(std::size_t m);
/// Cycle on a, b, c, ... (n >= 2; n == 2 is the banana graph on two edges).
Multigraph cycle_graph(std::size_t n);
/// Complete graph on v1..vn.
Multigraph complete_graph(std::size_t n);
/// Path v1 - v2 - ... - vn.
Multigraph path_graph(std::size_t n);
/// Five-cycle v1..v5 with the chord v3 v1; genus 2.
Multigraph five_vertex_chord_graph();
/// Triangles a1 a2 a3 and b1 b2 b3 joined by the bridge a3 b1.
Multigraph two_triangles_with_bridge();

/// Random spanning tree on v1..vn plus extra uniformly random edges, m >= n - 1.
Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Several random connected blocks joined in a tree pattern by single edges,
/// so the graph has at least one bridge.
Multigraph random_bridged_multigraph(std::mt19937_64& rng, std::size_t blocks, std::size_t max_block_vertices,
                                     std::size_t max_block_extra_edges);

}  // namespace chipfire
