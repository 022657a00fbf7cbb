#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// The unique base-reduced divisor in a linear equivalence class, plus the
/// script that produced it: input - divisor = Delta(script), min(script) = 0.
struct ReducedDivisor {
  Divisor divisor;
  VertexIndex base;
  FiringScript script;
};

/// Vertex count up to which is_reduced() checks (P2) over every subset.
inline constexpr std::size_t kExhaustiveReducedMaxVertices = 12;

/// (P1): D(v) >= 0 off the base. (P2): every non-empty A inside V - {base}
/// has a vertex v with D(v) < outdeg_A(v).
bool is_reduced(const Multigraph& g, const Divisor& d, VertexIndex base);
bool is_reduced_exhaustive(const Multigraph& g, const Divisor& d, VertexIndex base);
bool is_reduced_burning(const Multigraph& g, const Divisor& d, VertexIndex base);

ReducedDivisor reduce(const Multigraph& g, const Divisor& d, VertexIndex base);

struct EnumerationLimits {
  /// Cap on the number of candidate vectors scanned by enumerate_reduced().
  std::uint64_t max_candidates = 5'000'000;
};

/// Every base-reduced divisor of the given degree, in lexicographic order.
/// One per linear equivalence class of that degree.
std::vector<Divisor> enumerate_reduced(const Multigraph& g, VertexIndex base, const Integer& degree,
                                       const EnumerationLimits& limits = {});

}  // namespace chipfire
