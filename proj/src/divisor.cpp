#include "chipfire/divisor.hpp"

#include <algorithm>
#include <numeric>

#include "chipfire/errors.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

template <typename Tag>
void VertexVector<Tag>::check_size(const VertexVector& other) const {
  if (other.values_.size() != values_.size()) throw InvalidInput("vertex vector size mismatch");
}

template class VertexVector<DivisorTag>;
template class VertexVector<ScriptTag>;

Integer degree(const Divisor& d) {
  Integer total = 0;
  for (const auto& c : d.values()) total += c;
  return total;
}

bool is_effective(const Divisor& d) {
  return std::all_of(d.values().begin(), d.values().end(), [](const Integer& c) { return c >= 0; });
}

Integer deg_plus(const Divisor& d) {
  Integer total = 0;
  for (const auto& c : d.values())
    if (c > 0) total += c;
  return total;
}

bool dominated_by(const Divisor& lower, const Divisor& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return false;
  return true;
}

Divisor point_divisor(std::size_t n, VertexIndex v) {
  Divisor d(n);
  d[v] = 1;
  return d;
}

FiringScript indicator(std::size_t n, const std::vector<VertexIndex>& vertices) {
  FiringScript f(n);
  for (VertexIndex v : vertices) f[v] = 1;
  return f;
}

FiringScript normalize_script(FiringScript f) {
  if (f.size() == 0) return f;
  Integer low = *std::min_element(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= low;
  return f;
}

VertexOrder::VertexOrder(std::vector<VertexIndex> sequence) : sequence_(std::move(sequence)) {
  const std::size_t n = sequence_.size();
  position_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    VertexIndex v = sequence_[i];
    if (v >= n || position_[v] != n) throw InvalidInput("vertex order is not a permutation");
    position_[v] = i;
  }
}

VertexOrder VertexOrder::identity(std::size_t n) {
  std::vector<VertexIndex> seq(n);
  std::iota(seq.begin(), seq.end(), VertexIndex{0});
  return VertexOrder(std::move(seq));
}

VertexOrder VertexOrder::reversed() const {
  return VertexOrder(std::vector<VertexIndex>(sequence_.rbegin(), sequence_.rend()));
}

Divisor apply_laplacian(const Multigraph& g, const FiringScript& f) {
  if (f.size() != g.vertex_count()) throw InvalidInput("firing script size does not match graph");
  Divisor out(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    Integer acc = 0;
    for (const Neighbor& w : g.neighbors(v)) acc += w.multiplicity * (f[v] - f[w.vertex]);
    out[v] = std::move(acc);
  }
  return out;
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

Divisor nu_divisor(const Multigraph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw InvalidInput("vertex order size does not match graph");
  Divisor nu(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::int64_t earlier = 0;
    for (const Neighbor& w : g.neighbors(v))
      if (order.position(w.vertex) < order.position(v)) earlier += w.multiplicity;
    nu[v] = earlier - 1;
  }
  return nu;
}

std::optional<FiringScript> linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
  if (d1.size() != g.vertex_count() || d2.size() != g.vertex_count())
    throw InvalidInput("divisor size does not match graph");
  if (degree(d1) != degree(d2)) return std::nullopt;
  ReducedDivisor r1 = reduce(g, d1, 0);
  ReducedDivisor r2 = reduce(g, d2, 0);
  if (r1.divisor != r2.divisor) return std::nullopt;
  // d1 - r = Delta(s1), d2 - r = Delta(s2).
  return normalize_script(r1.script - r2.script);
}

Integer pairing(const FiringScript& f, const Divisor& d) {
  Integer total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total += f[i] * d[i];
  return total;
}

}  // namespace chipfire
