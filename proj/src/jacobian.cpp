#include "chipfire/jacobian.hpp"

#include <set>
#include <stdexcept>

#include "chipfire/errors.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

namespace {

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += k * m(source, c);
}

void add_col_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += k * m(r, source);
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix s = m;
  IntegerMatrix left = IntegerMatrix::identity(rows);
  IntegerMatrix right = IntegerMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi == rows || abs_value(s(i, j)) < abs_value(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pi);
      left.swap_rows(t, pi);
      s.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        add_row_multiple(s, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        add_col_multiple(s, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull an offending row into row t.
      std::size_t offending = rows;
      for (std::size_t i = t + 1; i < rows && offending == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending == rows) break;
      add_row_multiple(s, t, offending, 1);
      add_row_multiple(left, t, offending, 1);
    }
    if (exhausted) break;
    if (s(t, t) < 0) {
      add_row_multiple(s, t, t, -2);
      add_row_multiple(left, t, t, -2);
    }
  }
  return {std::move(left), std::move(s), std::move(right)};
}

JacobianStructure::JacobianStructure(const Multigraph& g, VertexIndex base)
    : base_(base), vertex_count_(g.vertex_count()) {
  if (base >= g.vertex_count()) throw InvalidInput("base vertex out of range");
  SmithForm snf = smith_normal_form(reduced_laplacian(g, base));
  order_ = 1;
  for (std::size_t i = 0; i + 1 < vertex_count_; ++i) {
    factors_.push_back(snf.diagonal(i, i));
    order_ *= snf.diagonal(i, i);
  }
  if (order_ == 0) throw std::logic_error("reduced Laplacian is singular");
  to_canonical_ = std::move(snf.left);
}

std::vector<Integer> JacobianStructure::nontrivial_factors() const {
  std::vector<Integer> out;
  for (const auto& f : factors_)
    if (f > 1) out.push_back(f);
  return out;
}

JacElement JacobianStructure::zero() const { return {std::vector<Integer>(factors_.size())}; }

JacElement JacobianStructure::normalize(std::vector<Integer> raw) const {
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = floor_mod(raw[i], factors_[i]);
  return {std::move(raw)};
}

JacElement JacobianStructure::add(const JacElement& a, const JacElement& b) const {
  std::vector<Integer> raw(factors_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.coordinates[i] + b.coordinates[i];
  return normalize(std::move(raw));
}

JacElement JacobianStructure::negate(const JacElement& a) const {
  std::vector<Integer> raw(factors_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = -a.coordinates[i];
  return normalize(std::move(raw));
}

JacElement JacobianStructure::scale(const Integer& k, const JacElement& a) const {
  std::vector<Integer> raw(factors_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = k * a.coordinates[i];
  return normalize(std::move(raw));
}

JacobianStructure jacobian_structure(const Multigraph& g, VertexIndex base) { return JacobianStructure(g, base); }

JacElement divisor_class(const JacobianStructure& js, const Divisor& d) {
  if (d.size() != js.vertex_count()) throw InvalidInput("divisor size does not match graph");
  if (degree(d) != 0) throw PreconditionViolation("divisor_class requires a degree-0 divisor");
  std::vector<Integer> off_base;
  for (VertexIndex v = 0; v < d.size(); ++v)
    if (v != js.base()) off_base.push_back(d[v]);
  return js.normalize(js.to_canonical() * off_base);
}

JacElement abel_jacobi(const JacobianStructure& js, VertexIndex v) {
  if (v >= js.vertex_count()) throw InvalidInput("vertex out of range");
  Divisor d(js.vertex_count());
  d[v] += 1;
  d[js.base()] -= 1;
  return divisor_class(js, d);
}

PowerMapReport symmetric_power_map(const Multigraph& g, const JacobianStructure& js, std::int64_t k,
                                   std::uint64_t cap) {
  if (k < 1) throw PreconditionViolation("symmetric_power_map requires k >= 1");
  const std::size_t n = g.vertex_count();
  PowerMapReport report;
  report.k = k;
  report.domain_size = multiset_count(n, k);
  const bool surjective_predicate = k >= genus(g);
  const std::int64_t connectivity = edge_connectivity(g);
  const bool injective_predicate = connectivity == kUnboundedConnectivity || connectivity >= k + 1;

  if (report.domain_size > cap) {
    report.injective = injective_predicate;
    report.surjective = surjective_predicate;
    return report;
  }
  std::set<JacElement> image;
  for (const Divisor& e : effective_divisors(n, k, cap)) {
    Divisor shifted = e;
    shifted[js.base()] -= k;
    image.insert(divisor_class(js, shifted));
  }
  report.by_enumeration = true;
  report.image_size = Integer(image.size());
  report.injective = *report.image_size == report.domain_size;
  report.surjective = *report.image_size == js.order();
  if (report.injective != injective_predicate || report.surjective != surjective_predicate)
    throw std::logic_error("Abel-Jacobi power map enumeration disagrees with the genus/connectivity criteria");
  return report;
}

Divisor pushforward(const Multigraph& g, const BridgeContraction& contraction, const Divisor& d) {
  if (d.size() != g.vertex_count() || contraction.vertex_map.size() != g.vertex_count())
    throw InvalidInput("pushforward: divisor or vertex map does not match the graph");
  Divisor out(contraction.graph.vertex_count());
  for (VertexIndex v = 0; v < d.size(); ++v) {
    VertexIndex image = contraction.vertex_map[v];
    if (image >= out.size()) throw InvalidInput("pushforward: vertex map points outside the contracted graph");
    out[image] += d[v];
  }
  return out;
}

bool pushforward_is_class_bijection(const Multigraph& g, const BridgeContraction& contraction) {
  JacobianStructure target = jacobian_structure(contraction.graph, 0);
  std::set<JacElement> image;
  std::size_t classes = 0;
  for (const Divisor& d : enumerate_reduced(g, 0, 0)) {
    ++classes;
    image.insert(divisor_class(target, pushforward(g, contraction, d)));
  }
  return image.size() == classes && Integer(classes) == target.order();
}

}  // namespace chipfire
