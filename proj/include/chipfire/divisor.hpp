#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "chipfire/integer.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// An integer per vertex, indexed by the stable vertex order. The tag keeps
/// divisors and firing scripts from being mixed up.
template <typename Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::size_t n) : values_(n) {}
  explicit VertexVector(std::vector<Integer> values) : values_(std::move(values)) {}
  VertexVector(std::initializer_list<long long> values) {
    values_.reserve(values.size());
    for (long long v : values) values_.emplace_back(v);
  }

  std::size_t size() const noexcept { return values_.size(); }
  Integer& operator[](VertexIndex v) { return values_[v]; }
  const Integer& operator[](VertexIndex v) const { return values_[v]; }
  const std::vector<Integer>& values() const noexcept { return values_; }

  VertexVector& operator+=(const VertexVector& other) {
    check_size(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  VertexVector& operator-=(const VertexVector& other) {
    check_size(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
  }
  friend VertexVector operator+(VertexVector a, const VertexVector& b) { return a += b; }
  friend VertexVector operator-(VertexVector a, const VertexVector& b) { return a -= b; }
  friend VertexVector operator-(VertexVector a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }
  friend VertexVector operator*(const Integer& k, VertexVector a) {
    for (auto& v : a.values_) v *= k;
    return a;
  }

  friend bool operator==(const VertexVector&, const VertexVector&) = default;
  /// Lexicographic in the stable vertex order (for use as a map key).
  friend bool operator<(const VertexVector& a, const VertexVector& b) { return a.values_ < b.values_; }

 private:
  void check_size(const VertexVector& other) const;
  std::vector<Integer> values_;
};

struct DivisorTag {};
struct ScriptTag {};

/// Element of Div(G): dollars (or chips) per vertex.
using Divisor = VertexVector<DivisorTag>;
/// Element of M(G): for game moves, borrows minus lends per vertex.
using FiringScript = VertexVector<ScriptTag>;

Integer degree(const Divisor& d);
bool is_effective(const Divisor& d);
/// Sum of the non-negative coefficients.
Integer deg_plus(const Divisor& d);
/// Coefficientwise D1 <= D2.
bool dominated_by(const Divisor& lower, const Divisor& upper);

/// The divisor (v) on an n-vertex graph.
Divisor point_divisor(std::size_t n, VertexIndex v);
/// The indicator function of a vertex set.
FiringScript indicator(std::size_t n, const std::vector<VertexIndex>& vertices);

/// Shifts a script so that its minimum value is zero.
FiringScript normalize_script(FiringScript f);

/// A linear order on the vertices, given as the sequence from smallest to largest.
class VertexOrder {
 public:
  /// Throws InvalidInput unless `sequence` is a permutation of 0..n-1.
  explicit VertexOrder(std::vector<VertexIndex> sequence);
  static VertexOrder identity(std::size_t n);

  std::size_t size() const noexcept { return sequence_.size(); }
  const std::vector<VertexIndex>& sequence() const noexcept { return sequence_; }
  std::size_t position(VertexIndex v) const { return position_.at(v); }
  VertexOrder reversed() const;

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<VertexIndex> sequence_;
  std::vector<std::size_t> position_;
};

/// Delta(f)(v) = sum over edges vw of (f(v) - f(w)), i.e. Q f.
Divisor apply_laplacian(const Multigraph& g, const FiringScript& f);

/// K = sum (deg(v) - 2)(v).
Divisor canonical_divisor(const Multigraph& g);

/// nu_P(v) = #{edges vw with w before v in the order} - 1.
Divisor nu_divisor(const Multigraph& g, const VertexOrder& order);

/// Returns f with d1 - d2 = Delta(f), normalized so min f = 0, or nullopt
/// when the divisors are not linearly equivalent.
std::optional<FiringScript> linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2);

/// <f, D> = sum f(v) D(v).
Integer pairing(const FiringScript& f, const Divisor& d);

}  // namespace chipfire
