#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/matrix.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries non-negative, each dividing the next.
struct SmithForm {
  IntegerMatrix left;
  IntegerMatrix diagonal;
  IntegerMatrix right;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// A class in Jac(G), in the canonical coordinates of a JacobianStructure:
/// coordinate i lies in [0, d_i).
struct JacElement {
  std::vector<Integer> coordinates;
  friend bool operator==(const JacElement&, const JacElement&) = default;
  friend bool operator<(const JacElement& a, const JacElement& b) { return a.coordinates < b.coordinates; }
};

/// Jac(G) = Div0(G) / Prin(G), presented as Z^(n-1) modulo the reduced
/// Laplacian at `base` and diagonalized by its Smith form.
class JacobianStructure {
 public:
  JacobianStructure(const Multigraph& g, VertexIndex base);

  VertexIndex base() const noexcept { return base_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  /// All n - 1 factors, trivial ones included.
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  /// Factors greater than one; empty for the trivial group.
  std::vector<Integer> nontrivial_factors() const;
  /// Product of the factors, i.e. the number of spanning trees.
  const Integer& order() const noexcept { return order_; }
  /// Maps off-base coefficients of a degree-0 divisor to raw coordinates.
  const IntegerMatrix& to_canonical() const noexcept { return to_canonical_; }

  JacElement zero() const;
  JacElement add(const JacElement& a, const JacElement& b) const;
  JacElement negate(const JacElement& a) const;
  JacElement scale(const Integer& k, const JacElement& a) const;
  JacElement normalize(std::vector<Integer> raw) const;

 private:
  VertexIndex base_;
  std::size_t vertex_count_;
  std::vector<Integer> factors_;
  Integer order_;
  IntegerMatrix to_canonical_;
};

JacobianStructure jacobian_structure(const Multigraph& g, VertexIndex base);

/// [D] for deg(D) = 0; throws PreconditionViolation otherwise.
JacElement divisor_class(const JacobianStructure& js, const Divisor& d);

/// S(v) = [(v) - (base)].
JacElement abel_jacobi(const JacobianStructure& js, VertexIndex v);

struct PowerMapReport {
  std::int64_t k = 0;
  Integer domain_size;                ///< C(n + k - 1, k)
  std::optional<Integer> image_size;  ///< present when decided by enumeration
  bool injective = false;
  bool surjective = false;
  bool by_enumeration = false;
};

/// Cap on |Div+^k| for which symmetric_power_map() enumerates.
inline constexpr std::uint64_t kDefaultPowerMapCap = 200'000;

/// Image of S^(k) on all effective degree-k divisors. Within the cap the
/// answer comes from enumeration and is checked against the genus and
/// edge-connectivity criteria (std::logic_error on mismatch); beyond it the
/// criteria alone are reported.
PowerMapReport symmetric_power_map(const Multigraph& g, const JacobianStructure& js, std::int64_t k,
                                   std::uint64_t cap = kDefaultPowerMapCap);

/// rho_*(sum a_v (v)) = sum a_v (rho(v)).
Divisor pushforward(const Multigraph& g, const BridgeContraction& contraction, const Divisor& d);

/// Pushforward sends distinct degree-0 classes of G to distinct classes of
/// the contracted graph and hits all of them.
bool pushforward_is_class_bijection(const Multigraph& g, const BridgeContraction& contraction);

}  // namespace chipfire
