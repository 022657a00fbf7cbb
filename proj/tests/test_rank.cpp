#include <doctest.h>

#include <random>

#include "chipfire/catalog.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

std::vector<std::vector<VertexIndex>> all_orders(std::size_t n) {
  std::vector<VertexIndex> seq(n);
  std::iota(seq.begin(), seq.end(), VertexIndex{0});
  std::vector<std::vector<VertexIndex>> out;
  do out.push_back(seq);
  while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

}  // namespace

TEST_CASE("has_effective_representative examples") {
  Multigraph b2 = banana_graph(2);
  CHECK_FALSE(has_effective_representative(b2, Divisor{-1, 0}));
  CHECK_FALSE(has_effective_representative(b2, Divisor{-1, 1}));
  CHECK_FALSE(oracle::winnable_by_borrowing(b2, {-1, 1}));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    Divisor d = gen::divisor(rng, g.vertex_count(), -5, 5);
    d[0] += genus(g) - degree(d);
    CHECK(has_effective_representative(g, d));
  }
}

TEST_CASE("rank examples") {
  for (std::size_t m = 2; m <= 6; ++m) {
    Multigraph b = banana_graph(m);
    CHECK(rank(b, canonical_divisor(b)).value == static_cast<std::int64_t>(m) - 2);
  }
  Multigraph g = five_vertex_chord_graph();
  CHECK(rank(g, Divisor{0, 0, 0, 2, 0}).value == 0);
  CHECK(rank(g, Divisor{5, -6, 0, 0, 0}).value == -1);
}

TEST_CASE("linear system examples") {
  for (std::size_t m = 2; m <= 6; ++m) {
    Multigraph b = banana_graph(m);
    Divisor k = canonical_divisor(b);
    CHECK(linear_system(b, k).members == std::vector<Divisor>{k});
  }
  Multigraph g = five_vertex_chord_graph();
  auto members = linear_system(g, Divisor{0, 0, 0, 2, 0}).members;
  CHECK(std::find(members.begin(), members.end(), Divisor{0, 0, 1, 0, 1}) != members.end());
  CHECK(linear_system(g, Divisor{-1, 0, 0, 2, 0}).members.empty());
  CHECK(linear_system(g, Divisor{-3, 0, 0, 2, 0}).members.empty());
}

TEST_CASE("riemann-roch examples") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    CHECK(rank(g, Divisor(g.vertex_count())).value == 0);
    CHECK(rank(g, canonical_divisor(g)).value == genus(g) - 1);
  }
  Multigraph b3 = banana_graph(3);
  CHECK(verify_riemann_roch(b3, canonical_divisor(b3)));
  for (int trial = 0; trial < 150; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    Divisor d = gen::divisor(rng, g.vertex_count(), -2, 3);
    CHECK(verify_riemann_roch(g, d));
  }
}

TEST_CASE("dichotomy examples") {
  Multigraph c4 = cycle_graph(4);
  Dichotomy eff = dichotomy(c4, Divisor{1, 0, 2, 0}, 0);
  CHECK(eff.branch == Dichotomy::Branch::Effective);
  CHECK(is_effective(eff.witness));
  CHECK(linearly_equivalent(c4, eff.witness, Divisor{1, 0, 2, 0}));

  Multigraph g = five_vertex_chord_graph();
  VertexOrder order({0, 1, 2, 3, 4});
  Dichotomy nu = dichotomy(g, nu_divisor(g, order), 0);
  CHECK(nu.branch == Dichotomy::Branch::NonSpecialOrder);
  REQUIRE(nu.order);
  CHECK(is_effective(nu.witness));
  CHECK(linearly_equivalent(g, nu.witness, Divisor(5)));

  Multigraph b2 = banana_graph(2);
  Dichotomy d = dichotomy(b2, Divisor{1, -1}, 0);
  bool n1 = oracle::winnable_by_borrowing(b2, {1, -1});
  bool n2 = false;
  for (auto seq : all_orders(2)) {
    oracle::Vec x = oracle::nu(b2, seq);
    x[0] -= 1;
    x[1] += 1;
    n2 = n2 || oracle::winnable_by_borrowing(b2, x);
  }
  CHECK(n1 != n2);
  CHECK((d.branch == Dichotomy::Branch::Effective) == n1);
}

TEST_CASE("clifford examples and preconditions") {
  Multigraph b4 = banana_graph(4);
  CHECK(clifford_check(b4, canonical_divisor(b4)));
  CHECK(clifford_check(cycle_graph(4), Divisor(4)));
  CHECK_THROWS_AS(clifford_check(b4, Divisor{-1, 3}), PreconditionViolation);
  CHECK_THROWS_AS(clifford_check(b4, Divisor{5, 0}), PreconditionViolation);
}

TEST_CASE("rank guards") {
  RankLimits tight{50, 8};
  Multigraph k5 = complete_graph(5);
  CHECK_THROWS_AS(rank_definitional(k5, Divisor{10, 0, 0, 0, 0}, tight), GuardExceeded);
  CHECK_THROWS_AS(nonspecial_order_classes(complete_graph(5), RankLimits{500000, 4}), GuardExceeded);
}

TEST_CASE("property: rank agrees with the borrowing-based definitional oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    Multigraph g = gen::graph(rng, 5, 3);
    Divisor d = gen::divisor(rng, g.vertex_count(), -2, 3);
    Rank r = rank(g, d);
    CHECK(r.value == oracle::rank_by_definition(g, oracle::to_vec(d)));
    CHECK(r.value >= -1);
    if (degree(d) >= 0) CHECK(Integer(r.value) <= degree(d));
    if (r.certificate) {
      CHECK(is_effective(*r.certificate));
      CHECK(degree(*r.certificate) == r.value + 1);
      CHECK_FALSE(has_effective_representative(g, d - *r.certificate));
    }
  }
}

TEST_CASE("property: shortcut above 2g - 2 equals the definitional rank") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 120; ++trial) {
    Multigraph g = gen::graph(rng, 5, 3);
    Divisor d = gen::divisor(rng, g.vertex_count(), -2, 3);
    d[0] += 2 * genus(g) - 1 - degree(d) + trial % 3;
    Rank fast = rank(g, d);
    CHECK(fast.value == rank_definitional(g, d).value);
    REQUIRE(fast.certificate);
    CHECK_FALSE(has_effective_representative(g, d - *fast.certificate));
  }
}

TEST_CASE("property: rank is a class function and moves by at most one per chip") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 120; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    const std::size_t n = g.vertex_count();
    Divisor d = gen::divisor(rng, n, -2, 3);
    std::int64_t r = rank(g, d).value;
    CHECK(rank(g, d + apply_laplacian(g, gen::script(rng, n, -3, 3))).value == r);
    for (VertexIndex v = 0; v < n; ++v) {
      std::int64_t up = rank(g, d + point_divisor(n, v)).value;
      CHECK(r <= up);
      CHECK(up <= r + 1);
    }
  }
}

TEST_CASE("property: nu_P has rank -1 for every order (n <= 6)") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = gen::graph(rng, 6, 4);
    for (const auto& seq : all_orders(g.vertex_count())) {
      Divisor nu = nu_divisor(g, VertexOrder(seq));
      CHECK(rank(g, nu).value == -1);
    }
  }
}

TEST_CASE("property: dichotomy returns exactly one valid branch") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph g = gen::graph(rng, 5, 4);
    const std::size_t n = g.vertex_count();
    Divisor d = gen::divisor(rng, n, -3, 3);
    std::uniform_int_distribution<VertexIndex> pick(0, n - 1);
    Dichotomy result = dichotomy(g, d, pick(rng));
    CHECK(is_effective(result.witness));
    bool n1 = has_effective_representative(g, d);
    CHECK((result.branch == Dichotomy::Branch::Effective) == n1);
    if (result.branch == Dichotomy::Branch::Effective) {
      CHECK(linearly_equivalent(g, result.witness, d));
    } else {
      REQUIRE(result.order);
      CHECK(linearly_equivalent(g, result.witness, nu_divisor(g, *result.order) - d));
    }
  }
}

TEST_CASE("property: criterion report, rank formula and subadditivity on small graphs") {
  Multigraph b3 = banana_graph(3);
  RrCriterionReport report = verify_rr_criterion(b3, -1, 3);
  CHECK(report.ok());
  Multigraph c3 = cycle_graph(3);
  RrCriterionReport c3_report = verify_rr_criterion(c3, 0, 0);
  CHECK(c3_report.rr2);
  CHECK(c3_report.ok());
  Multigraph g = five_vertex_chord_graph();
  RrCriterionReport five = verify_rr_criterion(g, 0, 2);
  CHECK(five.rank_formula);
  CHECK(five.ok());
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 25; ++trial) {
    Multigraph h = gen::graph(rng, 5, 3);
    RrCriterionReport r = verify_rr_criterion(h, -1, 2 * genus(h));
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? std::string() : r.failures.front()));
  }
}

TEST_CASE("property: effective_divisors enumerates multisets in lexicographic order") {
  auto list = effective_divisors(3, 2, 100);
  CHECK(list.size() == 6);
  CHECK(list.front() == Divisor{2, 0, 0});
  CHECK(list.back() == Divisor{0, 0, 2});
  CHECK(multiset_count(5, 3) == 35);
  CHECK(effective_divisors(3, -1, 10).empty());
}
