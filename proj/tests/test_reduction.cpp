#include <doctest.h>

#include <random>
#include <set>

#include "chipfire/catalog.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/reduction.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chipfire;

TEST_CASE("is_reduced examples") {
  Multigraph c3 = cycle_graph(3);
  CHECK_FALSE(is_reduced(c3, Divisor{0, 2, 0}, 0));
  CHECK(is_reduced(c3, Divisor{1, 0, 1}, 0));
  CHECK(oracle::is_reduced_by_subsets(c3, {1, 0, 1}, 0));
  CHECK_FALSE(is_reduced(c3, Divisor{5, -1, 0}, 0));
}

TEST_CASE("reduce examples") {
  Multigraph c3 = cycle_graph(3);
  ReducedDivisor r = reduce(c3, Divisor{0, 2, 0}, 0);
  CHECK(r.divisor == Divisor{1, 0, 1});
  CHECK(r.script == FiringScript{0, 1, 0});
  CHECK(Divisor{0, 2, 0} - r.divisor == apply_laplacian(c3, r.script));
  CHECK(oracle::is_reduced_by_subsets(c3, oracle::to_vec(r.divisor), 0));

  Multigraph b3 = banana_graph(3);
  ReducedDivisor rb = reduce(b3, Divisor{0, 3}, 0);
  CHECK(rb.divisor == Divisor{3, 0});
  CHECK(oracle::equivalent_by_search(b3, {0, 3}, {3, 0}, 2));

  ReducedDivisor fixed = reduce(c3, Divisor{1, 0, 1}, 0);
  CHECK(fixed.divisor == Divisor{1, 0, 1});
  CHECK(fixed.script == FiringScript{0, 0, 0});
}

TEST_CASE("enumerate_reduced examples") {
  auto b2 = enumerate_reduced(banana_graph(2), 0, 0);
  CHECK(b2 == std::vector<Divisor>{Divisor{-1, 1}, Divisor{0, 0}});
  CHECK(enumerate_reduced(cycle_graph(3), 0, 0).size() == 3);
  CHECK(enumerate_reduced(path_graph(5), 0, 0) == std::vector<Divisor>{Divisor(5)});
}

TEST_CASE("enumerate_reduced guard") {
  EnumerationLimits tight{10};
  CHECK_THROWS_AS(enumerate_reduced(complete_graph(5), 0, 0, tight), GuardExceeded);
}

TEST_CASE("reduce handles coefficients beyond 64 bits") {
  Multigraph c4 = cycle_graph(4);
  Divisor huge{0, 0, 0, 0};
  huge[1] = Integer(1) << 80;
  huge[2] = -(Integer(1) << 80);
  ReducedDivisor r = reduce(c4, huge, 0);
  CHECK(is_reduced(c4, r.divisor, 0));
  CHECK(huge - r.divisor == apply_laplacian(c4, r.script));
}

TEST_CASE("property: uniqueness, idempotence and exact witnesses") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    Multigraph g = gen::graph(rng, 7, 5);
    const std::size_t n = g.vertex_count();
    std::uniform_int_distribution<VertexIndex> pick(0, n - 1);
    VertexIndex base = pick(rng);
    Divisor d = gen::divisor(rng, n, -6, 6);
    Divisor moved = d + apply_laplacian(g, gen::script(rng, n, -4, 4));
    ReducedDivisor r = reduce(g, d, base);
    CHECK(r.divisor == reduce(g, moved, base).divisor);
    CHECK(reduce(g, r.divisor, base).divisor == r.divisor);
    CHECK(d - r.divisor == apply_laplacian(g, r.script));
    CHECK(oracle::is_reduced_by_subsets(g, oracle::to_vec(r.divisor), base));
  }
}

TEST_CASE("property: burning and exhaustive parking checks agree (n <= 7)") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1500; ++trial) {
    Multigraph g = gen::graph(rng, 7, 5);
    const std::size_t n = g.vertex_count();
    Divisor d(n);
    for (VertexIndex v = 0; v < n; ++v) {
      std::uniform_int_distribution<long long> c(-1, g.degree(v));
      d[v] = c(rng);
    }
    bool burning = is_reduced_burning(g, d, 0);
    CHECK(burning == is_reduced_exhaustive(g, d, 0));
    CHECK(burning == oracle::is_reduced_by_subsets(g, oracle::to_vec(d), 0));
  }
}

TEST_CASE("property: one reduced divisor per class, kappa of them in degree 0 (catalog <= 8 edges)") {
  for (const Multigraph& g : connected_multigraphs(5, 8)) {
    auto reps = enumerate_reduced(g, 0, 0);
    CHECK(reps.size() == oracle::spanning_trees(g));
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    std::set<Divisor> distinct(reps.begin(), reps.end());
    CHECK(distinct.size() == reps.size());
    for (const Divisor& d : reps) CHECK(degree(d) == 0);
  }
}

TEST_CASE("property: enumerate_reduced at other bases and degrees") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = gen::graph(rng, 5, 4);
    std::uniform_int_distribution<VertexIndex> pick(0, g.vertex_count() - 1);
    std::uniform_int_distribution<long long> deg(-3, 5);
    VertexIndex base = pick(rng);
    long long k = deg(rng);
    auto reps = enumerate_reduced(g, base, k);
    CHECK(reps.size() == oracle::spanning_trees(g));
    for (const Divisor& d : reps) {
      CHECK(degree(d) == k);
      CHECK(oracle::is_reduced_by_subsets(g, oracle::to_vec(d), base));
    }
  }
}
