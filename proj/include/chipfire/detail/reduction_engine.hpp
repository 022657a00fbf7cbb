#pragma once

// Templated reduction kernel shared by the public reduction API (arbitrary
// precision) and the rank search (64-bit with overflow checks).

#include <cassert>
#include <cstdint>
#include <vector>

#include "chipfire/integer.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire::detail {

class ReductionEngine {
 public:
  ReductionEngine(const Multigraph& g, VertexIndex base) : g_(&g), base_(base) {
    auto [order, parent] = bfs_tree(g, base);
    bfs_order_ = std::move(order);
    parent_ = std::move(parent);
    layer_ = bfs_distances(g, base);
    burnt_.resize(g.vertex_count());
    burnt_edges_.resize(g.vertex_count());
  }

  const Multigraph& graph() const noexcept { return *g_; }
  VertexIndex base() const noexcept { return base_; }

  /// Replaces `d` by its base-reduced representative. When `lends` is given,
  /// the number of lending moves made by each vertex is added to it, so that
  /// input - output = Delta(lends).
  template <typename Int>
  void reduce(std::vector<Int>& d, std::vector<Int>* lends = nullptr) {
    take_out_of_debt(d, lends);
    while (!burn(d)) fire_unburnt(d, lends);
  }

  /// Reducedness via the burning procedure.
  template <typename Int>
  bool is_reduced(const std::vector<Int>& d) {
    for (VertexIndex v = 0; v < d.size(); ++v)
      if (v != base_ && d[v] < 0) return false;
    return burn(d);
  }

 private:
  // Layers farthest from the base are cleared first; each in-debt vertex is
  // rescued by its BFS parent lending, which only ever adds to later vertices.
  template <typename Int>
  void take_out_of_debt(std::vector<Int>& d, std::vector<Int>* lends) {
    for (std::size_t i = bfs_order_.size(); i-- > 1;) {
      VertexIndex u = bfs_order_[i];
      if (d[u] >= 0) continue;
#ifndef NDEBUG
      auto before = debt_profile(d);
#endif
      VertexIndex p = parent_[u];
      Int m = Int(g_->multiplicity(p, u));
      Int times = (-d[u] + m - 1) / m;
      lend(d, lends, p, times);
#ifndef NDEBUG
      assert(debt_profile(d) > before);
#endif
    }
  }

  template <typename Int>
  void lend(std::vector<Int>& d, std::vector<Int>* lends, VertexIndex p, const Int& times) {
    d[p] = checked_sub(d[p], checked_mul(times, Int(g_->degree(p))));
    for (const Neighbor& w : g_->neighbors(p)) d[w.vertex] = checked_add(d[w.vertex], checked_mul(times, Int(w.multiplicity)));
    if (lends) (*lends)[p] = checked_add((*lends)[p], times);
  }

  // Dhar burning from the base. A vertex catches fire once the number of
  // edges joining it to burnt vertices exceeds its coefficient. Returns true
  // when everything burns; otherwise burnt_/burnt_edges_ describe the
  // unburnt set A, with burnt_edges_[v] = outdeg_A(v) for v in A.
  template <typename Int>
  bool burn(const std::vector<Int>& d) {
    const std::size_t n = g_->vertex_count();
    std::fill(burnt_.begin(), burnt_.end(), false);
    std::fill(burnt_edges_.begin(), burnt_edges_.end(), 0);
    stack_.clear();
    burnt_[base_] = true;
    stack_.push_back(base_);
    std::size_t burnt_count = 1;
    while (!stack_.empty()) {
      VertexIndex u = stack_.back();
      stack_.pop_back();
      for (const Neighbor& w : g_->neighbors(u)) {
        if (burnt_[w.vertex]) continue;
        burnt_edges_[w.vertex] += w.multiplicity;
        if (d[w.vertex] < Int(burnt_edges_[w.vertex])) {
          burnt_[w.vertex] = true;
          ++burnt_count;
          stack_.push_back(w.vertex);
        }
      }
    }
    return burnt_count == n;
  }

  template <typename Int>
  void fire_unburnt(std::vector<Int>& d, std::vector<Int>* lends) {
    const std::size_t n = g_->vertex_count();
#ifndef NDEBUG
    auto before = layer_sums(d);
#endif
    // Fire the unburnt set as many times as it can stay out of debt.
    Int times = -1;
    for (VertexIndex v = 0; v < n; ++v) {
      if (burnt_[v] || burnt_edges_[v] == 0) continue;
      Int k = d[v] / Int(burnt_edges_[v]);
      if (times < 0 || k < times) times = k;
    }
    assert(times >= 1);
    for (VertexIndex v = 0; v < n; ++v) {
      if (burnt_[v]) continue;
      if (lends) (*lends)[v] = checked_add((*lends)[v], times);
      for (const Neighbor& w : g_->neighbors(v)) {
        if (!burnt_[w.vertex]) continue;
        Int moved = checked_mul(times, Int(w.multiplicity));
        d[v] = checked_sub(d[v], moved);
        d[w.vertex] = checked_add(d[w.vertex], moved);
      }
    }
#ifndef NDEBUG
    assert(layer_sums(d) > before);
#endif
  }

#ifndef NDEBUG
  // Potentials of the termination argument: debts summed per BFS layer from
  // the farthest inward, then coefficient sums per layer from the base out.
  // Both strictly increase (lexicographically) in their respective phases.
  template <typename Int>
  std::vector<Int> debt_profile(const std::vector<Int>& d) const {
    std::int64_t depth = 0;
    for (auto l : layer_) depth = std::max(depth, l);
    std::vector<Int> mu(static_cast<std::size_t>(depth), Int(0));
    for (VertexIndex v = 0; v < d.size(); ++v)
      if (layer_[v] > 0 && d[v] < 0) mu[static_cast<std::size_t>(depth - layer_[v])] += d[v];
    return mu;
  }
  template <typename Int>
  std::vector<Int> layer_sums(const std::vector<Int>& d) const {
    std::int64_t depth = 0;
    for (auto l : layer_) depth = std::max(depth, l);
    std::vector<Int> mu(static_cast<std::size_t>(depth + 1), Int(0));
    for (VertexIndex v = 0; v < d.size(); ++v) mu[static_cast<std::size_t>(layer_[v])] += d[v];
    return mu;
  }
#endif

  const Multigraph* g_;
  VertexIndex base_;
  std::vector<VertexIndex> bfs_order_;
  std::vector<VertexIndex> parent_;
  std::vector<std::int64_t> layer_;
  std::vector<bool> burnt_;
  std::vector<std::int64_t> burnt_edges_;
  std::vector<VertexIndex> stack_;
};

}  // namespace chipfire::detail
