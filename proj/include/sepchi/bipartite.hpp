#pragma once

#include "sepchi/graph.hpp"
#include "sepchi/vertex_set.hpp"

#include <vector>

namespace sepchi {

// Two-part graph with parts 0..a-1 (left) and 0..b-1 (right). Edges are
// stored as right-neighbor sets per left vertex, so every edge crosses the
// bipartition by representation and left degrees are O(1) lookups.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(int left, int right) : a_(left), b_(right) {
    if (left < 0 || right < 0) throw std::invalid_argument("negative part size");
    adj_.assign(static_cast<std::size_t>(left), VertexSet(right));
    left_deg_.assign(static_cast<std::size_t>(left), 0);
  }

  static BipartiteGraph complete(int left, int right) {
    BipartiteGraph h(left, right);
    for (int l = 0; l < left; ++l)
      for (int r = 0; r < right; ++r) h.add_edge(l, r);
    return h;
  }

  int left_size() const { return a_; }
  int right_size() const { return b_; }
  long long edge_count() const { return m_; }

  bool has_edge(int l, int r) const {
    return l >= 0 && l < a_ && adj_[static_cast<std::size_t>(l)].contains(r);
  }

  void add_edge(int l, int r) {
    if (l < 0 || l >= a_ || r < 0 || r >= b_) throw std::out_of_range("edge endpoint outside part");
    if (has_edge(l, r)) return;
    adj_[static_cast<std::size_t>(l)].add(r);
    ++left_deg_[static_cast<std::size_t>(l)];
    ++m_;
  }

  const VertexSet& right_neighbors(int l) const {
    if (l < 0 || l >= a_) throw std::out_of_range("left vertex outside part");
    return adj_[static_cast<std::size_t>(l)];
  }

  int left_degree(int l) const {
    if (l < 0 || l >= a_) throw std::out_of_range("left vertex outside part");
    return left_deg_[static_cast<std::size_t>(l)];
  }

  int max_left_degree() const {
    int d = 0;
    for (int v : left_deg_) d = d > v ? d : v;
    return d;
  }

  BipartiteGraph transpose() const {
    BipartiteGraph t(b_, a_);
    for (int l = 0; l < a_; ++l)
      for (int r = adj_[static_cast<std::size_t>(l)].first(); r >= 0;
           r = adj_[static_cast<std::size_t>(l)].next(r))
        t.add_edge(r, l);
    return t;
  }

  // The graph on a+b vertices with the left part on 0..a-1 and the right
  // part on a..a+b-1. This doubling is how bipartite graphs travel as files.
  Graph to_graph() const {
    Graph g(a_ + b_);
    for (int l = 0; l < a_; ++l)
      for (int r = adj_[static_cast<std::size_t>(l)].first(); r >= 0;
           r = adj_[static_cast<std::size_t>(l)].next(r))
        g.add_edge(l, a_ + r);
    return g;
  }

  // Inverse of to_graph. Rejects graphs with an edge inside either part.
  static BipartiteGraph from_graph(const Graph& g, int left_size);

  bool operator==(const BipartiteGraph& o) const {
    return a_ == o.a_ && b_ == o.b_ && adj_ == o.adj_;
  }
  bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }

 private:
  int a_ = 0, b_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> left_deg_;
};

// Bipartite graph on disjoint s (left) and t (right), each in sorted order,
// whose edges are exactly the g-edges with one end in each.
BipartiteGraph semi_induced_bipartite(const Graph& g, const VertexSet& s, const VertexSet& t);

}  // namespace sepchi
