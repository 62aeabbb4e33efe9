#pragma once

#include "sepchi/rational.hpp"
#include "sepchi/vertex_set.hpp"

#include <utility>
#include <vector>

namespace sepchi {

// Simple undirected graph on vertices 0..n-1. Adjacency is symmetric and
// loop-free by construction. Instances are assembled with add_edge and
// treated as immutable afterwards; every operation on them is a pure
// function, so graphs are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative order");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && u < n_ && adj_[static_cast<std::size_t>(u)].contains(v);
  }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("edge endpoint outside graph");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
    ++m_;
  }

  const VertexSet& neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex outside graph");
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return neighbors(v).count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  // Edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
           v = adj_[static_cast<std::size_t>(u)].next(v))
        out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

// 2m/n as an exact rational; order-0 graphs have no average degree.
Rational average_degree(const Graph& g);

// Subgraph induced on s; vertex i of the result corresponds to the i-th
// smallest member of s. Requires s to live over g's vertex universe.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of the subgraph induced on `keep`, as subsets of g's universe.
std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& keep);

bool is_connected(const Graph& g);

// Copy of g with vertex v renamed to perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace sepchi
