#include "sepchi/bipartite.hpp"

#include <stdexcept>

namespace sepchi {

BipartiteGraph BipartiteGraph::from_graph(const Graph& g, int left_size) {
  if (left_size < 0 || left_size > g.order())
    throw std::invalid_argument("left part size outside graph order");
  BipartiteGraph h(left_size, g.order() - left_size);
  for (const auto& [u, v] : g.edges()) {
    if (v < left_size || u >= left_size)
      throw std::invalid_argument("graph has an edge inside one part");
    h.add_edge(u, v - left_size);
  }
  return h;
}

BipartiteGraph semi_induced_bipartite(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.universe() != g.order() || t.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  if (s.intersects(t)) throw std::invalid_argument("semi-induced parts overlap");
  const std::vector<int> left = s.members();
  const std::vector<int> right = t.members();
  BipartiteGraph h(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (g.has_edge(left[i], right[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

}  // namespace sepchi
