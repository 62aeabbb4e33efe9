#include "sepchi/graph.hpp"

#include <stdexcept>

namespace sepchi {

Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("average degree undefined on order 0");
  return make_rational(2 * g.edge_count(), g.order());
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  const std::vector<int> verts = s.members();
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  std::vector<VertexSet> comps;
  VertexSet todo = keep;
  for (int v = todo.first(); v >= 0; v = todo.first()) {
    // BFS by frontier expansion over bitsets.
    VertexSet comp(g.order());
    VertexSet frontier = VertexSet::single(g.order(), v);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet nxt(g.order());
      for (int u = frontier.first(); u >= 0; u = frontier.next(u)) nxt |= g.neighbors(u);
      nxt &= keep;
      nxt -= comp;
      frontier = nxt;
    }
    comps.push_back(comp);
    todo -= comp;
  }
  return comps;  // ordered by smallest member because todo.first() is increasing
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components_within(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size does not match graph order");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  Graph out(g.order());
  for (const auto& [u, v] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace sepchi
