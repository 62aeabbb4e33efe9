#include "sepchi/invariants.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace sepchi {

namespace {

constexpr int kExactLimit = 64;  // single-word adjacency for the search cores

void check_exact_limit(const Graph& g, const char* what) {
  if (g.order() > kExactLimit)
    throw BudgetError(std::string("exact budget exceeded: ") + what + " supports n <= 64");
}

struct NodeCounter {
  long long used = 0;
  long long limit;

  explicit NodeCounter(long long l) : limit(l) {}

  void tick(const char* what) {
    if (++used > limit)
      throw BudgetError(std::string("exact budget exceeded: ") + what +
                        " search passed " + std::to_string(limit) + " nodes");
  }
};

// Greedy clique through highest-degree vertices; a valid lower bound for chi.
int greedy_clique_size(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  int best = 0;
  for (int start : order) {
    VertexSet cand = g.neighbors(start);
    int size = 1;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      ++size;
      cand &= g.neighbors(v);
    }
    best = std::max(best, size);
    if (best > g.degree(start)) break;  // later starts cannot beat it
  }
  return n == 0 ? 0 : std::max(best, 1);
}

// Greedy DSATUR coloring; returns the number of colors used.
int dsatur_upper_bound(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> class_adj;  // per color, union of neighborhoods
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != -1) continue;
      int s = 0;
      for (const auto& adj : class_adj)
        if (adj.contains(v)) ++s;
      const int d = g.degree(v);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    int c = 0;
    while (c < static_cast<int>(class_adj.size()) &&
           class_adj[static_cast<std::size_t>(c)].contains(best))
      ++c;
    if (c == static_cast<int>(class_adj.size())) class_adj.emplace_back(g.order());
    class_adj[static_cast<std::size_t>(c)] |= g.neighbors(best);
    color[static_cast<std::size_t>(best)] = c;
  }
  return static_cast<int>(class_adj.size());
}

// Exact k-colorability by DSATUR-guided backtracking. New color classes are
// opened at most once per level, which removes color symmetry.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k, NodeCounter& nodes)
      : g_(g), k_(k), nodes_(nodes), color_(static_cast<std::size_t>(g.order()), -1),
        class_adj_(static_cast<std::size_t>(k), VertexSet(g.order())) {}

  bool run() { return color_next(0, 0); }

 private:
  bool color_next(int colored, int used) {
    nodes_.tick("chromatic number");
    const int n = g_.order();
    if (colored == n) return true;

    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[static_cast<std::size_t>(v)] != -1) continue;
      int s = 0;
      for (int c = 0; c < used; ++c)
        if (class_adj_[static_cast<std::size_t>(c)].contains(v)) ++s;
      if (s == used && used == k_) return false;  // v has no feasible color
      const int d = g_.degree(v);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }

    const int tryable = std::min(used + 1, k_);
    for (int c = 0; c < tryable; ++c) {
      if (class_adj_[static_cast<std::size_t>(c)].contains(best)) continue;
      const VertexSet saved = class_adj_[static_cast<std::size_t>(c)];
      color_[static_cast<std::size_t>(best)] = c;
      class_adj_[static_cast<std::size_t>(c)] |= g_.neighbors(best);
      if (color_next(colored + 1, std::max(used, c + 1))) return true;
      class_adj_[static_cast<std::size_t>(c)] = saved;
      color_[static_cast<std::size_t>(best)] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  NodeCounter& nodes_;
  std::vector<int> color_;
  std::vector<VertexSet> class_adj_;
};

}  // namespace

int chromatic_number(const Graph& g, const Budget& budget) {
  check_exact_limit(g, "chromatic number");
  const int n = g.order();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;

  const int lb = greedy_clique_size(g);
  const int ub = dsatur_upper_bound(g);
  if (lb == ub) return ub;

  NodeCounter nodes(budget.search_nodes);
  for (int k = lb; k < ub; ++k) {
    KColorSearch search(g, k, nodes);
    if (search.run()) return k;
  }
  return ub;
}

namespace {

// Tomita-style branch and bound: candidates are greedily colored and visited
// in reverse color order, pruning when clique size + color bound is too low.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, NodeCounter& nodes) : g_(g), nodes_(nodes) {}

  int run() {
    VertexSet all = g_.vertices();
    expand(0, all);
    return best_;
  }

 private:
  void expand(int clique_size, const VertexSet& cand) {
    nodes_.tick("clique number");
    if (cand.empty()) {
      best_ = std::max(best_, clique_size);
      return;
    }

    // Greedy coloring of the candidates, in index order per color class.
    std::vector<int> verts;
    std::vector<int> bound;
    VertexSet rest = cand;
    int color = 0;
    while (!rest.empty()) {
      ++color;
      VertexSet avail = rest;
      for (int v = avail.first(); v >= 0; v = avail.first()) {
        verts.push_back(v);
        bound.push_back(color);
        avail -= g_.neighbors(v);
        avail.remove(v);
        rest.remove(v);
      }
    }

    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (clique_size + bound[static_cast<std::size_t>(i)] <= best_) return;
      const int v = verts[static_cast<std::size_t>(i)];
      VertexSet next = cand & g_.neighbors(v);
      // only keep candidates not yet branched on at this level
      for (int j = i; j < static_cast<int>(verts.size()); ++j)
        next.remove(verts[static_cast<std::size_t>(j)]);
      best_ = std::max(best_, clique_size + 1);
      expand(clique_size + 1, next);
    }
  }

  const Graph& g_;
  NodeCounter& nodes_;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g, const Budget& budget) {
  check_exact_limit(g, "clique number");
  if (g.order() == 0) return 0;
  NodeCounter nodes(budget.search_nodes);
  MaxCliqueSearch search(g, nodes);
  return search.run();
}

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.order();
  DegeneracyResult res;
  res.elimination_order.reserve(static_cast<std::size_t>(n));
  VertexSet alive = g.vertices();
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_deg = 0;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      const int d = (g.neighbors(v) & alive).count();
      if (pick == -1 || d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    res.degeneracy = std::max(res.degeneracy, pick_deg);
    res.elimination_order.push_back(pick);
    alive.remove(pick);
  }
  return res;
}

bool is_stable(const Graph& g) { return g.edge_count() == 0; }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      const VertexSet& nb = g.neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (side[static_cast<std::size_t>(v)] == -1) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  // Acyclic iff every component has exactly |C| - 1 edges.
  for (const VertexSet& comp : connected_components(g)) {
    long long inside = 0;
    for (int v = comp.first(); v >= 0; v = comp.next(v))
      inside += (g.neighbors(v) & comp).count();
    inside /= 2;
    if (inside != comp.count() - 1) return false;
  }
  return true;
}

}  // namespace sepchi
