#include "sepchi/generators.hpp"

#include "sepchi/graph_io.hpp"
#include "sepchi/prng.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepchi {

Graph clique_join(int k, int n) {
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  if (n < k) throw std::invalid_argument("order must be at least the clique size");
  Graph g(n);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int v = k; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

BipartiteGraph random_bipartite_restricted(int n, int delta, std::uint64_t seed,
                                           RandomBipartiteStats* stats) {
  if (n < 1) throw std::invalid_argument("part size must be positive");
  if (delta < 1 || delta > 4 * n)
    throw std::invalid_argument("need 1 <= delta <= 4n");

  constexpr int kMaxAttempts = 64;
  SplitMix64 seeder(seed);
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    SplitMix64 rng(seeder.next());
    const int big = 2 * n;
    // Full 2n x 2n sample with edge probability delta/(4n).
    std::vector<VertexSet> full(static_cast<std::size_t>(big), VertexSet(big));
    for (int l = 0; l < big; ++l)
      for (int r = 0; r < big; ++r)
        if (rng.chance(static_cast<std::uint64_t>(delta), static_cast<std::uint64_t>(4 * n)))
          full[static_cast<std::size_t>(l)].add(r);

    std::vector<int> selected;
    for (int l = 0; l < big && static_cast<int>(selected.size()) < n; ++l)
      if (full[static_cast<std::size_t>(l)].count() <= delta) selected.push_back(l);
    if (static_cast<int>(selected.size()) < n) continue;

    BipartiteGraph out(n, n);
    long long degree_sum = 0;
    for (int i = 0; i < n; ++i) {
      const VertexSet& row = full[static_cast<std::size_t>(selected[static_cast<std::size_t>(i)])];
      degree_sum += row.count();
      for (int r = 0; r < n; ++r)
        if (row.contains(r)) out.add_edge(i, r);
    }
    if (stats != nullptr) {
      stats->attempts = attempt;
      stats->mean_selected_left_degree =
          static_cast<double>(degree_sum) / static_cast<double>(n);
    }
    return out;
  }
  throw std::runtime_error("generator exhausted retries");
}

ChainedCliqueInstance chained_clique(int block_size, int block_count,
                                     const BipartiteGraph& link) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  if (block_count < 2) throw std::invalid_argument("need at least two blocks");
  if (link.left_size() != block_size || link.right_size() != block_size)
    throw std::invalid_argument("link dimensions do not match the block size");

  ChainedCliqueInstance inst;
  inst.block_size = block_size;
  inst.block_count = block_count;
  inst.link = link;

  const int n = block_size * block_count;
  Graph g(n);
  for (int b = 0; b < block_count; ++b) {
    const int base = b * block_size;
    VertexSet block(n);
    for (int v = 0; v < block_size; ++v) block.add(base + v);
    inst.blocks.push_back(block);
    for (int u = 0; u < block_size; ++u)
      for (int v = u + 1; v < block_size; ++v) g.add_edge(base + u, base + v);
  }
  for (int b = 0; b + 1 < block_count; ++b) {
    const int lo = b * block_size;
    const int hi = (b + 1) * block_size;
    for (int x = 0; x < block_size; ++x) {
      const VertexSet& nb = link.right_neighbors(x);
      for (int y = nb.first(); y >= 0; y = nb.next(y)) g.add_edge(lo + x, hi + y);
    }
  }
  inst.graph = std::move(g);
  return inst;
}

bool check_chained_invariants(const ChainedCliqueInstance& inst, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };

  const int alpha = inst.block_size;
  const int beta = inst.block_count;
  if (static_cast<int>(inst.blocks.size()) != beta) return fail("wrong block count");
  if (inst.graph.order() != alpha * beta) return fail("wrong order");

  for (int b = 0; b < beta; ++b) {
    const std::vector<int> vs = inst.blocks[static_cast<std::size_t>(b)].members();
    if (static_cast<int>(vs.size()) != alpha) return fail("block " + std::to_string(b) + " has wrong size");
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!inst.graph.has_edge(vs[i], vs[j]))
          return fail("block " + std::to_string(b) + " is not a clique");
  }

  for (int b = 0; b + 1 < beta; ++b) {
    const BipartiteGraph cross = semi_induced_bipartite(
        inst.graph, inst.blocks[static_cast<std::size_t>(b)],
        inst.blocks[static_cast<std::size_t>(b + 1)]);
    if (cross != inst.link)
      return fail("blocks " + std::to_string(b) + "," + std::to_string(b + 1) +
                  " do not induce the link pattern");
  }

  for (int b = 0; b < beta; ++b)
    for (int c = b + 2; c < beta; ++c) {
      const VertexSet& left = inst.blocks[static_cast<std::size_t>(b)];
      const VertexSet& right = inst.blocks[static_cast<std::size_t>(c)];
      for (int v = left.first(); v >= 0; v = left.next(v))
        if (inst.graph.neighbors(v).intersects(right))
          return fail("non-consecutive blocks " + std::to_string(b) + "," +
                      std::to_string(c) + " are joined");
    }

  const long long expect = static_cast<long long>(beta) * alpha * (alpha - 1) / 2 +
                           static_cast<long long>(beta - 1) * inst.link.edge_count();
  if (inst.graph.edge_count() != expect) return fail("edge count mismatch");
  return true;
}

namespace {

constexpr int kCanonicalLimit = 24;

// Minimum upper-triangle adjacency encoding (graph6 bit order) over all
// vertex orderings sorted by non-increasing degree, found by DFS with prefix
// pruning. best_ holds the smallest prefix seen, padded with 1-bits, so a
// column strictly below the stored segment can overwrite it immediately.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    deg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);
    target_ = deg_;
    std::sort(target_.begin(), target_.end(), std::greater<int>());
  }

  Graph run() {
    best_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 1);
    order_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    column_.assign(static_cast<std::size_t>(n_), 0);
    place(0);

    Graph canon(n_);
    std::size_t bit = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (best_[bit]) canon.add_edge(i, j);
    return canon;
  }

 private:
  void place(int pos) {
    if (pos == n_) return;
    const std::size_t base = static_cast<std::size_t>(pos) * (pos - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] ||
          deg_[static_cast<std::size_t>(v)] != target_[static_cast<std::size_t>(pos)])
        continue;

      int cmp = 0;  // -1 below stored prefix, 0 equal, +1 above
      for (int q = 0; q < pos; ++q) {
        const char bit = g_.has_edge(order_[static_cast<std::size_t>(q)], v) ? 1 : 0;
        column_[static_cast<std::size_t>(q)] = bit;
        if (cmp == 0 && bit != best_[base + static_cast<std::size_t>(q)])
          cmp = bit < best_[base + static_cast<std::size_t>(q)] ? -1 : 1;
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        for (int q = 0; q < pos; ++q)
          best_[base + static_cast<std::size_t>(q)] = column_[static_cast<std::size_t>(q)];
        std::fill(best_.begin() + static_cast<std::ptrdiff_t>(base) + pos, best_.end(), 1);
      }
      order_[static_cast<std::size_t>(pos)] = v;
      used_[static_cast<std::size_t>(v)] = 1;
      place(pos + 1);
      used_[static_cast<std::size_t>(v)] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> deg_;
  std::vector<int> target_;
  std::vector<int> order_;
  std::vector<char> used_;
  std::vector<char> column_;
  std::vector<char> best_;
};

}  // namespace

std::string canonical_graph6(const Graph& g) {
  if (g.order() > kCanonicalLimit)
    throw BudgetError("exact budget exceeded: canonical form supports n <= 24");
  if (g.order() == 0) return write_graph6(g);
  return write_graph6(Canonicalizer(g).run());
}

std::vector<Graph> enumerate_connected_graphs(int n, long long max_edges) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > 9) throw BudgetError("exact budget exceeded: enumeration supports n <= 9");

  // Vertex augmentation over all (also disconnected) classes with the same
  // edge cap: deleting a vertex never adds edges, so parents suffice.
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& parent : level) {
      const unsigned long masks = 1UL << (size - 1);
      for (unsigned long mask = 0; mask < masks; ++mask) {
        if (parent.edge_count() + std::popcount(mask) > max_edges) continue;
        Graph child(size);
        for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if ((mask >> u) & 1) child.add_edge(u, size - 1);
        std::string code = canonical_graph6(child);
        if (next.find(code) == next.end()) {
          Graph canon = read_graph6(code);
          next.emplace(std::move(code), std::move(canon));
        }
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [code, graph] : next) level.push_back(std::move(graph));
    std::stable_sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
      return a.edge_count() < b.edge_count();
    });
  }

  std::vector<Graph> out;
  for (Graph& g : level)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_graph_with_edges(int n, long long m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative order");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw std::invalid_argument("edge count out of range");

  std::vector<long long> idx(static_cast<std::size_t>(pairs));
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  Graph g(n);
  for (long long i = 0; i < m; ++i) {
    const long long j =
        i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(pairs - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    // Decode pair index into (u, v) with u < v: index = C(v,2) + u.
    long long e = idx[static_cast<std::size_t>(i)];
    int v = 1;
    while (static_cast<long long>(v) * (v + 1) / 2 <= e) ++v;
    const int u = static_cast<int>(e - static_cast<long long>(v) * (v - 1) / 2);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace sepchi
