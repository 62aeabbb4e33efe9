#include "sepchi/bihole.hpp"

#include <algorithm>
#include <vector>

namespace sepchi {

namespace {

constexpr int kSolverLimit = 64;
constexpr int kBruteLimit = 14;

struct Counter {
  long long used = 0;
  long long limit;

  explicit Counter(long long l) : limit(l) {}

  void tick() {
    if (++used > limit)
      throw BudgetError("exact budget exceeded: bi-hole search passed " +
                        std::to_string(limit) + " nodes");
  }
};

// Residual-degree rank bound: any t further left picks cover at least the
// t-th smallest residual degree many new right vertices, because at most
// t-1 candidates have a smaller one.
int rank_bound(const std::vector<VertexSet>& nb, const VertexSet& covered, int from, int t) {
  std::vector<int> residual;
  residual.reserve(nb.size() - static_cast<std::size_t>(from));
  for (std::size_t u = static_cast<std::size_t>(from); u < nb.size(); ++u)
    residual.push_back((nb[u] - covered).count());
  std::nth_element(residual.begin(), residual.begin() + (t - 1), residual.end());
  return residual[static_cast<std::size_t>(t - 1)];
}

class BiholeSearch {
 public:
  BiholeSearch(const BipartiteGraph& h, long long node_limit)
      : a_(h.left_size()), b_(h.right_size()), nodes_(node_limit) {
    nb_.reserve(static_cast<std::size_t>(a_));
    for (int l = 0; l < a_; ++l) nb_.push_back(h.right_neighbors(l));
  }

  int max_size() {
    best_ = 0;
    dfs(0, 0, VertexSet(b_));
    return best_;
  }

  // Lexicographically least left set of size `s` whose uncovered right part
  // has at least `s` vertices; include-first DFS finds it first because the
  // prunes are sound.
  BiHole witness(int s) {
    BiHole hole{VertexSet(a_), VertexSet(b_)};
    if (s == 0) return hole;
    VertexSet chosen(a_);
    VertexSet covered(b_);
    if (!fix(0, s, chosen, covered)) throw std::logic_error("bi-hole witness search failed");
    hole.left = chosen;
    const VertexSet free = covered.complement();
    int taken = 0;
    for (int r = free.first(); r >= 0 && taken < s; r = free.next(r), ++taken)
      hole.right.add(r);
    return hole;
  }

 private:
  void dfs(int i, int chosen, const VertexSet& covered) {
    nodes_.tick();
    const int free_right = b_ - covered.count();
    best_ = std::max(best_, std::min(chosen, free_right));
    if (i == a_) return;
    if (std::min(chosen + (a_ - i), free_right) <= best_) return;
    const int t = best_ + 1 - chosen;  // >= 1 here, and a_ - i >= t
    if (t >= 1 && free_right - rank_bound(nb_, covered, i, t) <= best_) return;
    dfs(i + 1, chosen + 1, covered | nb_[static_cast<std::size_t>(i)]);
    dfs(i + 1, chosen, covered);
  }

  bool fix(int i, int need, VertexSet& chosen, const VertexSet& covered) {
    nodes_.tick();
    const int s = chosen.count() + need;
    if (need == 0) return b_ - covered.count() >= s;
    if (a_ - i < need) return false;
    if (b_ - covered.count() < s) return false;
    if (b_ - covered.count() - rank_bound(nb_, covered, i, need) < s) return false;
    chosen.add(i);
    if (fix(i + 1, need - 1, chosen, covered | nb_[static_cast<std::size_t>(i)])) return true;
    chosen.remove(i);
    return fix(i + 1, need, chosen, covered);
  }

  int a_, b_;
  std::vector<VertexSet> nb_;
  Counter nodes_;
  int best_ = 0;
};

}  // namespace

BiHoleResult max_bihole(const BipartiteGraph& h, const Budget& budget) {
  if (h.left_size() > kSolverLimit || h.right_size() > kSolverLimit)
    throw BudgetError("exact budget exceeded: bi-hole solver supports parts <= 64");
  BiholeSearch search(h, budget.search_nodes);
  BiHoleResult res;
  res.size = search.max_size();
  res.witness = search.witness(res.size);
  return res;
}

int max_bihole_bruteforce(const BipartiteGraph& h) {
  const int a = h.left_size();
  const int b = h.right_size();
  if (a > kBruteLimit || b > kBruteLimit)
    throw BudgetError("exact budget exceeded: bi-hole brute force supports parts <= 14");
  // For a fixed left set the best partner is everything it does not touch,
  // so one loop over left subsets is exhaustive over all pairs.
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << a); ++mask) {
    VertexSet covered(b);
    int size = 0;
    for (int u = 0; u < a; ++u)
      if ((mask >> u) & 1) {
        covered |= h.right_neighbors(u);
        ++size;
      }
    best = std::max(best, std::min(size, b - covered.count()));
  }
  return best;
}

bool verify_no_bihole(const BipartiteGraph& h, const Rational& threshold, const Budget& budget) {
  return Rational(max_bihole(h, budget).size) < threshold;
}

bool bihole_is_valid(const BipartiteGraph& h, const BiHole& hole) {
  if (hole.left.universe() != h.left_size() || hole.right.universe() != h.right_size())
    return false;
  for (int l = hole.left.first(); l >= 0; l = hole.left.next(l))
    if (h.right_neighbors(l).intersects(hole.right)) return false;
  return true;
}

}  // namespace sepchi
