#pragma once

#include "sepchi/bipartite.hpp"
#include "sepchi/budget.hpp"
#include "sepchi/rational.hpp"

namespace sepchi {

// A cross-independent pair in a bipartite graph: subsets of the two parts
// with no edge between them. Its size is min(|left|, |right|).
struct BiHole {
  VertexSet left;   // over the host's left universe
  VertexSet right;  // over the host's right universe

  int size() const {
    const int l = left.count();
    const int r = right.count();
    return l < r ? l : r;
  }
};

struct BiHoleResult {
  int size = 0;
  BiHole witness;
};

// Exact maximum bi-hole size plus one witness. A bi-hole of size s exists
// iff a balanced s-by-s one does (shrink the larger side), so the search
// branches over left subsets and keeps the uncovered right vertices; bounds
// combine remaining-choice counts with a degree-rank estimate of future
// coverage. The witness is the lexicographically smallest maximum bi-hole
// (left side first, then right side).
BiHoleResult max_bihole(const BipartiteGraph& h, const Budget& budget = {});

// Plain loop over all left subsets with the maximal complementary right set;
// no pruning, no balancing. Test oracle only; parts capped at 14.
int max_bihole_bruteforce(const BipartiteGraph& h);

// True iff max_bihole(h) < threshold. The threshold may be non-integer; the
// comparison is exact (integer vs rational).
bool verify_no_bihole(const BipartiteGraph& h, const Rational& threshold,
                      const Budget& budget = {});

// Witness sanity: both sides inside the parts and no crossing edge.
bool bihole_is_valid(const BipartiteGraph& h, const BiHole& hole);

}  // namespace sepchi
