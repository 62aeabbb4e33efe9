#pragma once

#include "sepchi/budget.hpp"
#include "sepchi/graph.hpp"

#include <vector>

namespace sepchi {

// Exact hereditary invariants. These solvers never return heuristic answers:
// if the node budget (or the n <= 64 representation limit) is exceeded they
// raise BudgetError instead.

// Exact chromatic number. Branch and bound: greedy clique lower bound,
// DSATUR upper bound, then iterative k-colorability search with DSATUR
// vertex selection (ties broken by lowest index, so results and witnesses
// are reproducible bit-for-bit).
int chromatic_number(const Graph& g, const Budget& budget = {});

// Exact clique number via bitset branch and bound with a greedy-coloring
// bound on the candidate set.
int clique_number(const Graph& g, const Budget& budget = {});

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> elimination_order;  // repeatedly a minimum-degree vertex
};

DegeneracyResult degeneracy(const Graph& g);

bool is_stable(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace sepchi
