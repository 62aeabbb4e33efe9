#pragma once

#include "sepchi/budget.hpp"
#include "sepchi/generators.hpp"
#include "sepchi/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sepchi {

// A separator is a vertex set X with V \ X nonempty and disconnected. The
// report carries a disconnection witness and the exact invariants of the
// induced subgraph G[X].
struct SeparatorReport {
  VertexSet x;
  VertexSet witness_a;  // nonempty, in distinct components of G \ X
  VertexSet witness_b;
  int chi = 0;
  int omega = 0;
  int degeneracy = 0;
};

struct SeparationCheck {
  bool separates = false;
  VertexSet witness_a;
  VertexSet witness_b;
};

// True iff g minus x has at least two components. x = V(g) is rejected.
SeparationCheck is_separator(const Graph& g, const VertexSet& x);

// X is a minimal separator iff G \ X has at least two components whose
// neighborhood is all of X ("full" components).
bool is_minimal_separator(const Graph& g, const VertexSet& x);

// All inclusion-minimal (a,b)-separators, each exactly once, via
// close-neighborhood seeding plus expansion (Berry-Bordat style generation).
// Deterministic order: seeds sorted lexicographically, then discovery order.
std::vector<VertexSet> minimal_separators(const Graph& g, const Budget& budget = {});

// Builds the full report for a separator x (throws if x does not separate).
SeparatorReport make_separator_report(const Graph& g, const VertexSet& x,
                                      const Budget& budget = {});

enum class SepInvariant { chi, omega, degeneracy };

// Minimum of the chosen invariant of G[X] over all separators X, attained on
// a minimal separator: every separator contains a minimal one and the
// invariants are hereditary, so scanning minimal separators is exhaustive
// (oracle-tested against sep_min_bruteforce). nullopt when g has no
// separator (e.g. complete graphs).
std::optional<std::pair<int, SeparatorReport>> min_separator_invariant(
    const Graph& g, SepInvariant inv, const Budget& budget = {});

std::optional<std::pair<int, SeparatorReport>> min_separator_chromatic(
    const Graph& g, const Budget& budget = {});
std::optional<std::pair<int, SeparatorReport>> min_separator_clique(
    const Graph& g, const Budget& budget = {});
std::optional<std::pair<int, SeparatorReport>> min_separator_degeneracy(
    const Graph& g, const Budget& budget = {});

// Exhaustive minimum over ALL subsets x with G \ x disconnected. Oracle for
// the minimal-separator reduction; n capped at 16.
std::optional<int> sep_min_bruteforce(const Graph& g, SepInvariant inv,
                                      const Budget& budget = {});

// If some vertex v has degree <= k-1 and V \ N[v] is nonempty, its open
// neighborhood separates {v} from the rest and induces a subgraph on fewer
// than k vertices. Smallest qualifying v wins.
std::optional<SeparatorReport> low_degree_separator(const Graph& g, int k,
                                                    const Budget& budget = {});

// Per-separator verification of the chained-clique separator bound. With
// b = max_bihole(link): every minimal separator X admits a consecutive block
// pair with no cross edge outside X, hence min block remainder <= b, hence a
// clique of size >= block_size - b inside X, hence chi(G[X]) >= block_size - b.
// Each step is checked directly per separator.
struct Claim1Report {
  int bihole_max = 0;              // b
  int bound = 0;                   // max(block_size - b, 0)
  std::size_t separators_checked = 0;
  bool all_pass = true;
  std::vector<std::size_t> failing_separators;  // indices into enumeration order
  std::optional<int> min_chi;                   // min chi(G[X]) over minimal separators
  std::optional<SeparatorReport> min_chi_witness;
};

Claim1Report verify_claim1(const ChainedCliqueInstance& inst, const Budget& budget = {});

}  // namespace sepchi
