#pragma once

#include "sepchi/bipartite.hpp"
#include "sepchi/budget.hpp"
#include "sepchi/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sepchi {

// Clique on vertices 0..k-1 joined completely to the independent set
// k..n-1. Has exactly k*n - k*(k+1)/2 edges.
Graph clique_join(int k, int n);

struct RandomBipartiteStats {
  int attempts = 1;                       // sampling attempts consumed
  double mean_selected_left_degree = 0.0; // degrees of the selected left
                                          // vertices in the full 2n x 2n sample
};

// Sample a 2n x 2n bipartite graph with edge probability delta/(4n), then
// keep the n smallest-indexed left vertices of degree <= delta and the first
// n right vertices. Left degrees of the output are <= delta by construction.
// If fewer than n left vertices qualify the sample is redrawn with a derived
// seed, up to 64 attempts.
BipartiteGraph random_bipartite_restricted(int n, int delta, std::uint64_t seed,
                                           RandomBipartiteStats* stats = nullptr);

// A chain of block_count cliques of block_size vertices each; consecutive
// blocks are joined by a copy of `link` (earlier block on the left part) and
// non-consecutive blocks are independent. Block i occupies vertices
// [i*block_size, (i+1)*block_size).
struct ChainedCliqueInstance {
  int block_size = 0;
  int block_count = 0;
  BipartiteGraph link;
  Graph graph;
  std::vector<VertexSet> blocks;
};

ChainedCliqueInstance chained_clique(int block_size, int block_count,
                                     const BipartiteGraph& link);

// Structural re-verification: blocks are cliques, consecutive semi-induced
// subgraphs equal `link` exactly, non-consecutive blocks are independent,
// and the edge count matches block_count*C(block_size,2) +
// (block_count-1)*|E(link)|.
bool check_chained_invariants(const ChainedCliqueInstance& inst, std::string* why = nullptr);

// Isomorphism-invariant canonical form: the minimum upper-triangle adjacency
// encoding over all vertex orderings sorted by non-increasing degree, with
// prefix pruning; returned as the graph6 line of the canonical labeling.
// Practical up to n = 11 or so; enumeration only needs n <= 9.
std::string canonical_graph6(const Graph& g);

// One representative per isomorphism class of connected graphs with n
// vertices and at most max_edges edges, built by vertex augmentation with
// canonical-form rejection. Deterministic order: by edge count, then by
// canonical code. Budget-limited to n <= 9.
std::vector<Graph> enumerate_connected_graphs(int n, long long max_edges);

// Uniform graph with exactly m of the C(n,2) possible edges.
Graph random_graph_with_edges(int n, long long m, std::uint64_t seed);

}  // namespace sepchi
