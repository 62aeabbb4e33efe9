#pragma once

#include "sepchi/budget.hpp"
#include "sepchi/graph.hpp"
#include "sepchi/rational.hpp"
#include "sepchi/separators.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sepchi {

// Hereditary properties a cut may be required to induce. Hereditary means
// preserved under induced subgraphs, which licenses testing only minimal
// separators in find_cut.
struct CutProperty {
  enum class Kind { stable, bipartite, forest, chi_lt, degenerate_le };

  Kind kind = Kind::stable;
  int bound = 0;  // k for chi_lt, d for degenerate_le

  static CutProperty stable() { return {Kind::stable, 0}; }
  static CutProperty bipartite() { return {Kind::bipartite, 0}; }
  static CutProperty forest() { return {Kind::forest, 0}; }
  static CutProperty chi_lt(int k) { return {Kind::chi_lt, k}; }
  static CutProperty degenerate_le(int d) { return {Kind::degenerate_le, d}; }

  std::string name() const;
};

// Does the property hold on this (already induced) graph?
bool property_holds(const CutProperty& p, const Graph& induced, const Budget& budget = {});

// First minimal separator (in deterministic enumeration order) inducing the
// property, or nullopt after a completed enumeration found none. A nullopt
// is therefore an exhaustive "none"; budget overruns throw instead.
std::optional<SeparatorReport> find_cut(const Graph& g, const CutProperty& p,
                                        const Budget& budget = {});

// Scan every isomorphism class of connected graphs with n <= n_max and
// |E| < 2n-3 for a stable cut; any class without one is emitted as a
// violator. Also confirms, for each n >= 4, that clique_join(2, n) sits at
// exactly 2n-3 edges and admits no stable cut.
struct ChenYuRow {
  int n = 0;
  std::size_t classes_scanned = 0;
  std::vector<std::string> violators_g6;
  bool extremal_checked = false;        // n >= 4 only
  bool extremal_no_stable_cut = false;  // clique_join(2, n) admits none
};

struct ChenYuReport {
  int n_max = 0;
  std::vector<ChenYuRow> rows;

  std::size_t total_violators() const {
    std::size_t t = 0;
    for (const auto& r : rows) t += r.violators_g6.size();
    return t;
  }
};

ChenYuReport scan_chen_yu(int n_max, const Budget& budget = {});

// Counterexample search: graphs below the edge threshold (|E| < k n - k(k+1)/2,
// or |E| < ell * n when ell is given) whose every separator induces chromatic
// number >= k. Each scanned instance yields one record; counterexamples carry
// the per-separator chromatic numbers as their certificate, and budget
// overruns are recorded per instance rather than aborting the stream.
enum class HuntMode { enumerate, random };

struct HuntOptions {
  int k = 3;
  std::optional<Rational> ell;  // edge bound |E| < ell*n instead of the k-bound
  int n_min = 3;
  int n_max = 7;
  HuntMode mode = HuntMode::enumerate;
  std::uint64_t seed = 0;       // random mode stream seed
  int random_trials = 100;      // instances sampled in random mode
  std::size_t resume_after = 0; // skip this many classes/trials deterministically
  Budget budget;
};

struct HuntRecord {
  std::string graph6;  // canonical form
  int n = 0;
  long long m = 0;
  std::string verdict;  // "has_cut" | "counterexample" | "budget_exceeded" | "skipped"
  std::optional<VertexSet> cut;
  std::optional<int> cut_chi;
  std::vector<int> separator_chis;  // counterexample certificate
  std::uint64_t seed = 0;           // per-record seed in random mode
};

void hunt_counterexample(const HuntOptions& options,
                         const std::function<void(const HuntRecord&)>& emit);

}  // namespace sepchi
