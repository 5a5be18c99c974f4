#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pcm/colouring.hpp"
#include "pcm/graph.hpp"
#include "pcm/vertex_set.hpp"

namespace pcm {

/// One search-tree node as seen at entry. Vertices are 0-based here;
/// format_trace() renders them 1-based.
struct TraceNode {
  int depth = 0;
  std::vector<int> candidates;  // S at node entry, in expansion order
  std::vector<int> skip_set;    // C (pmc only; empty otherwise)
  std::vector<int> clique;      // R at node entry
  int bound = 0;                // |R| + bound term for this node
  bool pruned = false;          // node exited via the bound
};

struct SolveTrace {
  std::vector<TraceNode> nodes;
};

/// Stable one-line-per-node text rendering of a trace (1-based vertices).
std::string format_trace(const SolveTrace& trace);

struct SolveOptions {
  double timeout_secs = std::numeric_limits<double>::infinity();
  /// pmc only: fixes the root expansion order (a permutation of V).
  std::optional<std::vector<int>> order_override;
  SolveTrace* trace = nullptr;
};

struct SolveResult {
  std::vector<int> members;  // best clique found, ascending
  std::size_t size = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t colour_prunes = 0;
  std::uint64_t skip_prunes = 0;  // vertices not expanded due to C (pmc)
  double wall_time = 0.0;
  bool complete = true;  // false iff the timeout budget expired
};

/// Depth-first expansion with the |R| + |S| size bound.
SolveResult solve_basic(const Graph& g, const SolveOptions& opts = {});

/// Degree-ordered root, greedy-colouring bound, right-to-left expansion.
SolveResult solve_mcq(const Graph& g, const SolveOptions& opts = {});

/// MCQ machinery plus per-node pivot selection: only vertices in
/// C = S \ adjacency(pivot) are expanded; removed vertices propagate
/// through F and colours are renumbered after removals.
SolveResult solve_pmc(const Graph& g, const SolveOptions& opts = {});

struct Pivot {
  int vertex = -1;
  VertexSet skip_set;  // C = S \ adjacency(vertex)
};

/// Pivot maximising |S ∩ adjacency(v)| over v in S ∪ F, ties broken by
/// lowest vertex index. Throws std::invalid_argument on empty S.
Pivot select_pivot(const Graph& g, const VertexSet& candidates,
                   const VertexSet& removed);

/// Exhaustive clique enumeration; n <= 25 enforced. Deterministic: returns
/// the lexicographically smallest maximum clique.
std::vector<int> brute_force_mc(const Graph& g);

/// Vertices sorted by degree descending, ties by ascending index.
std::vector<int> initial_order(const Graph& g);

}  // namespace pcm
