#include "pcm/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace pcm {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchContext {
  const Graph& g;
  SolveResult result;
  std::vector<int> current;  // R
  SolveTrace* trace = nullptr;
  Clock::time_point deadline{};
  bool has_deadline = false;
  bool expired = false;
  std::uint64_t tick = 0;
  std::vector<int> best;  // R_best, in discovery order

  explicit SearchContext(const Graph& graph, const SolveOptions& opts)
      : g(graph), trace(opts.trace) {
    if (opts.timeout_secs != std::numeric_limits<double>::infinity()) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        opts.timeout_secs));
    }
  }

  bool timed_out() {
    if (!has_deadline || expired) return expired;
    if ((++tick & 0xFF) == 0 && Clock::now() >= deadline) expired = true;
    return expired;
  }

  void maybe_update_best() {
    if (current.size() > best.size()) best = current;
  }

  std::size_t record_node(int depth, const std::vector<int>& candidates,
                          const std::vector<int>& skip, int bound) {
    if (!trace) return 0;
    TraceNode node;
    node.depth = depth;
    node.candidates = candidates;
    node.skip_set = skip;
    node.clique = current;
    node.bound = bound;
    trace->nodes.push_back(std::move(node));
    return trace->nodes.size() - 1;
  }

  void mark_pruned(std::size_t node_index) {
    if (trace) trace->nodes[node_index].pruned = true;
  }

  SolveResult finish(Clock::time_point start) {
    result.members = best;
    std::sort(result.members.begin(), result.members.end());
    result.size = result.members.size();
    result.complete = !expired;
    result.wall_time =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
};

std::vector<int> filter_by_adjacency(const Graph& g,
                                     const std::vector<int>& seq, int v,
                                     std::size_t skip_front = 0) {
  const VertexSet& nbrs = g.adjacency(v);
  std::vector<int> out;
  out.reserve(seq.size());
  for (std::size_t k = skip_front; k < seq.size(); ++k) {
    if (nbrs.contains(seq[k])) out.push_back(seq[k]);
  }
  return out;
}

void basic_rec(SearchContext& ctx, std::vector<int>& S, int depth) {
  ++ctx.result.nodes_expanded;
  const auto node_idx = ctx.record_node(
      depth, S, {}, static_cast<int>(ctx.current.size() + S.size()));
  std::size_t start = 0;
  while (start < S.size()) {
    if (ctx.timed_out()) return;
    if (ctx.current.size() + (S.size() - start) <= ctx.best.size()) {
      ++ctx.result.colour_prunes;
      ctx.mark_pruned(node_idx);
      return;
    }
    const int v = S[start];
    ctx.current.push_back(v);
    std::vector<int> child = filter_by_adjacency(ctx.g, S, v, start + 1);
    if (!child.empty()) {
      basic_rec(ctx, child, depth + 1);
    } else {
      ctx.maybe_update_best();
    }
    ctx.current.pop_back();
    ++start;  // S <- S \ {v}
  }
}

void mcq_rec(SearchContext& ctx, Colouring f, int depth) {
  ++ctx.result.nodes_expanded;
  const auto node_idx =
      ctx.record_node(depth, f.order, {},
                      static_cast<int>(ctx.current.size()) + f.max_colour());
  while (!f.order.empty()) {
    if (ctx.timed_out()) return;
    const int v = f.order.back();
    const int fv = f.colours.back();
    if (ctx.current.size() + static_cast<std::size_t>(fv) <=
        ctx.best.size()) {
      ++ctx.result.colour_prunes;
      ctx.mark_pruned(node_idx);
      return;
    }
    ctx.current.push_back(v);
    std::vector<int> child = filter_by_adjacency(ctx.g, f.order, v);
    if (!child.empty()) {
      mcq_rec(ctx, greedy_colour(ctx.g, child), depth + 1);
    } else {
      ctx.maybe_update_best();
    }
    ctx.current.pop_back();
    f.order.pop_back();
    f.colours.pop_back();
  }
}

// PMC node state. In the paper-trace mode (order_override) the sequence
// keeps the caller-given order and colours are assigned without the
// colour reordering; otherwise the sequence is colour-ascending and
// expansion runs right-to-left.
struct PmcNode {
  std::vector<int> seq;
  std::vector<int> col;
  int max_col = 0;
};

PmcNode colour_in_seq_order(const Graph& g, std::vector<int> seq) {
  PmcNode node;
  std::vector<VertexSet> classes;
  node.col.reserve(seq.size());
  for (int v : seq) {
    const VertexSet& nbrs = g.adjacency(v);
    std::size_t c = 0;
    while (c < classes.size() && classes[c].intersects(nbrs)) ++c;
    if (c == classes.size()) classes.emplace_back(g.num_vertices());
    classes[c].insert(v);
    node.col.push_back(static_cast<int>(c) + 1);
  }
  node.seq = std::move(seq);
  node.max_col = static_cast<int>(classes.size());
  return node;
}

PmcNode node_from_colouring(Colouring f) {
  PmcNode node;
  node.max_col = f.max_colour();
  node.seq = std::move(f.order);
  node.col = std::move(f.colours);
  return node;
}

// Compress colour values to consecutive 1..k, preserving relative order.
void renumber_in_place(PmcNode& node) {
  if (node.col.empty()) {
    node.max_col = 0;
    return;
  }
  const int old_max = *std::max_element(node.col.begin(), node.col.end());
  std::vector<int> remap(static_cast<std::size_t>(old_max) + 1, 0);
  for (int c : node.col) remap[static_cast<std::size_t>(c)] = 1;
  int next = 0;
  for (int c = 1; c <= old_max; ++c) {
    if (remap[static_cast<std::size_t>(c)]) remap[static_cast<std::size_t>(c)] = ++next;
  }
  for (int& c : node.col) c = remap[static_cast<std::size_t>(c)];
  node.max_col = next;
}

void pmc_rec(SearchContext& ctx, PmcNode node, VertexSet removed, int depth,
             bool fixed_order) {
  ++ctx.result.nodes_expanded;

  VertexSet s_bits(ctx.g.num_vertices());
  for (int v : node.seq) s_bits.insert(v);
  Pivot pivot = select_pivot(ctx.g, s_bits, removed);
  ctx.result.skip_prunes += node.seq.size() - pivot.skip_set.count();

  const auto node_idx = ctx.record_node(
      depth, node.seq, pivot.skip_set.to_vector(),
      static_cast<int>(ctx.current.size()) + node.max_col);

  // fixed_order walks left-to-right in the given order; otherwise walk
  // right-to-left so the largest remaining colour is met first.
  std::size_t i = fixed_order ? 0 : node.seq.size();
  while (fixed_order ? i < node.seq.size() : i > 0) {
    if (ctx.timed_out()) return;
    if (ctx.current.size() + static_cast<std::size_t>(node.max_col) <=
        ctx.best.size()) {
      ++ctx.result.colour_prunes;
      ctx.mark_pruned(node_idx);
      return;
    }
    const std::size_t at = fixed_order ? i : i - 1;
    const int v = node.seq[at];
    if (pivot.skip_set.contains(v)) {
      ctx.current.push_back(v);
      std::vector<int> child_seq = filter_by_adjacency(ctx.g, node.seq, v);
      if (!child_seq.empty()) {
        VertexSet child_removed = removed.intersect(ctx.g.adjacency(v));
        PmcNode child =
            fixed_order ? colour_in_seq_order(ctx.g, std::move(child_seq))
                        : node_from_colouring(
                              greedy_colour(ctx.g, child_seq));
        pmc_rec(ctx, std::move(child), std::move(child_removed), depth + 1,
                fixed_order);
      } else {
        ctx.maybe_update_best();
      }
      ctx.current.pop_back();
      node.seq.erase(node.seq.begin() + static_cast<std::ptrdiff_t>(at));
      node.col.erase(node.col.begin() + static_cast<std::ptrdiff_t>(at));
      removed.insert(v);
      renumber_in_place(node);
      if (!fixed_order) --i;
      // fixed_order: the next element slid into position i.
    } else {
      if (fixed_order) {
        ++i;
      } else {
        --i;
      }
    }
  }
}

}  // namespace

std::string format_trace(const SolveTrace& trace) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    out << "{";
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (k) out << ",";
      out << sorted[k] + 1;
    }
    out << "}";
  };
  for (const TraceNode& node : trace.nodes) {
    out << "depth=" << node.depth << " |S|=" << node.candidates.size()
        << " |C|=" << node.skip_set.size() << " |R|=" << node.clique.size()
        << " bound=" << node.bound
        << " action=" << (node.pruned ? "prune" : "expand") << " C=";
    list(node.skip_set);
    out << " R=";
    list(node.clique);
    out << "\n";
  }
  return out.str();
}

SolveResult solve_basic(const Graph& g, const SolveOptions& opts) {
  const auto start = Clock::now();
  SearchContext ctx(g, opts);
  std::vector<int> root(g.num_vertices());
  std::iota(root.begin(), root.end(), 0);
  if (!root.empty()) basic_rec(ctx, root, 0);
  return ctx.finish(start);
}

SolveResult solve_mcq(const Graph& g, const SolveOptions& opts) {
  const auto start = Clock::now();
  SearchContext ctx(g, opts);
  if (g.num_vertices() > 0) {
    mcq_rec(ctx, greedy_colour(g, initial_order(g)), 0);
  }
  return ctx.finish(start);
}

SolveResult solve_pmc(const Graph& g, const SolveOptions& opts) {
  const auto start = Clock::now();
  SearchContext ctx(g, opts);
  const std::size_t n = g.num_vertices();
  const bool fixed_order = opts.order_override.has_value();
  if (fixed_order) {
    const std::vector<int>& order = *opts.order_override;
    std::vector<char> seen(n, 0);
    if (order.size() != n) {
      throw std::invalid_argument("order_override must be a permutation of V");
    }
    for (int v : order) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument(
            "order_override must be a permutation of V");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (n > 0) {
    PmcNode root = fixed_order
                       ? colour_in_seq_order(g, *opts.order_override)
                       : node_from_colouring(greedy_colour(g, initial_order(g)));
    pmc_rec(ctx, std::move(root), VertexSet(n), 0, fixed_order);
  }
  return ctx.finish(start);
}

Pivot select_pivot(const Graph& g, const VertexSet& candidates,
                   const VertexSet& removed) {
  if (candidates.empty()) {
    throw std::invalid_argument("select_pivot requires a nonempty S");
  }
  int best = -1;
  std::size_t best_cover = 0;
  // Candidates are S ∪ F, scanned in ascending index order so ties keep
  // the lowest vertex.
  for (std::size_t w = 0; w < candidates.num_words(); ++w) {
    std::uint64_t bits = candidates.data()[w] | removed.data()[w];
    while (bits) {
      const int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
      bits &= bits - 1;
      const std::size_t cover =
          candidates.intersection_count(g.adjacency(v));
      if (best < 0 || cover > best_cover) {
        best = v;
        best_cover = cover;
      }
    }
  }
  Pivot pivot;
  pivot.vertex = best;
  pivot.skip_set = candidates.minus(g.adjacency(best));
  return pivot;
}

namespace {

void brute_rec(const Graph& g, std::vector<int>& cand, std::vector<int>& cur,
               std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  for (std::size_t idx = 0; idx < cand.size(); ++idx) {
    const int v = cand[idx];
    std::vector<int> child;
    child.reserve(cand.size() - idx);
    const VertexSet& nbrs = g.adjacency(v);
    for (std::size_t k = idx + 1; k < cand.size(); ++k) {
      if (nbrs.contains(cand[k])) child.push_back(cand[k]);
    }
    cur.push_back(v);
    brute_rec(g, child, cur, best);
    cur.pop_back();
  }
}

}  // namespace

std::vector<int> brute_force_mc(const Graph& g) {
  if (g.num_vertices() > 25) {
    throw std::invalid_argument("brute_force_mc limited to n <= 25, got n=" +
                                std::to_string(g.num_vertices()));
  }
  std::vector<int> cand(g.num_vertices());
  std::iota(cand.begin(), cand.end(), 0);
  std::vector<int> cur, best;
  brute_rec(g, cand, cur, best);
  return best;  // already ascending: DFS extends by increasing index
}

std::vector<int> initial_order(const Graph& g) {
  std::vector<std::size_t> deg(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    deg[v] = g.degree(static_cast<int>(v));
  }
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace pcm
