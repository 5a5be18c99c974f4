#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcm/vertex_set.hpp"

namespace pcm {

/// Malformed DIMACS input; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected simple graph with bitset adjacency rows. Immutable after
/// construction; safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from 0-based endpoint pairs. Duplicate edges are
  /// collapsed (counted in duplicate_edges()); self loops and out-of-range
  /// endpoints throw std::invalid_argument.
  static Graph build(std::size_t n,
                     const std::vector<std::pair<int, int>>& edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::size_t duplicate_edges() const { return duplicates_; }

  const VertexSet& adjacency(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(int v) const { return adjacency(v).count(); }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }

  /// Edge (u,v) present iff absent here and u != v. Involution.
  Graph complement() const;

  /// Distinct edges as 0-based pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) {
      throw std::invalid_argument("vertex index " + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t duplicates_ = 0;
  std::vector<VertexSet> adj_;
};

struct DimacsResult {
  Graph graph;
  std::vector<std::string> warnings;
};

/// DIMACS edge format: "p edge n m" header, "e u v" lines (1-based),
/// "c" comment lines. Duplicate edges are deduplicated with a warning.
DimacsResult parse_dimacs(const std::string& text);

/// Emits a generator comment, the header, then edges sorted by (u,v),
/// 1-based. parse_dimacs(write_dimacs(g)).graph == g.
std::string write_dimacs(const Graph& g);

}  // namespace pcm
