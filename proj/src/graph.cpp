#include "pcm/graph.hpp"

#include <sstream>

namespace pcm {

Graph Graph::build(std::size_t n,
                   const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self loop on vertex " + std::to_string(u));
    }
    if (g.adj_[static_cast<std::size_t>(u)].contains(v)) {
      ++g.duplicates_;
      continue;
    }
    g.adj_[static_cast<std::size_t>(u)].insert(v);
    g.adj_[static_cast<std::size_t>(v)].insert(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  g.adj_.assign(n_, VertexSet(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!adj_[u].contains(static_cast<int>(v))) {
        g.adj_[u].insert(static_cast<int>(v));
        g.adj_[v].insert(static_cast<int>(u));
        ++g.m_;
      }
    }
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (int v : adj_[u].to_vector()) {
      if (static_cast<std::size_t>(v) > u) {
        edges.emplace_back(static_cast<int>(u), v);
      }
    }
  }
  return edges;
}

DimacsResult parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, declared_m = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string fmt;
      long long pn = -1, pm = -1;
      if (!(ls >> fmt >> pn >> pm) || fmt != "edge" || pn < 0 || pm < 0) {
        throw ParseError(lineno, "malformed header, expected 'p edge n m'");
      }
      n = static_cast<std::size_t>(pn);
      declared_m = static_cast<std::size_t>(pm);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n ||
          static_cast<std::size_t>(v) > n) {
        throw ParseError(lineno, "vertex out of range");
      }
      if (u == v) throw ParseError(lineno, "self loop");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p edge' header");

  DimacsResult result;
  result.graph = Graph::build(n, edges);
  if (result.graph.duplicate_edges() > 0) {
    result.warnings.push_back(
        std::to_string(result.graph.duplicate_edges()) +
        " duplicate edge(s) deduplicated");
  }
  // The header count must match the edges listed; listing duplicates is
  // tolerated as long as the header accounted for them.
  if (result.graph.num_edges() != declared_m && edges.size() != declared_m) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                 " edges, found " +
                                 std::to_string(result.graph.num_edges()) +
                                 " distinct");
  }
  return result;
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "c generated by pcmatch\n";
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edge_list()) {
    out << "e " << (u + 1) << " " << (v + 1) << "\n";
  }
  return out.str();
}

}  // namespace pcm
