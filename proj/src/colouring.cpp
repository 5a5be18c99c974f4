#include "pcm/colouring.hpp"

namespace pcm {

Colouring greedy_colour(const Graph& g, std::span<const int> seq) {
  // Colour classes as bitsets: the colour of v is the first class whose
  // members contain no neighbour of v.
  std::vector<VertexSet> classes;
  std::vector<std::vector<int>> members;  // class members in insertion order
  const std::size_t n = g.num_vertices();

  for (int v : seq) {
    const VertexSet& nbrs = g.adjacency(v);
    std::size_t c = 0;
    while (c < classes.size() && classes[c].intersects(nbrs)) ++c;
    if (c == classes.size()) {
      classes.emplace_back(n);
      members.emplace_back();
    }
    classes[c].insert(v);
    members[c].push_back(v);
  }

  Colouring f;
  f.order.reserve(seq.size());
  f.colours.reserve(seq.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (int v : members[c]) {
      f.order.push_back(v);
      f.colours.push_back(static_cast<int>(c) + 1);
    }
  }
  return f;
}

Colouring renumber(const Colouring& f) {
  Colouring out;
  out.order = f.order;
  out.colours.reserve(f.colours.size());
  int next = 0;
  int last_seen = 0;  // colours are sorted ascending, so one pass suffices
  for (int c : f.colours) {
    if (c != last_seen) {
      ++next;
      last_seen = c;
    }
    out.colours.push_back(next);
  }
  return out;
}

}  // namespace pcm
