#pragma once

#include <span>
#include <vector>

#include "pcm/graph.hpp"

namespace pcm {

/// Proper vertex colouring of a subset S, stored as the subset reordered
/// ascending by colour (stable) with a parallel colour array. Colours are
/// consecutive 1..k; the last vertex carries the maximum colour.
struct Colouring {
  std::vector<int> order;    // vertices of S, ascending by colour
  std::vector<int> colours;  // colours[i] is the colour of order[i]

  int max_colour() const { return order.empty() ? 0 : colours.back(); }
  bool empty() const { return order.empty(); }
  std::size_t size() const { return order.size(); }
};

/// Sequential greedy colouring: vertices of `seq` are processed in the
/// given order, each receiving the smallest colour unused among its
/// already-coloured neighbours within the subset, then the subset is
/// stably reordered ascending by colour.
Colouring greedy_colour(const Graph& g, std::span<const int> seq);

/// Compresses colours to consecutive 1..k preserving relative order.
/// Idempotent; linear in |S|.
Colouring renumber(const Colouring& f);

}  // namespace pcm
