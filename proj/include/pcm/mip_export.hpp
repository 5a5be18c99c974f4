#pragma once

#include <string>

#include "pcm/graph.hpp"

namespace pcm {

/// Maximum-clique MIP in LP text format: maximise sum of binaries x_i,
/// one constraint x_i + x_j <= 1 per non-edge pair (i < j). Byte-stable
/// for a given graph (constraints in sorted pair order, 1-based names).
std::string export_mc(const Graph& g);

/// Minimum-vertex-cover MIP: minimise sum of binaries subject to
/// x_i + x_j >= 1 per edge.
std::string export_mvc(const Graph& g);

}  // namespace pcm
