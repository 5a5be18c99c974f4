#include "pcm/mip_export.hpp"

#include <sstream>

namespace pcm {

namespace {

void emit_objective(std::ostringstream& out, std::size_t n) {
  out << " obj:";
  for (std::size_t i = 1; i <= n; ++i) {
    out << (i == 1 ? " " : " + ") << "x" << i;
  }
  out << "\n";
}

void emit_binaries(std::ostringstream& out, std::size_t n) {
  out << "Binary\n";
  for (std::size_t i = 1; i <= n; ++i) out << " x" << i;
  if (n > 0) out << "\n";
}

}  // namespace

std::string export_mc(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::ostringstream out;
  out << "\\ maximum clique\n";
  out << "Maximize\n";
  emit_objective(out, n);
  out << "Subject To\n";
  std::size_t idx = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
        out << " c" << ++idx << ": x" << (u + 1) << " + x" << (v + 1)
            << " <= 1\n";
      }
    }
  }
  emit_binaries(out, n);
  out << "End\n";
  return out.str();
}

std::string export_mvc(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::ostringstream out;
  out << "\\ minimum vertex cover\n";
  out << "Minimize\n";
  emit_objective(out, n);
  out << "Subject To\n";
  std::size_t idx = 0;
  for (const auto& [u, v] : g.edge_list()) {
    out << " c" << ++idx << ": x" << (u + 1) << " + x" << (v + 1)
        << " >= 1\n";
  }
  emit_binaries(out, n);
  out << "End\n";
  return out.str();
}

}  // namespace pcm
