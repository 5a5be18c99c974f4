#include "pcm/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pcm/kernels.hpp"

namespace pcm {

double pair_distance(const Correspondence& a, const Correspondence& b) {
  const double dx = (a.x.x() - b.x.x()) - (a.y.x() - b.y.x());
  const double dy = (a.x.y() - b.x.y()) - (a.y.y() - b.y.y());
  const double dz = (a.x.z() - b.x.z()) - (a.y.z() - b.y.z());
  return std::sqrt(((dx * dx) + (dy * dy)) + (dz * dz));
}

namespace {

Graph threshold_graph(const CorrespondenceSet& c, bool consistent) {
  if (!c.has_epsilon()) {
    throw std::invalid_argument("epsilon is not set on the correspondence set");
  }
  const std::size_t n = c.size();
  // Coordinate-of-array layout feeding the row kernel.
  std::vector<double> xx(n), xy(n), xz(n), yx(n), yy(n), yz(n);
  for (std::size_t i = 0; i < n; ++i) {
    xx[i] = c.items[i].x.x();
    xy[i] = c.items[i].x.y();
    xz[i] = c.items[i].x.z();
    yx[i] = c.items[i].y.x();
    yy[i] = c.items[i].y.y();
    yz[i] = c.items[i].y.z();
  }
  const double eps2 = c.epsilon * c.epsilon;
  const std::size_t nwords = (n + 63) / 64;
  std::vector<std::uint64_t> row(nwords);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    kernels::consistency_row(xx.data(), xy.data(), xz.data(), yx.data(),
                             yy.data(), yz.data(), n, i, eps2, row.data());
    row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));  // drop the self pair
    for (std::size_t w = 0; w < nwords; ++w) {
      std::uint64_t bits = consistent ? row[w] : ~row[w];
      if (w == nwords - 1 && (n & 63) != 0) {
        bits &= (std::uint64_t{1} << (n & 63)) - 1;
      }
      if (!consistent) {
        bits &= ~((w == (i >> 6)) ? (std::uint64_t{1} << (i & 63)) : 0);
      }
      while (bits) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (j > i) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::build(n, edges);
}

}  // namespace

Graph build_consistency_graph(const CorrespondenceSet& c) {
  return threshold_graph(c, true);
}

Graph build_inconsistency_graph(const CorrespondenceSet& c) {
  return threshold_graph(c, false);
}

double default_epsilon(const std::vector<Eigen::Vector3d>& x_cloud,
                       const std::vector<Eigen::Vector3d>& y_cloud) {
  auto nn_sum = [](const std::vector<Eigen::Vector3d>& cloud) {
    if (cloud.size() < 2) {
      throw std::invalid_argument(
          "default_epsilon needs at least 2 points per cloud");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < cloud.size(); ++j) {
        if (i == j) continue;
        best = std::min(best, (cloud[i] - cloud[j]).squaredNorm());
      }
      sum += std::sqrt(best);
    }
    return sum;
  };
  const double total = nn_sum(x_cloud) + nn_sum(y_cloud);
  const double mean =
      total / static_cast<double>(x_cloud.size() + y_cloud.size());
  return 2.0 * mean;
}

double outlier_ratio(const CorrespondenceSet& c, const RigidTransform& t_gt) {
  if (!c.has_epsilon()) {
    throw std::invalid_argument("epsilon is not set on the correspondence set");
  }
  if (c.items.empty()) return 0.0;
  const double half = c.epsilon / 2.0;
  std::size_t outliers = 0;
  for (const auto& item : c.items) {
    if ((t_gt.apply(item.x) - item.y).norm() > half) ++outliers;
  }
  return static_cast<double>(outliers) / static_cast<double>(c.items.size());
}

CorrespondenceSet best_by_score(const CorrespondenceSet& c, std::size_t n) {
  CorrespondenceSet out;
  out.epsilon = c.epsilon;
  std::vector<std::size_t> idx(c.items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = c.items[a].score;
    const auto& sb = c.items[b].score;
    if (sa.has_value() != sb.has_value()) return sa.has_value();
    if (!sa) return false;
    return *sa < *sb;
  });
  const std::size_t keep = std::min(n, idx.size());
  out.items.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.items.push_back(c.items[idx[i]]);
  return out;
}

CorrespondenceSet parse_correspondences(const std::string& text) {
  CorrespondenceSet out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Correspondence c;
    if (!(ls >> c.x.x())) continue;  // blank or comment-only line
    double score;
    if (!(ls >> c.x.y() >> c.x.z() >> c.y.x() >> c.y.y() >> c.y.z())) {
      throw ParseError(lineno, "expected 6 or 7 numbers");
    }
    if (ls >> score) c.score = score;
    if (!c.x.allFinite() || !c.y.allFinite()) {
      throw ParseError(lineno, "non-finite coordinate");
    }
    out.items.push_back(c);
  }
  return out;
}

std::string write_correspondences(const CorrespondenceSet& c) {
  std::ostringstream out;
  out.precision(17);
  out << "# x1 x2 x3 y1 y2 y3 [score]\n";
  for (const auto& item : c.items) {
    out << item.x.x() << " " << item.x.y() << " " << item.x.z() << " "
        << item.y.x() << " " << item.y.y() << " " << item.y.z();
    if (item.score) out << " " << *item.score;
    out << "\n";
  }
  return out.str();
}

std::vector<Eigen::Vector3d> parse_point_cloud(const std::string& text) {
  std::vector<Eigen::Vector3d> cloud;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Eigen::Vector3d p;
    if (!(ls >> p.x())) continue;
    if (!(ls >> p.y() >> p.z())) throw ParseError(lineno, "expected 3 numbers");
    cloud.push_back(p);
  }
  return cloud;
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

CorrespondenceSet load_correspondence_file(const std::string& path) {
  return parse_correspondences(slurp(path));
}

std::vector<Eigen::Vector3d> load_point_cloud_file(const std::string& path) {
  return parse_point_cloud(slurp(path));
}

void normalize_to_cube(std::vector<Eigen::Vector3d>& x_cloud,
                       std::vector<Eigen::Vector3d>& y_cloud,
                       double half_extent) {
  auto center = [](std::vector<Eigen::Vector3d>& cloud) {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : cloud) mean += p;
    if (!cloud.empty()) mean /= static_cast<double>(cloud.size());
    for (auto& p : cloud) p -= mean;
  };
  center(x_cloud);
  center(y_cloud);
  double max_abs = 0.0;
  for (const auto& p : x_cloud) max_abs = std::max(max_abs, p.cwiseAbs().maxCoeff());
  for (const auto& p : y_cloud) max_abs = std::max(max_abs, p.cwiseAbs().maxCoeff());
  if (max_abs == 0.0) return;
  const double scale = half_extent / max_abs;
  for (auto& p : x_cloud) p *= scale;
  for (auto& p : y_cloud) p *= scale;
}

}  // namespace pcm
