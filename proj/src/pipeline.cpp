#include "pcm/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace pcm {

using nlohmann::json;

Algorithm parse_algorithm(const std::string& name) {
  if (name == "basic") return Algorithm::Basic;
  if (name == "mcq") return Algorithm::Mcq;
  if (name == "pmc") return Algorithm::Pmc;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected basic, mcq or pmc)");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Basic:
      return "basic";
    case Algorithm::Mcq:
      return "mcq";
    case Algorithm::Pmc:
      return "pmc";
  }
  return "?";
}

SolveResult run_solver(Algorithm a, const Graph& g, const SolveOptions& opts) {
  switch (a) {
    case Algorithm::Basic:
      return solve_basic(g, opts);
    case Algorithm::Mcq:
      return solve_mcq(g, opts);
    case Algorithm::Pmc:
      return solve_pmc(g, opts);
  }
  throw std::logic_error("unreachable");
}

RegisterReport run_register(const CorrespondenceSet& c, Algorithm a,
                            double timeout_secs,
                            const std::optional<RigidTransform>& gt) {
  RegisterReport report;
  report.n = c.size();
  report.epsilon = c.epsilon;
  report.algorithm = algorithm_name(a);

  const Graph graph = build_consistency_graph(c);
  SolveOptions opts;
  if (timeout_secs > 0.0) opts.timeout_secs = timeout_secs;
  report.solve = run_solver(a, graph, opts);
  report.clique = report.solve.members;
  report.clique_size = report.solve.size;

  if (report.clique_size >= 3) {
    std::vector<Correspondence> subset;
    subset.reserve(report.clique_size);
    for (int i : report.clique) subset.push_back(c.items[static_cast<std::size_t>(i)]);
    try {
      report.transform = estimate_rigid(subset);
      report.transform_ok = true;
    } catch (const DegeneracyError& e) {
      report.note = std::string("degenerate clique: ") + e.what();
    }
  } else {
    report.note = "insufficient clique for estimation";
  }

  if (gt) {
    report.outlier_ratio = outlier_ratio(c, *gt);
    if (report.transform_ok) {
      report.ang_err_deg = angular_error(report.transform.rotation,
                                         gt->rotation);
      report.tr_err = translation_error(report.transform.translation,
                                        gt->translation);
    }
  }
  return report;
}

namespace {

json transform_to_json(const RigidTransform& t) {
  json numbers = json::array();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) numbers.push_back(t.rotation(r, c));
  }
  for (int r = 0; r < 3; ++r) numbers.push_back(t.translation(r));
  return numbers;  // row-major 3x3 rotation, then translation
}

json solve_to_json(const SolveResult& s) {
  json clique = json::array();
  for (int v : s.members) clique.push_back(v + 1);
  return json{{"size", s.size},
              {"members", clique},
              {"nodes_expanded", s.nodes_expanded},
              {"colour_prunes", s.colour_prunes},
              {"skip_prunes", s.skip_prunes},
              {"wall_time", s.wall_time},
              {"complete", s.complete}};
}

}  // namespace

std::string register_report_json(const RegisterReport& r) {
  json j{{"schema", "pcmatch-register/1"},
         {"n", r.n},
         {"epsilon", r.epsilon},
         {"algorithm", r.algorithm},
         {"solve", solve_to_json(r.solve)},
         {"transform_ok", r.transform_ok}};
  if (r.transform_ok) j["transform"] = transform_to_json(r.transform);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.ang_err_deg) j["ang_err_deg"] = *r.ang_err_deg;
  if (r.tr_err) j["tr_err"] = *r.tr_err;
  if (r.outlier_ratio) j["outlier_ratio"] = *r.outlier_ratio;
  return j.dump(2) + "\n";
}

namespace {

std::map<std::string, std::string> parse_kv(std::istringstream& in,
                                            std::size_t lineno) {
  std::map<std::string, std::string> kv;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(lineno, "expected key=value, got '" + token + "'");
    }
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

double to_double(const std::string& s, std::size_t lineno) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad number '" + s + "'");
  }
}

std::uint64_t to_u64(const std::string& s, std::size_t lineno) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad integer '" + s + "'");
  }
}

}  // namespace

BenchConfig parse_bench_config(const std::string& text) {
  BenchConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool algorithms_set = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "instance") {
      std::string kind;
      if (!(ls >> kind)) throw ParseError(lineno, "instance needs a kind");
      BenchInstance inst;
      auto kv = parse_kv(ls, lineno);
      auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
      };
      if (auto v = take("name")) inst.name = *v;
      if (kind == "synth") {
        inst.synthetic = true;
        if (auto v = take("inliers"))
          inst.synth.n_inliers = to_u64(*v, lineno);
        if (auto v = take("outliers"))
          inst.synth.n_outliers = to_u64(*v, lineno);
        if (auto v = take("sigma")) inst.synth.noise_sigma = to_double(*v, lineno);
        if (auto v = take("epsilon")) inst.synth.epsilon = to_double(*v, lineno);
        if (auto v = take("seed")) inst.synth.rng_seed = to_u64(*v, lineno);
        if (auto v = take("cube")) inst.synth.cube_half_extent = to_double(*v, lineno);
        if (inst.name.empty()) {
          inst.name = "synth-n" +
                      std::to_string(inst.synth.n_inliers +
                                     inst.synth.n_outliers) +
                      "-s" + std::to_string(inst.synth.rng_seed);
        }
      } else if (kind == "file") {
        inst.synthetic = false;
        if (auto v = take("corr")) inst.corr_file = *v;
        if (auto v = take("gt")) inst.gt_file = *v;
        if (auto v = take("epsilon")) inst.epsilon = to_double(*v, lineno);
        if (inst.corr_file.empty()) {
          throw ParseError(lineno, "file instance needs corr=<path>");
        }
        if (inst.name.empty()) inst.name = inst.corr_file;
      } else {
        throw ParseError(lineno, "unknown instance kind '" + kind + "'");
      }
      if (!kv.empty()) {
        throw ParseError(lineno, "unknown key '" + kv.begin()->first + "'");
      }
      cfg.instances.push_back(std::move(inst));
    } else {
      // global "key = value"
      std::string eq, value;
      if (!(ls >> eq >> value) || eq != "=") {
        throw ParseError(lineno, "expected 'key = value'");
      }
      if (head == "timeout") {
        cfg.timeout_secs = to_double(value, lineno);
      } else if (head == "ransac_runs") {
        cfg.ransac_runs = to_u64(value, lineno);
      } else if (head == "confidence") {
        cfg.confidence = to_double(value, lineno);
      } else if (head == "algorithms") {
        cfg.algorithms.clear();
        algorithms_set = true;
        std::string list = value;
        std::string extra;
        while (ls >> extra) list += extra;
        std::stringstream items(list);
        std::string item;
        while (std::getline(items, item, ',')) {
          if (!item.empty()) cfg.algorithms.push_back(parse_algorithm(item));
        }
      } else {
        throw ParseError(lineno, "unknown setting '" + head + "'");
      }
    }
  }
  if (algorithms_set && cfg.algorithms.empty()) {
    throw ParseError(lineno, "algorithms list is empty");
  }
  return cfg;
}

namespace {

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg, bool verbose) {
  BenchReport report;
  for (Algorithm a : cfg.algorithms) {
    report.algorithm_columns.push_back(algorithm_name(a));
  }
  report.ransac_column = cfg.ransac_runs > 0;

  for (const BenchInstance& inst : cfg.instances) {
    BenchRow row;
    row.name = inst.name;
    try {
      CorrespondenceSet set;
      std::optional<RigidTransform> gt;
      if (inst.synthetic) {
        auto [generated, truth] = generate_instance(inst.synth);
        set = std::move(generated);
        gt = truth;
      } else {
        set = load_correspondence_file(inst.corr_file);
        set.epsilon = inst.epsilon;
        if (!inst.gt_file.empty()) {
          gt = parse_transform_text(slurp_file(inst.gt_file));
        }
      }
      row.n = set.size();
      if (gt) row.outlier_ratio = outlier_ratio(set, *gt);

      const Graph cons = build_consistency_graph(set);
      row.vertices = cons.num_vertices();
      row.edges_consistency = cons.num_edges();
      row.edges_inconsistency =
          row.n * (row.n - 1) / 2 - cons.num_edges();

      SolveOptions opts;
      opts.timeout_secs = cfg.timeout_secs;
      std::vector<int> best_clique;
      for (Algorithm a : cfg.algorithms) {
        if (verbose) {
          std::cerr << row.name << ": " << algorithm_name(a) << "...\n";
        }
        SolveResult solved = run_solver(a, cons, opts);
        if (!solved.complete) {
          row.solve_times[algorithm_name(a)] = std::nullopt;  // "--"
          continue;
        }
        row.solve_times[algorithm_name(a)] = solved.wall_time;
        row.clique_sizes[algorithm_name(a)] = solved.size;
        if (!row.clique_size) {
          row.clique_size = solved.size;
          best_clique = solved.members;
        } else if (*row.clique_size != solved.size) {
          row.error = "solvers disagree on clique size";
        }
      }

      if (gt && best_clique.size() >= 3) {
        std::vector<Correspondence> subset;
        for (int i : best_clique) subset.push_back(set.items[static_cast<std::size_t>(i)]);
        try {
          RigidTransform est = estimate_rigid(subset);
          row.ang_err_deg = angular_error(est.rotation, gt->rotation);
          row.tr_err = translation_error(est.translation, gt->translation);
        } catch (const DegeneracyError&) {
          if (row.error.empty()) row.error = "degenerate clique";
        }
      }

      if (cfg.ransac_runs > 0) {
        std::vector<double> times;
        std::vector<std::uint64_t> iters;
        for (std::size_t r = 0; r < cfg.ransac_runs; ++r) {
          RansacConfig rc;
          rc.confidence = cfg.confidence;
          rc.rng_seed = inst.synth.rng_seed + r;
          RansacResult rr = ransac_register(set, rc);
          times.push_back(rr.wall_time);
          iters.push_back(rr.iterations);
        }
        std::sort(times.begin(), times.end());
        std::sort(iters.begin(), iters.end());
        row.ransac_median_time = times[times.size() / 2];
        row.ransac_median_iterations = iters[iters.size() / 2];
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string opt_num(const std::optional<double>& v) {
  if (!v) return "--";
  std::ostringstream out;
  out.precision(10);
  out << *v;
  return out.str();
}

}  // namespace

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,N,outlier_ratio,V,E_consistency,E_inconsistency,I_star,"
         "angErr_deg,trErr";
  for (const auto& a : report.algorithm_columns) out << ",time_" << a;
  if (report.ransac_column) out << ",time_ransac_median,ransac_iterations";
  out << ",error\n";
  for (const BenchRow& row : report.rows) {
    out << row.name << "," << row.n << "," << opt_num(row.outlier_ratio)
        << "," << row.vertices << "," << row.edges_consistency << ","
        << row.edges_inconsistency << ",";
    out << (row.clique_size ? std::to_string(*row.clique_size) : "--");
    out << "," << opt_num(row.ang_err_deg) << "," << opt_num(row.tr_err);
    for (const auto& a : report.algorithm_columns) {
      auto it = row.solve_times.find(a);
      out << ","
          << (it == row.solve_times.end() ? "--" : opt_num(it->second));
    }
    if (report.ransac_column) {
      out << "," << opt_num(row.ransac_median_time) << ",";
      out << (row.ransac_median_iterations
                  ? std::to_string(*row.ransac_median_iterations)
                  : "--");
    }
    out << "," << row.error << "\n";
  }
  return out.str();
}

std::string bench_json(const BenchReport& report) {
  json rows = json::array();
  for (const BenchRow& row : report.rows) {
    json j{{"instance", row.name},
           {"N", row.n},
           {"V", row.vertices},
           {"E_consistency", row.edges_consistency},
           {"E_inconsistency", row.edges_inconsistency}};
    if (row.outlier_ratio) j["outlier_ratio"] = *row.outlier_ratio;
    if (row.clique_size) j["I_star"] = *row.clique_size;
    if (row.ang_err_deg) j["angErr_deg"] = *row.ang_err_deg;
    if (row.tr_err) j["trErr"] = *row.tr_err;
    json times;
    for (const auto& [name, t] : row.solve_times) {
      if (t) {
        times[name] = *t;
      } else {
        times[name] = nullptr;  // timeout
      }
    }
    j["solve_times"] = times;
    json sizes;
    for (const auto& [name, s] : row.clique_sizes) sizes[name] = s;
    j["clique_sizes"] = sizes;
    if (row.ransac_median_time) {
      j["ransac_median_time"] = *row.ransac_median_time;
      j["ransac_median_iterations"] = *row.ransac_median_iterations;
    }
    if (!row.error.empty()) j["error"] = row.error;
    rows.push_back(std::move(j));
  }
  json j{{"schema", "pcmatch-bench/1"}, {"rows", rows}};
  return j.dump(2) + "\n";
}

}  // namespace pcm
