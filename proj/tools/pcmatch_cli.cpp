// pcmatch: consistency-graph matching and exact maximum-clique toolkit.
//
// Subcommands: solve, register, bench, gen, export-mip, build-graph.
// Exit codes: 0 ok, 2 timeout, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcm/mip_export.hpp"
#include "pcm/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTimeout = 2;
constexpr int kExitInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

pcm::Graph load_graph(const std::string& path) {
  pcm::DimacsResult parsed = pcm::parse_dimacs(slurp(path));
  for (const auto& w : parsed.warnings) {
    std::cerr << "warning: " << path << ": " << w << "\n";
  }
  return std::move(parsed.graph);
}

struct SolveArgs {
  std::string graph_file;
  std::string algorithm = "pmc";
  double timeout = 0.0;
  bool trace = false;
  bool as_json = false;
};

int cmd_solve(const SolveArgs& args) {
  pcm::Graph g = load_graph(args.graph_file);
  pcm::SolveOptions opts;
  if (args.timeout > 0.0) opts.timeout_secs = args.timeout;
  pcm::SolveTrace trace;
  if (args.trace) opts.trace = &trace;
  pcm::SolveResult result =
      pcm::run_solver(pcm::parse_algorithm(args.algorithm), g, opts);
  if (args.trace) std::cerr << pcm::format_trace(trace);
  if (args.as_json) {
    std::ostringstream members;
    // reuse the register JSON helpers through a tiny inline object
    members << "{\n  \"size\": " << result.size << ",\n  \"members\": [";
    for (std::size_t i = 0; i < result.members.size(); ++i) {
      members << (i ? "," : "") << result.members[i] + 1;
    }
    members << "],\n  \"nodes_expanded\": " << result.nodes_expanded
            << ",\n  \"colour_prunes\": " << result.colour_prunes
            << ",\n  \"skip_prunes\": " << result.skip_prunes
            << ",\n  \"wall_time\": " << result.wall_time
            << ",\n  \"complete\": " << (result.complete ? "true" : "false")
            << "\n}\n";
    std::cout << members.str();
  } else {
    std::cout << "size " << result.size << "\nmembers";
    for (int v : result.members) std::cout << " " << v + 1;
    std::cout << "\nnodes_expanded " << result.nodes_expanded
              << "\ncolour_prunes " << result.colour_prunes
              << "\nskip_prunes " << result.skip_prunes << "\nwall_time "
              << result.wall_time << "\ncomplete "
              << (result.complete ? "yes" : "no") << "\n";
  }
  return result.complete ? kExitOk : kExitTimeout;
}

struct RegisterArgs {
  std::string corr_file;
  std::string epsilon = "auto";
  std::string cloud_x, cloud_y;
  std::string algorithm = "pmc";
  std::string gt_file;
  std::string output;
  double timeout = 0.0;
};

int cmd_register(const RegisterArgs& args) {
  pcm::CorrespondenceSet set = pcm::load_correspondence_file(args.corr_file);
  if (args.epsilon == "auto") {
    if (args.cloud_x.empty() || args.cloud_y.empty()) {
      throw std::invalid_argument(
          "--epsilon auto requires --cloud-x and --cloud-y");
    }
    auto x = pcm::load_point_cloud_file(args.cloud_x);
    auto y = pcm::load_point_cloud_file(args.cloud_y);
    pcm::normalize_to_cube(x, y);
    set.epsilon = pcm::default_epsilon(x, y);
  } else {
    set.epsilon = std::stod(args.epsilon);
  }
  std::optional<pcm::RigidTransform> gt;
  if (!args.gt_file.empty()) {
    gt = pcm::parse_transform_text(slurp(args.gt_file));
  }
  pcm::RegisterReport report = pcm::run_register(
      set, pcm::parse_algorithm(args.algorithm), args.timeout, gt);
  const std::string text = pcm::register_report_json(report);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    spill(args.output, text);
  }
  return report.solve.complete ? kExitOk : kExitTimeout;
}

struct BenchArgs {
  std::string config_file;
  std::string output = "bench";
  bool verbose = false;
};

int cmd_bench(const BenchArgs& args) {
  pcm::BenchConfig cfg = pcm::parse_bench_config(slurp(args.config_file));
  pcm::BenchReport report = pcm::run_bench(cfg, args.verbose);
  spill(args.output + ".csv", pcm::bench_csv(report));
  spill(args.output + ".json", pcm::bench_json(report));
  std::cout << pcm::bench_csv(report);
  return kExitOk;
}

struct GenArgs {
  std::size_t inliers = 20;
  std::size_t outliers = 980;
  double sigma = 0.0;
  double epsilon = 8.0;
  double cube = 50.0;
  std::uint64_t seed = 0;
  std::string output = "instance";
};

int cmd_gen(const GenArgs& args) {
  pcm::SynthConfig cfg;
  cfg.n_inliers = args.inliers;
  cfg.n_outliers = args.outliers;
  cfg.noise_sigma = args.sigma;
  cfg.epsilon = args.epsilon;
  cfg.cube_half_extent = args.cube;
  cfg.rng_seed = args.seed;
  auto [set, gt] = pcm::generate_instance(cfg);
  spill(args.output + ".corr", pcm::write_correspondences(set));
  spill(args.output + ".gt", pcm::write_transform_text(gt));
  std::cout << "wrote " << args.output << ".corr (" << set.size()
            << " correspondences, epsilon " << set.epsilon << ") and "
            << args.output << ".gt\n";
  return kExitOk;
}

struct ExportArgs {
  std::string graph_file;
  std::string kind = "mc";
  std::string output;
};

int cmd_export_mip(const ExportArgs& args) {
  pcm::Graph g = load_graph(args.graph_file);
  std::string lp;
  if (args.kind == "mc") {
    lp = pcm::export_mc(g);
  } else if (args.kind == "mvc") {
    lp = pcm::export_mvc(g);
  } else {
    throw std::invalid_argument("kind must be mc or mvc");
  }
  if (args.output.empty()) {
    std::cout << lp;
  } else {
    spill(args.output, lp);
  }
  return kExitOk;
}

struct BuildGraphArgs {
  std::string corr_file;
  double epsilon = 0.0;
  std::string output;
};

int cmd_build_graph(const BuildGraphArgs& args) {
  pcm::CorrespondenceSet set = pcm::load_correspondence_file(args.corr_file);
  set.epsilon = args.epsilon;
  pcm::Graph g = pcm::build_consistency_graph(set);
  const std::string text = pcm::write_dimacs(g);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    spill(args.output, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consistency-graph matching and exact maximum clique"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve MC on a DIMACS graph");
  solve->add_option("graph", solve_args.graph_file, "DIMACS edge file")
      ->required();
  solve->add_option("--algorithm", solve_args.algorithm, "basic|mcq|pmc");
  solve->add_option("--timeout-secs", solve_args.timeout, "wall budget");
  solve->add_flag("--trace", solve_args.trace, "emit search trace to stderr");
  solve->add_flag("--json", solve_args.as_json, "JSON output");

  RegisterArgs reg_args;
  auto* reg = app.add_subcommand("register",
                                 "solve matching and estimate the alignment");
  reg->add_option("correspondences", reg_args.corr_file)->required();
  reg->add_option("--epsilon", reg_args.epsilon, "threshold or 'auto'");
  reg->add_option("--cloud-x", reg_args.cloud_x, "point cloud X (for auto)");
  reg->add_option("--cloud-y", reg_args.cloud_y, "point cloud Y (for auto)");
  reg->add_option("--algorithm", reg_args.algorithm, "basic|mcq|pmc");
  reg->add_option("--gt", reg_args.gt_file, "ground-truth transform file");
  reg->add_option("--timeout-secs", reg_args.timeout);
  reg->add_option("--output", reg_args.output, "JSON report path");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run a benchmark config");
  bench->add_option("config", bench_args.config_file)->required();
  bench->add_option("--output", bench_args.output, "output prefix");
  bench->add_flag("--verbose", bench_args.verbose);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--inliers", gen_args.inliers);
  gen->add_option("--outliers", gen_args.outliers);
  gen->add_option("--sigma", gen_args.sigma, "inlier noise sigma");
  gen->add_option("--epsilon", gen_args.epsilon);
  gen->add_option("--cube", gen_args.cube, "cube half extent");
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--output", gen_args.output, "output prefix");

  ExportArgs export_args;
  auto* exp = app.add_subcommand("export-mip", "emit the MC/MVC MIP as LP");
  exp->add_option("graph", export_args.graph_file)->required();
  exp->add_option("--kind", export_args.kind, "mc|mvc");
  exp->add_option("--output", export_args.output);

  BuildGraphArgs build_args;
  auto* build = app.add_subcommand("build-graph",
                                   "consistency graph from correspondences");
  build->add_option("correspondences", build_args.corr_file)->required();
  build->add_option("--epsilon", build_args.epsilon)->required();
  build->add_option("--output", build_args.output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*reg) return cmd_register(reg_args);
    if (*bench) return cmd_bench(bench_args);
    if (*gen) return cmd_gen(gen_args);
    if (*exp) return cmd_export_mip(export_args);
    if (*build) return cmd_build_graph(build_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
