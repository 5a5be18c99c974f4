#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcm/correspondence.hpp"
#include "pcm/ransac.hpp"
#include "pcm/solvers.hpp"
#include "pcm/synth.hpp"

namespace pcm {

enum class Algorithm { Basic, Mcq, Pmc };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

SolveResult run_solver(Algorithm a, const Graph& g,
                       const SolveOptions& opts = {});

/// End-to-end registration: consistency graph, exact maximum clique,
/// SVD estimate on the clique, errors against ground truth when given.
struct RegisterReport {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::string algorithm;
  std::size_t clique_size = 0;
  std::vector<int> clique;  // 0-based
  SolveResult solve;
  bool transform_ok = false;  // false: clique too small to estimate
  RigidTransform transform;
  std::optional<double> ang_err_deg;
  std::optional<double> tr_err;
  std::optional<double> outlier_ratio;
  std::string note;  // e.g. "insufficient clique for estimation"
};

RegisterReport run_register(const CorrespondenceSet& c, Algorithm a,
                            double timeout_secs = 0.0,
                            const std::optional<RigidTransform>& gt = {});

std::string register_report_json(const RegisterReport& r);

/// Benchmark over a declarative config: global "key = value" lines
/// (timeout, ransac_runs, confidence, algorithms) and one "instance ..."
/// line per cell, either synthetic parameters or input files.
struct BenchInstance {
  std::string name;
  bool synthetic = true;
  SynthConfig synth;
  std::string corr_file;
  std::string gt_file;  // optional sidecar transform
  double epsilon = 0.0;  // file instances
};

struct BenchConfig {
  double timeout_secs = 3600.0;
  std::size_t ransac_runs = 0;
  double confidence = 0.99;
  std::vector<Algorithm> algorithms{Algorithm::Mcq, Algorithm::Pmc};
  std::vector<BenchInstance> instances;
};

BenchConfig parse_bench_config(const std::string& text);

struct BenchRow {
  std::string name;
  std::size_t n = 0;
  std::optional<double> outlier_ratio;
  std::size_t vertices = 0;
  std::size_t edges_consistency = 0;
  std::size_t edges_inconsistency = 0;
  std::optional<std::size_t> clique_size;
  std::optional<double> ang_err_deg;
  std::optional<double> tr_err;
  /// Per-algorithm solve time; nullopt marks a timeout ("--" in the CSV).
  std::map<std::string, std::optional<double>> solve_times;
  std::map<std::string, std::size_t> clique_sizes;
  std::optional<double> ransac_median_time;
  std::optional<std::uint64_t> ransac_median_iterations;
  std::string error;
};

struct BenchReport {
  std::vector<std::string> algorithm_columns;
  bool ransac_column = false;
  std::vector<BenchRow> rows;
};

BenchReport run_bench(const BenchConfig& cfg, bool verbose = false);

std::string bench_csv(const BenchReport& report);
std::string bench_json(const BenchReport& report);

}  // namespace pcm
