#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfmis/netgen.hpp"

namespace sfmis {

// One experiment invocation: a grid of (n, beta, trial) runs sharing a base
// seed. Every output row carries the config hash and the run's derived seed,
// making each row re-derivable from just those two values.
struct ExperimentConfig {
  std::string experiment = "mis";  // generate | degeneracy | fit | mis | diameter
  std::vector<int> ns = {10000};
  std::vector<double> betas = {3.0, 3.5};
  int trials = 10;
  std::uint64_t seed = 1;
  Kernel kernel = Kernel::product_cap;
  double scale = 1.0;
  std::vector<std::string> strategies = {"luby", "diameter", "two-phase", "alg3", "alg4"};
  int round_limit = 0;       // 0: per-protocol default
  int n_bootstrap = 100;     // fit experiment
  bool fit_original_degrees = false;  // fit the whole graph's degrees instead of
                                      // the high-degree core's internal degrees
  int workers = 1;
  bool strict = false;       // nonzero exit when any error row was produced
  bool trace = false;        // per-run protocol trace files (mis experiment)
  std::string output_dir;    // empty: keep rows in memory, write nothing

  void validate() const;
  std::string canonical() const;  // stable serialization of result-affecting fields
  std::string hash() const;       // 16 hex digits over canonical()
  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
};

std::uint64_t fnv1a64(std::string_view s);

// The seed recorded in a row; regenerating the graph and reruns need nothing
// else besides the config.
std::uint64_t run_seed(const ExperimentConfig& cfg, int n, double beta, int trial);

struct DegeneracyRow {
  std::uint64_t seed = 0;
  double beta = 0;
  int n = 0, trial = 0;
  long long m = -1;
  int degeneracy = -1, modified_degeneracy = -1;
  int arboricity_lower = -1, arboricity_upper = -1;
  std::string flag, error;
};

struct FitRow {
  std::uint64_t seed = 0;
  double beta = 0;
  int n = 0, trial = 0;
  long long m = -1;
  int tau = -1, v1_size = -1;
  std::string status;  // ok | insufficient-data
  double alpha_hat = 0;
  int xmin = -1;
  double ks_distance = 0;
  int tail_size = -1;
  double pvalue = -1;
  std::string flag, error;
};

struct MisRow {
  std::uint64_t seed = 0;
  double beta = 0;
  int n = 0, trial = 0;
  std::string strategy;
  long long m = -1;
  int tau = -1, v1_size = -1;
  long long mis_size = -1;
  int valid = 0;
  int rounds = -1;
  std::uint64_t messages_sent = 0;
  std::uint64_t max_message_bytes = 0;
  int halted = 0;
  int phase1_rounds = -1, phase2_rounds = -1, v2_size = -1;
  int largest_comp_diameter = -1, max_comp_diameter = -1;
  std::string error;
};

struct DiameterRow {
  std::uint64_t seed = 0;
  double beta = 0;
  int n = 0, trial = 0;
  long long m = -1;
  int component_count = -1, largest_comp_size = -1;
  int largest_comp_diameter = -1, max_comp_diameter = -1;
  std::string error;
};

struct GenerateRow {
  std::uint64_t seed = 0;
  double beta = 0;
  int n = 0, trial = 0;
  long long m = -1;
  int max_degree = -1;
  std::string edges_path, weights_path, error;
};

struct ExperimentResult {
  std::string config_hash;
  int error_rows = 0;
  std::vector<std::string> files;  // paths written, in write order
  std::vector<DegeneracyRow> degeneracy_rows;
  std::vector<FitRow> fit_rows;
  std::vector<MisRow> mis_rows;
  std::vector<DiameterRow> diameter_rows;
  std::vector<GenerateRow> generate_rows;
};

ExperimentResult run_degeneracy_experiment(const ExperimentConfig& cfg);
ExperimentResult run_fit_experiment(const ExperimentConfig& cfg);
ExperimentResult run_mis_experiment(const ExperimentConfig& cfg);
ExperimentResult run_diameter_experiment(const ExperimentConfig& cfg);
ExperimentResult run_generate(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);  // by cfg.experiment

// Byte-stable CSV encodings (doubles in %.17g, LF line ends, rows in grid order).
std::string degeneracy_csv(const std::vector<DegeneracyRow>& rows, const std::string& config_hash);
std::string fit_csv(const std::vector<FitRow>& rows, const std::string& config_hash);
std::string mis_csv(const std::vector<MisRow>& rows, const std::string& config_hash);
std::string diameter_csv(const std::vector<DiameterRow>& rows, const std::string& config_hash);
std::string generate_csv(const std::vector<GenerateRow>& rows, const std::string& config_hash);

}  // namespace sfmis
