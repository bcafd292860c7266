#include "sfmis/experiments.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sfmis/graph.hpp"
#include "sfmis/mis.hpp"
#include "sfmis/peeling.hpp"
#include "sfmis/plfit.hpp"
#include "sfmis/rng.hpp"
#include "sfmis/svg.hpp"

namespace sfmis {

namespace {

const std::set<std::string> kExperiments = {"generate", "degeneracy", "fit", "mis", "diameter"};
const std::set<std::string> kStrategies = {"luby", "diameter", "two-phase", "alg3", "alg4"};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_beta_label(double x) {  // short form for plot labels only
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string opt_int(long long v) { return v < 0 ? std::string() : std::to_string(v); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

struct Cell {
  int n;
  double beta;
  int trial;
  int ni, bi;
};

std::vector<Cell> make_grid(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  cells.reserve(cfg.ns.size() * cfg.betas.size() * static_cast<std::size_t>(cfg.trials));
  for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni)
    for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi)
      for (int t = 0; t < cfg.trials; ++t)
        cells.push_back({cfg.ns[ni], cfg.betas[bi], t, static_cast<int>(ni), static_cast<int>(bi)});
  return cells;
}

void run_jobs(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int j = 0; j < count; ++j) fn(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      int j = next.fetch_add(1);
      if (j >= count) return;
      try {
        fn(j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int k = std::min(workers, count);
  pool.reserve(k);
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

void prepare_output(const ExperimentConfig& cfg, ExperimentResult& res) {
  if (cfg.output_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir " + cfg.output_dir + ": " + ec.message());
  std::string path = cfg.output_dir + "/config.json";
  // The artifact records the semantic configuration only. Operational knobs
  // (worker count, destination, tracing) do not change any result and would
  // make otherwise identical runs produce different files.
  auto j = nlohmann::json::parse(cfg.to_json());
  j.erase("workers");
  j.erase("strict");
  j.erase("trace");
  j.erase("output_dir");
  write_file(path, j.dump(2) + "\n");
  res.files.push_back(path);
}

void emit(const ExperimentConfig& cfg, ExperimentResult& res, const std::string& name,
          const std::string& content) {
  if (cfg.output_dir.empty()) return;
  std::string path = cfg.output_dir + "/" + name;
  write_file(path, content);
  res.files.push_back(path);
}

MisOutcome run_strategy(const std::string& s, const Graph& g, double beta, std::uint64_t seed,
                        int round_limit, std::ostream* trace) {
  if (s == "luby") return luby_mis(g, seed, round_limit, trace);
  if (s == "diameter") return diameter_mis(g, seed, round_limit, trace);
  if (s == "two-phase") return two_phase_mis(g, seed, round_limit, trace);
  if (s == "alg3") return dispatch_mis(g, beta, seed, Dispatch::diameter_or_luby, round_limit, trace);
  if (s == "alg4")
    return dispatch_mis(g, beta, seed, Dispatch::diameter_or_two_phase, round_limit, trace);
  throw std::invalid_argument("unknown strategy: " + s);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void ExperimentConfig::validate() const {
  if (!kExperiments.count(experiment))
    throw std::invalid_argument("unknown experiment: " + experiment);
  if (ns.empty()) throw std::invalid_argument("n list must be non-empty");
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (betas.empty()) throw std::invalid_argument("beta list must be non-empty");
  for (double b : betas)
    if (!(b > 2.0)) throw std::invalid_argument("beta must be > 2");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be > 0");
  if (round_limit < 0) throw std::invalid_argument("round_limit must be >= 0");
  if (n_bootstrap < 20) throw std::invalid_argument("n_bootstrap must be >= 20");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (strategies.empty()) throw std::invalid_argument("strategy list must be non-empty");
  for (const auto& s : strategies)
    if (!kStrategies.count(s)) throw std::invalid_argument("unknown strategy: " + s);
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  out << "experiment=" << experiment << ";n=";
  for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? "," : "") << ns[i];
  out << ";beta=";
  for (std::size_t i = 0; i < betas.size(); ++i) out << (i ? "," : "") << fmt_double(betas[i]);
  out << ";trials=" << trials << ";seed=" << seed << ";kernel=" << kernel_name(kernel)
      << ";scale=" << fmt_double(scale) << ";strategy=";
  for (std::size_t i = 0; i < strategies.size(); ++i) out << (i ? "," : "") << strategies[i];
  out << ";round_limit=" << round_limit << ";n_bootstrap=" << n_bootstrap
      << ";fit_original_degrees=" << (fit_original_degrees ? 1 : 0);
  return out.str();
}

std::string ExperimentConfig::hash() const {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["n"] = ns;
  j["beta_list"] = betas;
  j["trials"] = trials;
  j["seed"] = seed;
  j["kernel"] = kernel_name(kernel);
  j["scale"] = scale;
  j["strategy"] = strategies;
  j["round_limit"] = round_limit;
  j["n_bootstrap"] = n_bootstrap;
  j["fit_original_degrees"] = fit_original_degrees;
  j["workers"] = workers;
  j["strict"] = strict;
  j["trace"] = trace;
  j["output_dir"] = output_dir;
  j["config_hash"] = hash();
  j["rng"] = kRngAlgorithm;
  return j.dump(2) + "\n";
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  ExperimentConfig cfg;
  // config_hash and rng appear in emitted config files but carry no settings.
  static const std::set<std::string> known = {
      "experiment", "n",         "beta_list",   "trials",  "seed",
      "kernel",     "scale",     "strategy",    "round_limit",
      "n_bootstrap", "fit_original_degrees",    "workers", "strict",
      "trace",      "output_dir", "config_hash", "rng"};
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object())
      throw std::invalid_argument("bad experiment config: expected a JSON object");
    for (const auto& item : j.items()) {
      if (known.count(item.key()) == 0)
        throw std::invalid_argument("bad experiment config: unknown key \"" + item.key() + "\"");
    }
    if (j.contains("experiment")) cfg.experiment = j["experiment"].get<std::string>();
    if (j.contains("n")) {
      if (j["n"].is_array()) cfg.ns = j["n"].get<std::vector<int>>();
      else cfg.ns = {j["n"].get<int>()};
    }
    if (j.contains("beta_list")) cfg.betas = j["beta_list"].get<std::vector<double>>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("kernel")) cfg.kernel = parse_kernel(j["kernel"].get<std::string>());
    if (j.contains("scale")) cfg.scale = j["scale"].get<double>();
    if (j.contains("strategy")) {
      if (j["strategy"].is_array()) cfg.strategies = j["strategy"].get<std::vector<std::string>>();
      else cfg.strategies = {j["strategy"].get<std::string>()};
    }
    if (j.contains("round_limit")) cfg.round_limit = j["round_limit"].get<int>();
    if (j.contains("n_bootstrap")) cfg.n_bootstrap = j["n_bootstrap"].get<int>();
    if (j.contains("fit_original_degrees"))
      cfg.fit_original_degrees = j["fit_original_degrees"].get<bool>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
    if (j.contains("strict")) cfg.strict = j["strict"].get<bool>();
    if (j.contains("trace")) cfg.trace = j["trace"].get<bool>();
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad experiment config: ") + e.what());
  }
  return cfg;
}

std::uint64_t run_seed(const ExperimentConfig& cfg, int n, double beta, int trial) {
  return Rng(cfg.seed)
      .derive(std::bit_cast<std::uint64_t>(beta))
      .derive(static_cast<std::uint64_t>(n))
      .derive(static_cast<std::uint64_t>(trial))
      .next_u64();
}

std::string degeneracy_csv(const std::vector<DegeneracyRow>& rows, const std::string& config_hash) {
  std::ostringstream out;
  out << "config,seed,beta,n,trial,m,degeneracy,modified_degeneracy,arboricity_lower,"
         "arboricity_upper,flag,error\n";
  for (const auto& r : rows) {
    out << config_hash << ',' << r.seed << ',' << fmt_double(r.beta) << ',' << r.n << ','
        << r.trial << ',' << opt_int(r.m) << ',' << opt_int(r.degeneracy) << ','
        << opt_int(r.modified_degeneracy) << ',' << opt_int(r.arboricity_lower) << ','
        << opt_int(r.arboricity_upper) << ',' << csv_escape(r.flag) << ',' << csv_escape(r.error)
        << '\n';
  }
  return out.str();
}

std::string fit_csv(const std::vector<FitRow>& rows, const std::string& config_hash) {
  std::ostringstream out;
  out << "config,seed,beta,n,trial,m,tau,v1_size,status,alpha_hat,xmin,ks_distance,tail_size,"
         "pvalue,flag,error\n";
  for (const auto& r : rows) {
    bool ok = r.status == "ok";
    out << config_hash << ',' << r.seed << ',' << fmt_double(r.beta) << ',' << r.n << ','
        << r.trial << ',' << opt_int(r.m) << ',' << opt_int(r.tau) << ',' << opt_int(r.v1_size)
        << ',' << r.status << ',' << (ok ? fmt_double(r.alpha_hat) : std::string()) << ','
        << (ok ? std::to_string(r.xmin) : std::string()) << ','
        << (ok ? fmt_double(r.ks_distance) : std::string()) << ','
        << (ok ? std::to_string(r.tail_size) : std::string()) << ','
        << (r.pvalue >= 0 ? fmt_double(r.pvalue) : std::string()) << ',' << csv_escape(r.flag)
        << ',' << csv_escape(r.error) << '\n';
  }
  return out.str();
}

std::string mis_csv(const std::vector<MisRow>& rows, const std::string& config_hash) {
  std::ostringstream out;
  out << "config,seed,beta,n,trial,strategy,m,tau,v1_size,mis_size,valid,rounds,messages_sent,"
         "max_message_bytes,halted,phase1_rounds,phase2_rounds,v2_size,largest_comp_diameter,"
         "max_comp_diameter,error\n";
  for (const auto& r : rows) {
    out << config_hash << ',' << r.seed << ',' << fmt_double(r.beta) << ',' << r.n << ','
        << r.trial << ',' << r.strategy << ',' << opt_int(r.m) << ',' << opt_int(r.tau) << ','
        << opt_int(r.v1_size) << ',' << opt_int(r.mis_size) << ',' << r.valid << ','
        << opt_int(r.rounds) << ',' << r.messages_sent << ',' << r.max_message_bytes << ','
        << r.halted << ',' << opt_int(r.phase1_rounds) << ',' << opt_int(r.phase2_rounds) << ','
        << opt_int(r.v2_size) << ',' << opt_int(r.largest_comp_diameter) << ','
        << opt_int(r.max_comp_diameter) << ',' << csv_escape(r.error) << '\n';
  }
  return out.str();
}

std::string diameter_csv(const std::vector<DiameterRow>& rows, const std::string& config_hash) {
  std::ostringstream out;
  out << "config,seed,beta,n,trial,m,component_count,largest_comp_size,largest_comp_diameter,"
         "max_comp_diameter,error\n";
  for (const auto& r : rows) {
    out << config_hash << ',' << r.seed << ',' << fmt_double(r.beta) << ',' << r.n << ','
        << r.trial << ',' << opt_int(r.m) << ',' << opt_int(r.component_count) << ','
        << opt_int(r.largest_comp_size) << ',' << opt_int(r.largest_comp_diameter) << ','
        << opt_int(r.max_comp_diameter) << ',' << csv_escape(r.error) << '\n';
  }
  return out.str();
}

std::string generate_csv(const std::vector<GenerateRow>& rows, const std::string& config_hash) {
  std::ostringstream out;
  out << "config,seed,beta,n,trial,m,max_degree,edges,weights,error\n";
  for (const auto& r : rows) {
    out << config_hash << ',' << r.seed << ',' << fmt_double(r.beta) << ',' << r.n << ','
        << r.trial << ',' << opt_int(r.m) << ',' << opt_int(r.max_degree) << ','
        << csv_escape(r.edges_path) << ',' << csv_escape(r.weights_path) << ','
        << csv_escape(r.error) << '\n';
  }
  return out.str();
}

ExperimentResult run_degeneracy_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult res;
  res.config_hash = cfg.hash();
  prepare_output(cfg, res);

  auto cells = make_grid(cfg);
  std::vector<DegeneracyRow> rows(cells.size());
  run_jobs(static_cast<int>(cells.size()), cfg.workers, [&](int j) {
    const Cell& c = cells[j];
    DegeneracyRow& r = rows[j];
    r.seed = run_seed(cfg, c.n, c.beta, c.trial);
    r.beta = c.beta;
    r.n = c.n;
    r.trial = c.trial;
    if (c.beta < 3.0) r.flag = "beta<3";
    try {
      Graph g = sample_graph({c.n, c.beta, cfg.scale, cfg.kernel, r.seed});
      r.m = static_cast<long long>(g.m);
      WeightSequence w = weight_sequence(c.n, c.beta, cfg.scale);
      r.degeneracy = degeneracy(g).value;
      r.modified_degeneracy = modified_degeneracy(g, w).value;
      if (c.n >= 2) {
        ArboricityBounds ab = arboricity_bounds(g);
        r.arboricity_lower = ab.lower;
        r.arboricity_upper = ab.upper;
      } else {
        r.arboricity_lower = 0;
        r.arboricity_upper = 0;
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  for (const auto& r : rows)
    if (!r.error.empty()) ++res.error_rows;
  emit(cfg, res, "degeneracy.csv", degeneracy_csv(rows, res.config_hash));
  if (!cfg.output_dir.empty()) {
    for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni) {
      for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi) {
        std::vector<double> vals;
        for (const auto& r : rows)
          if (r.n == cfg.ns[ni] && r.beta == cfg.betas[bi] && r.error.empty())
            vals.push_back(r.degeneracy);
        double vline = std::pow(2.0, std::cbrt(std::log2(static_cast<double>(cfg.ns[ni]))));
        std::string title = "degeneracy, n=" + std::to_string(cfg.ns[ni]) +
                            ", beta=" + fmt_beta_label(cfg.betas[bi]);
        emit(cfg, res, "degeneracy_n" + std::to_string(ni) + "_b" + std::to_string(bi) + ".svg",
             svg_histogram(vals, 20, title, vline));
      }
    }
  }
  res.degeneracy_rows = std::move(rows);
  return res;
}

ExperimentResult run_fit_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  for (double b : cfg.betas)
    if (b < 3.0) throw std::invalid_argument("fit experiment needs beta >= 3");
  ExperimentResult res;
  res.config_hash = cfg.hash();
  prepare_output(cfg, res);

  auto cells = make_grid(cfg);
  std::vector<FitRow> rows(cells.size());
  run_jobs(static_cast<int>(cells.size()), cfg.workers, [&](int j) {
    const Cell& c = cells[j];
    FitRow& r = rows[j];
    r.seed = run_seed(cfg, c.n, c.beta, c.trial);
    r.beta = c.beta;
    r.n = c.n;
    r.trial = c.trial;
    if (c.beta == 3.0) r.flag = "beta=3";
    try {
      Graph g = sample_graph({c.n, c.beta, cfg.scale, cfg.kernel, r.seed});
      r.m = static_cast<long long>(g.m);
      r.tau = c.n >= 2 ? degree_threshold(c.n) : 0;
      VertexSet v1;
      for (int v = 0; v < c.n; ++v)
        if (g.degree(v) >= r.tau) v1.push_back(v);
      r.v1_size = static_cast<int>(v1.size());

      std::vector<int> samples;
      if (cfg.fit_original_degrees) {
        samples.reserve(c.n);
        for (int v = 0; v < c.n; ++v) samples.push_back(g.degree(v));
      } else {
        Graph core = induced_subgraph(g, v1).graph;
        samples.reserve(v1.size());
        for (int v = 0; v < core.n(); ++v) samples.push_back(core.degree(v));
      }

      try {
        TailFit fit = fit_discrete_powerlaw(samples);
        r.status = "ok";
        r.alpha_hat = fit.alpha_hat;
        r.xmin = fit.xmin;
        r.ks_distance = fit.ks_distance;
        r.tail_size = fit.tail_size;
        std::uint64_t fit_seed = Rng(r.seed).derive(0xF17).next_u64();
        r.pvalue = gof_pvalue(samples, fit, cfg.n_bootstrap, fit_seed);
      } catch (const InsufficientData&) {
        r.status = "insufficient-data";
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  for (const auto& r : rows)
    if (!r.error.empty()) ++res.error_rows;
  emit(cfg, res, "fit.csv", fit_csv(rows, res.config_hash));
  if (!cfg.output_dir.empty()) {
    for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni) {
      std::vector<std::pair<std::string, std::vector<double>>> groups;
      for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi) {
        std::vector<double> ps;
        for (const auto& r : rows)
          if (r.n == cfg.ns[ni] && r.beta == cfg.betas[bi] && r.status == "ok" && r.pvalue >= 0)
            ps.push_back(r.pvalue);
        groups.emplace_back(fmt_beta_label(cfg.betas[bi]), std::move(ps));
      }
      emit(cfg, res, "fit_pvalues_n" + std::to_string(ni) + ".svg",
           svg_boxplots(groups, "tail-fit p-values, n=" + std::to_string(cfg.ns[ni]), 0.10));
    }
  }
  res.fit_rows = std::move(rows);
  return res;
}

ExperimentResult run_mis_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult res;
  res.config_hash = cfg.hash();
  prepare_output(cfg, res);

  auto cells = make_grid(cfg);
  const int S = static_cast<int>(cfg.strategies.size());
  std::vector<MisRow> rows(cells.size() * S);
  std::vector<std::string> trace_paths(rows.size());
  run_jobs(static_cast<int>(cells.size()), cfg.workers, [&](int j) {
    const Cell& c = cells[j];
    std::uint64_t seed = run_seed(cfg, c.n, c.beta, c.trial);

    Graph g;
    std::string gen_error;
    long long m = -1;
    int tau = -1, v1_size = -1, largest_d = -1, max_d = -1;
    try {
      g = sample_graph({c.n, c.beta, cfg.scale, cfg.kernel, seed});
      m = static_cast<long long>(g.m);
      tau = c.n >= 2 ? degree_threshold(c.n) : 0;
      v1_size = 0;
      for (int v = 0; v < c.n; ++v)
        if (g.degree(v) >= tau) ++v1_size;
      ComponentDiameters cd = component_diameters(g);
      largest_d = cd.largest_component_diameter();
      max_d = cd.max_component_diameter();
    } catch (const std::exception& e) {
      gen_error = e.what();
    }

    for (int k = 0; k < S; ++k) {
      MisRow& r = rows[static_cast<std::size_t>(j) * S + k];
      r.seed = seed;
      r.beta = c.beta;
      r.n = c.n;
      r.trial = c.trial;
      r.strategy = cfg.strategies[k];
      r.m = m;
      r.tau = tau;
      r.v1_size = v1_size;
      r.largest_comp_diameter = largest_d;
      r.max_comp_diameter = max_d;
      if (!gen_error.empty()) {
        r.error = gen_error;
        continue;
      }
      std::uint64_t mis_seed = Rng(seed).derive(0x4D15).next_u64();
      std::ofstream trace_file;
      std::ostream* trace = nullptr;
      if (cfg.trace && !cfg.output_dir.empty()) {
        std::string tpath = cfg.output_dir + "/trace_n" + std::to_string(c.ni) + "_b" +
                            std::to_string(c.bi) + "_t" + std::to_string(c.trial) + "_" +
                            cfg.strategies[k] + ".jsonl";
        trace_file.open(tpath, std::ios::binary);
        if (trace_file) {
          trace = &trace_file;
          trace_paths[static_cast<std::size_t>(j) * S + k] = tpath;
        }
      }
      try {
        MisOutcome out = run_strategy(cfg.strategies[k], g, c.beta, mis_seed, cfg.round_limit, trace);
        r.mis_size = static_cast<long long>(out.mis.size());
        r.valid = is_valid_mis(g, out.mis) ? 1 : 0;
        r.rounds = out.stats.rounds;
        r.messages_sent = out.stats.messages_sent;
        r.max_message_bytes = out.stats.max_message_bytes;
        r.halted = out.stats.halted ? 1 : 0;
        for (const auto& ps : out.phase_stats) {
          if (ps.phase == "phase I") r.phase1_rounds = ps.rounds;
          if (ps.phase == "phase II") {
            r.phase2_rounds = ps.rounds;
            r.v2_size = ps.subgraph_size;
          }
        }
      } catch (const PartialResult& e) {
        r.error = e.what();
        r.mis_size = static_cast<long long>(e.partial.mis.size());
        r.rounds = e.partial.stats.rounds;
        r.messages_sent = e.partial.stats.messages_sent;
        r.max_message_bytes = e.partial.stats.max_message_bytes;
        r.halted = 0;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  });

  for (const auto& r : rows)
    if (!r.error.empty()) ++res.error_rows;
  for (auto& tp : trace_paths)
    if (!tp.empty()) res.files.push_back(std::move(tp));
  emit(cfg, res, "mis.csv", mis_csv(rows, res.config_hash));
  res.mis_rows = std::move(rows);
  return res;
}

ExperimentResult run_diameter_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult res;
  res.config_hash = cfg.hash();
  prepare_output(cfg, res);

  auto cells = make_grid(cfg);
  std::vector<DiameterRow> rows(cells.size());
  run_jobs(static_cast<int>(cells.size()), cfg.workers, [&](int j) {
    const Cell& c = cells[j];
    DiameterRow& r = rows[j];
    r.seed = run_seed(cfg, c.n, c.beta, c.trial);
    r.beta = c.beta;
    r.n = c.n;
    r.trial = c.trial;
    try {
      Graph g = sample_graph({c.n, c.beta, cfg.scale, cfg.kernel, r.seed});
      r.m = static_cast<long long>(g.m);
      ComponentDiameters cd = component_diameters(g);
      r.component_count = static_cast<int>(cd.comp_size.size());
      r.largest_comp_size = cd.largest_component_size();
      r.largest_comp_diameter = cd.largest_component_diameter();
      r.max_comp_diameter = cd.max_component_diameter();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  for (const auto& r : rows)
    if (!r.error.empty()) ++res.error_rows;
  emit(cfg, res, "diameter.csv", diameter_csv(rows, res.config_hash));
  res.diameter_rows = std::move(rows);
  return res;
}

ExperimentResult run_generate(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult res;
  res.config_hash = cfg.hash();
  prepare_output(cfg, res);

  auto cells = make_grid(cfg);
  std::vector<GenerateRow> rows(cells.size());
  run_jobs(static_cast<int>(cells.size()), cfg.workers, [&](int j) {
    const Cell& c = cells[j];
    GenerateRow& r = rows[j];
    r.seed = run_seed(cfg, c.n, c.beta, c.trial);
    r.beta = c.beta;
    r.n = c.n;
    r.trial = c.trial;
    try {
      Graph g = sample_graph({c.n, c.beta, cfg.scale, cfg.kernel, r.seed});
      r.m = static_cast<long long>(g.m);
      r.max_degree = g.n() > 0 ? g.max_degree() : 0;
      if (!cfg.output_dir.empty()) {
        std::string key = "n" + std::to_string(c.n) + "_b" + std::to_string(c.bi) + "_t" +
                          std::to_string(c.trial);
        r.edges_path = "edges_" + key + ".txt";
        r.weights_path = "weights_" + key + ".txt";
        save_edge_list(g, cfg.output_dir + "/" + r.edges_path);
        save_weights(weight_sequence(c.n, c.beta, cfg.scale), cfg.output_dir + "/" + r.weights_path);
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  for (const auto& r : rows)
    if (!r.error.empty()) ++res.error_rows;
  emit(cfg, res, "generate.csv", generate_csv(rows, res.config_hash));
  if (!cfg.output_dir.empty()) {
    for (const auto& r : rows) {
      if (!r.edges_path.empty()) res.files.push_back(cfg.output_dir + "/" + r.edges_path);
      if (!r.weights_path.empty()) res.files.push_back(cfg.output_dir + "/" + r.weights_path);
    }
  }
  res.generate_rows = std::move(rows);
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == "generate") return run_generate(cfg);
  if (cfg.experiment == "degeneracy") return run_degeneracy_experiment(cfg);
  if (cfg.experiment == "fit") return run_fit_experiment(cfg);
  if (cfg.experiment == "mis") return run_mis_experiment(cfg);
  return run_diameter_experiment(cfg);
}

}  // namespace sfmis
