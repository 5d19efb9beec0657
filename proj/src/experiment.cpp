// Copyright 2026 The sncqa-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sncqa/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sncqa/decompose.hpp"
#include "sncqa/error.hpp"
#include "sncqa/io.hpp"
#include "sncqa/sectors.hpp"

namespace sncqa {

using nlohmann::json;

namespace {

// Object reader that remembers which keys were consumed, so leftovers can be
// reported as unknown.
class Section {
 public:
  Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return doc_.contains(key) && !doc_.at(key).is_null(); }

  const json* get(const std::string& key) {
    seen_.insert(key);
    if (!doc_.contains(key)) return nullptr;
    return &doc_.at(key);
  }

  std::optional<Section> section(const std::string& key) {
    const json* v = get(key);
    if (!v || v->is_null()) return std::nullopt;
    return Section(*v, where(key));
  }

  template <class T>
  void read_int(const std::string& key, T& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return;
    if (!v->is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
    if (v->is_number_unsigned()) {
      out = static_cast<T>(v->get<std::uint64_t>());
    } else {
      const auto i = v->get<std::int64_t>();
      if (std::is_unsigned_v<T> && i < 0) throw ConfigError(where(key) + ": must be non-negative");
      out = static_cast<T>(i);
    }
  }

  template <class T>
  void read_opt_int(const std::string& key, std::optional<T>& out) {
    const json* v = get(key);
    if (!v) return;
    if (v->is_null()) {
      out.reset();
      return;
    }
    T tmp{};
    seen_.erase(key);
    read_int(key, tmp);
    out = tmp;
  }

  void read_double(const std::string& key, double& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return;
    if (!v->is_number()) throw ConfigError(where(key) + ": expected a number");
    out = v->get<double>();
    if (!std::isfinite(out)) throw ConfigError(where(key) + ": must be finite");
  }

  void read_bool(const std::string& key, bool& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return;
    if (!v->is_boolean()) throw ConfigError(where(key) + ": expected a boolean");
    out = v->get<bool>();
  }

  void read_string(const std::string& key, std::string& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return;
    if (!v->is_string()) throw ConfigError(where(key) + ": expected a string");
    out = v->get<std::string>();
  }

  bool read_u64_list(const std::string& key, std::vector<std::uint64_t>& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return false;
    if (!v->is_array()) throw ConfigError(where(key) + ": expected an array");
    std::vector<std::uint64_t> tmp;
    for (const auto& e : *v) {
      if (!e.is_number_unsigned()) throw ConfigError(where(key) + ": expected non-negative integers");
      tmp.push_back(e.get<std::uint64_t>());
    }
    if (tmp.empty()) throw ConfigError(where(key) + ": must not be empty");
    out = std::move(tmp);
    return true;
  }

  bool read_string_list(const std::string& key, std::vector<std::string>& out) {
    const json* v = get(key);
    if (!v || v->is_null()) return false;
    if (!v->is_array()) throw ConfigError(where(key) + ": expected an array");
    std::vector<std::string> tmp;
    for (const auto& e : *v) {
      if (!e.is_string()) throw ConfigError(where(key) + ": expected strings");
      tmp.push_back(e.get<std::string>());
    }
    out = std::move(tmp);
    return true;
  }

  void finish() const {
    for (const auto& [key, value] : doc_.items()) {
      if (!seen_.count(key)) throw ConfigError(where(key) + ": unknown key");
    }
  }

  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& doc_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

template <class F>
auto enum_from(const std::string& path, const std::string& value, F&& parse) {
  try {
    return parse(value);
  } catch (const InvalidArgument&) {
    throw ConfigError(path + ": unknown value '" + value + "'");
  }
}

std::string convention_name(Convention c) { return c == Convention::Pauli ? "pauli" : "spin"; }

Convention convention_from_name(const std::string& name) {
  if (name == "pauli") return Convention::Pauli;
  if (name == "spin") return Convention::Spin;
  throw InvalidArgument("unknown convention: " + name);
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json optimizer_to_json(const OptimizerConfig& o) {
  return json{{"optimizer", optimizer_name(o.kind)},
              {"learning_rate", o.learning_rate},
              {"max_iters", o.max_iters},
              {"epsilon", o.epsilon},
              {"init_scale", o.init_scale},
              {"grad_mode", grad_mode_name(o.grad_mode)},
              {"shots", o.shots ? json(*o.shots) : json(nullptr)},
              {"stop_at_convergence", o.stop_at_convergence}};
}

std::string lattice_label(const LatticeSpec& s) { return std::to_string(s.rows) + "x" + std::to_string(s.cols); }

std::filesystem::path output_root(const ExperimentConfig& config, const CommandOptions& options) {
  return options.out_dir.value_or(config.output_directory);
}

void write_json_file(CommandResult& result, const std::filesystem::path& path, const json& doc) {
  write_file_atomic(path, doc.dump(2) + "\n");
  result.files.push_back(path);
}

void write_text_file(CommandResult& result, const std::filesystem::path& path, const std::string& text) {
  write_file_atomic(path, text);
  result.files.push_back(path);
}

BenchmarkCase case_from_config(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds) {
  BenchmarkCase c;
  c.name = ansatz_name(config.ansatz.type) + "_" + lattice_label(config.lattice);
  c.lattice = config.lattice;
  c.j1 = config.j1;
  c.j2 = config.j2();
  c.convention = config.convention;
  c.ansatz = config.ansatz;
  c.optimizer = config.optimizer;
  c.seeds = seeds;
  return c;
}

json case_summary_json(const CaseSummary& s) {
  json runs = json::array();
  for (const auto& r : s.runs) {
    json run{{"seed", r.seed}, {"yjm_sample", r.yjm_sample}};
    if (r.record) {
      run["converged_at"] = optional_json(r.record->converged_at);
      run["iterations"] = static_cast<int>(r.record->trace.size()) - 1;
      run["final_energy"] = r.record->final_energy();
      run["final_error"] = r.record->final_error();
    }
    if (!r.error.empty()) run["error"] = r.error;
    runs.push_back(std::move(run));
  }
  json out{{"name", s.spec.name},
           {"lattice", lattice_label(s.spec.lattice)},
           {"j1", s.spec.j1},
           {"j2", s.spec.j2},
           {"ansatz", ansatz_name(s.spec.ansatz.type)},
           {"layers", s.spec.ansatz.layers},
           {"yjm_sample_count", optional_json(s.spec.ansatz.yjm_sample_count)},
           {"param_count", s.param_count},
           {"reference_params", optional_json(s.spec.reference_params)},
           {"reference_iterations", optional_json(s.spec.reference_iterations)},
           {"exact_energy", s.exact_energy},
           {"epsilon", s.spec.optimizer.epsilon},
           {"loose_epsilon", s.spec.loose_epsilon ? json(*s.spec.loose_epsilon) : json(nullptr)},
           {"optimizer", optimizer_to_json(s.spec.optimizer)},
           {"seeds", s.spec.seeds},
           {"converged_runs", s.converged_runs},
           {"best_converged", optional_json(s.best_converged)},
           {"median_converged", optional_json(s.median_converged)},
           {"best_loose_converged", optional_json(s.best_loose_converged)},
           {"best_final_error", s.best_final_error},
           {"median_final_error", s.median_final_error},
           {"runs", std::move(runs)}};
  if (!s.error.empty()) out["error"] = s.error;
  return out;
}

void check_case(const CaseSummary& s) {
  if (!s.error.empty()) throw Error(s.spec.name + ": " + s.error);
  for (const auto& r : s.runs) {
    if (!r.error.empty()) throw Error(s.spec.name + " seed " + std::to_string(r.seed) + ": " + r.error);
  }
}

// Writes per-seed JSON/CSV for a finished case under dir.
void write_case_runs(CommandResult& result, const ExperimentConfig& config, const CaseSummary& s,
                     const std::filesystem::path& dir) {
  json cfg = config_to_json(config);
  for (const auto& r : s.runs) {
    if (!r.record) continue;
    const std::string stem = "seed" + std::to_string(r.seed);
    if (config.write_json) {
      json doc{{"case", s.spec.name},
               {"config", cfg},
               {"seed", r.seed},
               {"yjm_sample", r.yjm_sample},
               {"record", run_record_to_json(*r.record)}};
      doc["config"]["optimizer"]["seeds"] = s.spec.seeds;
      doc["config"]["optimizer"]["grad_mode"] = grad_mode_name(s.spec.optimizer.grad_mode);
      doc["config"]["optimizer"]["stop_at_convergence"] = s.spec.optimizer.stop_at_convergence;
      doc["config"]["noise"]["shots"] = s.spec.optimizer.shots ? json(*s.spec.optimizer.shots) : json(nullptr);
      write_json_file(result, dir / (stem + ".json"), doc);
    }
    if (config.write_csv) write_text_file(result, dir / (stem + ".csv"), trace_csv(*r.record));
  }
}

int resolve_workers(const ExperimentConfig& config, const CommandOptions& options) {
  return std::max(1, options.workers.value_or(config.workers));
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  ExperimentConfig c;
  Section root(doc, "");

  if (auto s = root.section("lattice")) {
    s->read_int("rows", c.lattice.rows);
    s->read_int("cols", c.lattice.cols);
    std::string boundary = "open";
    s->read_string("boundary", boundary);
    require(boundary == "open", s->where("boundary") + ": only 'open' is supported");
    s->finish();
  }
  require(c.lattice.rows >= 1 && c.lattice.cols >= 1, "lattice: rows and cols must be positive");
  const int n = c.lattice.rows * c.lattice.cols;
  require(n >= 2, "lattice: need at least two sites");
  require(n <= kMaxExactQubits, "lattice: at most " + std::to_string(kMaxExactQubits) + " sites");

  if (auto s = root.section("hamiltonian")) {
    s->read_double("j1", c.j1);
    s->read_double("j2_over_j1", c.j2_over_j1);
    std::string conv = convention_name(c.convention);
    s->read_string("convention", conv);
    c.convention = enum_from(s->where("convention"), conv, convention_from_name);
    s->finish();
  }

  if (auto s = root.section("ansatz")) {
    std::string type = ansatz_name(c.ansatz.type);
    s->read_string("type", type);
    c.ansatz.type = enum_from(s->where("type"), type, ansatz_from_name);
    s->read_int("layers", c.ansatz.layers);
    s->read_opt_int("yjm_sample_count", c.ansatz.yjm_sample_count);
    s->read_int("trotter_slices", c.ansatz.trotter_slices);
    s->read_bool("share_orbit_params", c.ansatz.share_orbit_params);
    s->read_double("init_total_spin", c.ansatz.init_total_spin);
    s->read_opt_int("yjm_seed", c.ansatz.yjm_seed);
    s->finish();
  }
  require(c.ansatz.layers >= 1, "ansatz.layers: must be at least 1");
  require(c.ansatz.trotter_slices >= 1, "ansatz.trotter_slices: must be at least 1");
  if (c.ansatz.type == AnsatzType::SnCQA) {
    if (!c.ansatz.yjm_sample_count) c.ansatz.yjm_sample_count = n - 1;
    require(*c.ansatz.yjm_sample_count >= 1 && *c.ansatz.yjm_sample_count <= n - 1,
            "ansatz.yjm_sample_count: must lie in [1, " + std::to_string(n - 1) + "]");
  }
  {
    const double two_s = 2.0 * c.ansatz.init_total_spin;
    require(two_s >= 0 && two_s <= n && two_s == std::floor(two_s) && (n - static_cast<int>(two_s)) % 2 == 0,
            "ansatz.init_total_spin: not a valid total spin for " + std::to_string(n) + " sites");
  }

  bool grad_mode_given = false;
  if (auto s = root.section("optimizer")) {
    std::string kind = optimizer_name(c.optimizer.kind);
    s->read_string("optimizer", kind);
    c.optimizer.kind = enum_from(s->where("optimizer"), kind, optimizer_from_name);
    s->read_double("learning_rate", c.optimizer.learning_rate);
    s->read_int("max_iters", c.optimizer.max_iters);
    s->read_double("epsilon", c.optimizer.epsilon);
    s->read_double("init_scale", c.optimizer.init_scale);
    s->read_u64_list("seeds", c.seeds);
    if (s->has("grad_mode")) {
      std::string mode;
      s->read_string("grad_mode", mode);
      c.optimizer.grad_mode = enum_from(s->where("grad_mode"), mode, grad_mode_from_name);
      grad_mode_given = true;
    } else {
      s->get("grad_mode");
    }
    s->read_bool("stop_at_convergence", c.optimizer.stop_at_convergence);
    s->finish();
  }
  require(c.optimizer.learning_rate > 0, "optimizer.learning_rate: must be positive");
  require(c.optimizer.epsilon > 0, "optimizer.epsilon: must be positive");
  require(c.optimizer.max_iters >= 0, "optimizer.max_iters: must be non-negative");
  require(c.optimizer.init_scale >= 0, "optimizer.init_scale: must be non-negative");

  if (auto s = root.section("noise")) {
    std::optional<std::uint64_t> shots;
    s->read_opt_int("shots", shots);
    c.optimizer.shots = shots;
    s->read_u64_list("shots_list", c.shots_list);
    s->finish();
  }
  if (c.optimizer.shots) {
    require(*c.optimizer.shots >= 1, "noise.shots: must be at least 1");
    require(!grad_mode_given || c.optimizer.grad_mode == GradMode::ParameterShift,
            "optimizer.grad_mode: shots require parameter_shift");
    c.optimizer.grad_mode = GradMode::ParameterShift;
  }
  for (auto s : c.shots_list) require(s >= 1, "noise.shots_list: entries must be at least 1");

  if (auto s = root.section("output")) {
    std::string dir = c.output_directory.string();
    s->read_string("directory", dir);
    require(!dir.empty(), "output.directory: must not be empty");
    c.output_directory = dir;
    std::vector<std::string> formats;
    if (s->read_string_list("formats", formats)) {
      require(!formats.empty(), "output.formats: must not be empty");
      c.write_json = c.write_csv = false;
      for (const auto& f : formats) {
        if (f == "json") {
          c.write_json = true;
        } else if (f == "csv") {
          c.write_csv = true;
        } else {
          throw ConfigError("output.formats: unknown format '" + f + "'");
        }
      }
    }
    s->finish();
  }

  if (auto s = root.section("execution")) {
    s->read_int("workers", c.workers);
    s->finish();
  }
  require(c.workers >= 1, "execution.workers: must be at least 1");

  root.finish();
  return c;
}

ExperimentConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return parse_config_text(text);
}

json config_to_json(const ExperimentConfig& c) {
  json formats = json::array();
  if (c.write_json) formats.push_back("json");
  if (c.write_csv) formats.push_back("csv");
  json opt = optimizer_to_json(c.optimizer);
  opt.erase("shots");
  opt["seeds"] = c.seeds;
  return json{
      {"lattice", {{"rows", c.lattice.rows}, {"cols", c.lattice.cols}, {"boundary", "open"}}},
      {"hamiltonian", {{"j1", c.j1}, {"j2_over_j1", c.j2_over_j1}, {"convention", convention_name(c.convention)}}},
      {"ansatz",
       {{"type", ansatz_name(c.ansatz.type)},
        {"layers", c.ansatz.layers},
        {"yjm_sample_count", optional_json(c.ansatz.yjm_sample_count)},
        {"trotter_slices", c.ansatz.trotter_slices},
        {"share_orbit_params", c.ansatz.share_orbit_params},
        {"init_total_spin", c.ansatz.init_total_spin},
        {"yjm_seed", c.ansatz.yjm_seed ? json(*c.ansatz.yjm_seed) : json(nullptr)}}},
      {"optimizer", std::move(opt)},
      {"noise", {{"shots", c.optimizer.shots ? json(*c.optimizer.shots) : json(nullptr)}, {"shots_list", c.shots_list}}},
      {"output", {{"directory", c.output_directory.string()}, {"formats", std::move(formats)}}},
      {"execution", {{"workers", c.workers}}}};
}

json run_record_to_json(const RunRecord& r) {
  json it = json::array(), en = json::array(), gn = json::array();
  for (const auto& p : r.trace) {
    it.push_back(p.iteration);
    en.push_back(p.energy);
    gn.push_back(p.grad_norm);
  }
  return json{{"seed", r.config.seed},
              {"optimizer", optimizer_to_json(r.config)},
              {"param_count", r.param_count},
              {"exact_energy", r.exact_energy},
              {"converged_at", optional_json(r.converged_at)},
              {"iterations", static_cast<int>(r.trace.size()) - 1},
              {"final_energy", r.final_energy()},
              {"final_error", r.final_error()},
              {"final_params", r.final_params},
              {"trace", {{"iteration", std::move(it)}, {"energy", std::move(en)}, {"grad_norm", std::move(gn)}}}};
}

std::string trace_csv(const RunRecord& r) {
  CsvTable t({"iteration", "energy", "grad_norm"});
  for (const auto& p : r.trace) t.add_row({std::to_string(p.iteration), format_double(p.energy), format_double(p.grad_norm)});
  return t.str();
}

CommandResult cmd_exact(const ExperimentConfig& config, const CommandOptions& options) {
  const Lattice lattice(config.lattice);
  const auto h = build_hamiltonian(lattice, config.j1, config.j2(), config.convention);
  const auto gt = exact_ground_energy(h);
  const int n = lattice.num_sites();
  const int weight = n / 2 - static_cast<int>(std::lround(gt.sz_sector));
  CommandResult result;
  result.summary = json{{"command", "exact"},
                        {"lattice", lattice_label(config.lattice)},
                        {"num_sites", n},
                        {"j1", config.j1},
                        {"j2", config.j2()},
                        {"convention", convention_name(config.convention)},
                        {"energy", gt.energy},
                        {"sz_sector", gt.sz_sector},
                        {"sector_dimension", sector_basis(n, weight).size()},
                        {"method", gt.method == EigenMethod::Dense ? "dense" : "lanczos"}};
  if (config.write_json) write_json_file(result, output_root(config, options) / "exact.json", result.summary);
  return result;
}

CommandResult cmd_vqe(const ExperimentConfig& config, const CommandOptions& options) {
  const auto bench = case_from_config(config, options.seeds.value_or(config.seeds));
  validate(bench.optimizer);
  const auto summary = run_case(bench, resolve_workers(config, options));
  check_case(summary);
  CommandResult result;
  const auto dir = output_root(config, options) / bench.name;
  write_case_runs(result, config, summary, dir);
  result.summary = case_summary_json(summary);
  result.summary["command"] = "vqe";
  write_json_file(result, dir / "summary.json", result.summary);
  if (options.require_converged && summary.converged_runs == 0) result.status = CommandStatus::NotConverged;
  return result;
}

CommandResult cmd_benchmark(const ExperimentConfig& config, const CommandOptions& options) {
  std::vector<BenchmarkCase> cases;
  if (options.suite == "unfrustrated") {
    cases = unfrustrated_suite();
  } else if (options.suite == "frustrated") {
    cases = frustrated_suite();
  } else if (options.suite == "noise") {
    cases = noise_suite(config.shots_list);
  } else {
    throw ConfigError("unknown suite '" + options.suite + "' (unfrustrated, frustrated, noise)");
  }
  for (auto& c : cases) {
    c.optimizer.kind = config.optimizer.kind;
    c.optimizer.learning_rate = config.optimizer.learning_rate;
    c.optimizer.max_iters = config.optimizer.max_iters;
    c.optimizer.epsilon = config.optimizer.epsilon;
    c.optimizer.init_scale = config.optimizer.init_scale;
    if (options.seeds) c.seeds = *options.seeds;
  }
  const auto summaries = benchmark_suite(cases, resolve_workers(config, options));

  CommandResult result;
  const auto root = output_root(config, options);
  const auto dir = root / ("benchmark_" + options.suite);
  CsvTable table({"case", "lattice", "ansatz", "layers", "yjm_sample_count", "params", "reference_params",
                  "exact_energy", "seeds", "converged_runs", "best_iter", "median_iter", "reference_iter",
                  "best_loose_iter", "best_final_error", "median_final_error"});
  auto opt_cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  json cases_json = json::array();
  bool all_converged = true;
  for (const auto& s : summaries) {
    check_case(s);
    table.add_row({s.spec.name, lattice_label(s.spec.lattice), ansatz_name(s.spec.ansatz.type),
                   std::to_string(s.spec.ansatz.layers), opt_cell(s.spec.ansatz.yjm_sample_count),
                   std::to_string(s.param_count), opt_cell(s.spec.reference_params), format_double(s.exact_energy),
                   std::to_string(s.spec.seeds.size()), std::to_string(s.converged_runs), opt_cell(s.best_converged),
                   opt_cell(s.median_converged), opt_cell(s.spec.reference_iterations),
                   opt_cell(s.best_loose_converged), format_double(s.best_final_error),
                   format_double(s.median_final_error)});
    if (config.write_csv) {
      for (const auto& r : s.runs) {
        if (r.record) {
          write_text_file(result, dir / (s.spec.name + "_seed" + std::to_string(r.seed) + ".csv"), trace_csv(*r.record));
        }
      }
    }
    all_converged = all_converged && s.converged_runs > 0;
    cases_json.push_back(case_summary_json(s));
  }
  write_text_file(result, root / ("benchmark_" + options.suite + ".csv"), table.str());
  result.summary = json{{"command", "benchmark"}, {"suite", options.suite}, {"cases", std::move(cases_json)}};
  write_json_file(result, root / ("benchmark_" + options.suite + ".json"), result.summary);
  if (options.require_converged && !all_converged) result.status = CommandStatus::NotConverged;
  return result;
}

CommandResult cmd_scaling(const CommandOptions& options) {
  if (options.n_max < 4 || options.n_max > 100) throw ConfigError("n_max must lie in [4, 100]");
  CsvTable table({"n", "dim_spin0", "dim_max", "k_max", "ratio", "schur_weyl"});
  bool all_ok = true;
  json rows = json::array();
  for (int n = 4; n <= options.n_max; n += 2) {
    const auto r = scaling_ratio(n);
    int kmax = 0;
    const auto dmax = max_two_row_dim(n, &kmax);
    const bool ok = schur_weyl_check(n);
    all_ok = all_ok && ok;
    table.add_row({std::to_string(n), r.denominator.str(), dmax.str(), std::to_string(kmax), format_double(r.value),
                   ok ? "true" : "false"});
    rows.push_back(json{{"n", n}, {"dim_spin0", r.denominator.str()}, {"dim_max", dmax.str()}, {"k_max", kmax},
                        {"ratio", r.value}});
  }
  CommandResult result;
  const auto root = options.out_dir.value_or("results");
  write_text_file(result, root / "scaling.csv", table.str());
  result.summary = json{{"command", "scaling"}, {"n_max", options.n_max}, {"schur_weyl_all", all_ok}, {"rows", rows}};
  return result;
}

std::vector<LatticeSpec> resource_lattices() {
  return {{2, 2, Boundary::Open}, {2, 3, Boundary::Open}, {2, 4, Boundary::Open}, {3, 4, Boundary::Open},
          {4, 4, Boundary::Open}};
}

CommandResult cmd_resources(const ExperimentConfig& config, const CommandOptions& options) {
  std::vector<std::string> header{"ansatz", "lattice", "n", "p", "m", "params", "eswap", "two_qubit", "total", "depth"};
  for (auto g : primitive_gate_set()) header.push_back(gate_name(g));
  CsvTable table(header);
  const int p = config.ansatz.layers;
  std::vector<double> ns, eswaps, depths;
  for (const auto& spec : resource_lattices()) {
    const Lattice lattice(spec);
    const int n = lattice.num_sites();
    for (auto type : {AnsatzType::SnCQA, AnsatzType::PHEA}) {
      AnsatzSpec a;
      a.type = type;
      a.layers = p;
      a.trotter_slices = config.ansatz.trotter_slices;
      if (type == AnsatzType::SnCQA) a.yjm_sample_count = n - 1;
      const auto circuit = build_ansatz(lattice, a, 0);
      const auto rc = count_resources(circuit);
      std::vector<std::string> row{ansatz_name(type),
                                   lattice_label(spec),
                                   std::to_string(n),
                                   std::to_string(p),
                                   type == AnsatzType::SnCQA ? std::to_string(n - 1) : std::string(),
                                   std::to_string(circuit.param_count()),
                                   std::to_string(rc.eswap_count),
                                   std::to_string(rc.two_qubit),
                                   std::to_string(rc.total),
                                   std::to_string(rc.depth)};
      for (auto g : primitive_gate_set()) row.push_back(std::to_string(rc.per_gate.at(g)));
      table.add_row(std::move(row));
      if (type == AnsatzType::SnCQA) {
        ns.push_back(n);
        eswaps.push_back(static_cast<double>(rc.eswap_count) / p);
        depths.push_back(static_cast<double>(rc.depth) / p);
      }
    }
  }
  const auto fit = fit_power_law(ns, eswaps);
  const auto dfit = fit_power_law(ns, depths);
  CommandResult result;
  const auto root = output_root(config, options);
  if (config.write_csv) write_text_file(result, root / "resources.csv", table.str());
  result.summary = json{{"command", "resources"},
                        {"layers", p},
                        {"eswap_fit", {{"coefficient", fit.coefficient}, {"exponent", fit.exponent}}},
                        {"depth_fit", {{"coefficient", dfit.coefficient}, {"exponent", dfit.exponent}}}};
  if (config.write_json) write_json_file(result, root / "resources.json", result.summary);
  return result;
}

CommandResult cmd_noise(const ExperimentConfig& config, const CommandOptions& options) {
  if (config.shots_list.empty()) throw ConfigError("noise.shots_list: must not be empty");
  CommandResult result;
  const auto root = output_root(config, options) / "noise";
  const auto seeds = options.seeds.value_or(config.seeds);
  json per_shot = json::array();
  bool all_converged = true;
  for (auto shots : config.shots_list) {
    auto bench = case_from_config(config, seeds);
    bench.name += "_shots" + std::to_string(shots);
    bench.optimizer.shots = shots;
    bench.optimizer.grad_mode = GradMode::ParameterShift;
    bench.optimizer.stop_at_convergence = false;
    validate(bench.optimizer);
    const auto s = run_case(bench, resolve_workers(config, options));
    check_case(s);
    write_case_runs(result, config, s, root / bench.name);
    auto js = case_summary_json(s);
    js["shots"] = shots;
    per_shot.push_back(std::move(js));
    all_converged = all_converged && s.converged_runs > 0;
  }
  bool monotone = true;
  for (std::size_t i = 1; i < per_shot.size(); ++i) {
    monotone = monotone && per_shot[i]["median_final_error"].get<double>() <=
                               per_shot[i - 1]["median_final_error"].get<double>();
  }
  result.summary = json{{"command", "noise"}, {"median_error_non_increasing", monotone}, {"cases", std::move(per_shot)}};
  write_json_file(result, root / "summary.json", result.summary);
  if (options.require_converged && !all_converged) result.status = CommandStatus::NotConverged;
  return result;
}

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("power-law fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw InvalidArgument("power-law fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw InvalidArgument("power-law fit needs distinct x values");
  const double alpha = (k * sxy - sx * sy) / denom;
  return {std::exp((sy - alpha * sx) / k), alpha};
}

}  // namespace sncqa
