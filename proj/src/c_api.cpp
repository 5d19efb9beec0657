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

#include "sncqa/sncqa.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>
#include <vector>

#include "sncqa/error.hpp"
#include "sncqa/experiment.hpp"
#include "sncqa/hamiltonian.hpp"
#include "sncqa/sectors.hpp"

struct sncqa_config {
  sncqa::ExperimentConfig config;
  std::string json;
};

struct sncqa_result {
  sncqa::CommandResult result;
  std::string summary;
  std::vector<std::string> files;
};

namespace {

thread_local std::string g_last_error;

sncqa_status fail(sncqa_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
sncqa_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sncqa::ConfigError& e) {
    return fail(SNCQA_ERR_CONFIG, e.what());
  } catch (const sncqa::CapacityError& e) {
    return fail(SNCQA_ERR_CAPACITY, e.what());
  } catch (const sncqa::InvalidArgument& e) {
    return fail(SNCQA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sncqa::DimensionMismatch& e) {
    return fail(SNCQA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(SNCQA_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SNCQA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SNCQA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SNCQA_ERR_INTERNAL, "unknown error");
  }
}

sncqa_status wrap_config(sncqa::ExperimentConfig cfg, sncqa_config** out) {
  auto* h = new sncqa_config{std::move(cfg), {}};
  h->json = sncqa::config_to_json(h->config).dump(2);
  *out = h;
  return SNCQA_OK;
}

}  // namespace

extern "C" {

const char* sncqa_version(void) { return "0.1.0"; }

const char* sncqa_last_error(void) { return g_last_error.c_str(); }

const char* sncqa_status_string(sncqa_status status) {
  switch (status) {
    case SNCQA_OK: return "ok";
    case SNCQA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SNCQA_ERR_CONFIG: return "configuration error";
    case SNCQA_ERR_CAPACITY: return "problem too large";
    case SNCQA_ERR_IO: return "i/o error";
    case SNCQA_ERR_INTERNAL: return "internal error";
    case SNCQA_NOT_CONVERGED: return "not converged";
  }
  return "unknown status";
}

sncqa_status sncqa_config_default(sncqa_config** out) {
  if (!out) return fail(SNCQA_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] { return wrap_config(sncqa::parse_config_text("{}"), out); });
}

sncqa_status sncqa_config_from_json(const char* text, sncqa_config** out) {
  if (!text || !out) return fail(SNCQA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap_config(sncqa::parse_config_text(text), out); });
}

sncqa_status sncqa_config_from_file(const char* path, sncqa_config** out) {
  if (!path || !out) return fail(SNCQA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap_config(sncqa::load_config(path), out); });
}

void sncqa_config_free(sncqa_config* config) { delete config; }

const char* sncqa_config_json(const sncqa_config* config) { return config ? config->json.c_str() : ""; }

void sncqa_run_options_init(sncqa_run_options* options) {
  if (options) *options = sncqa_run_options{nullptr, nullptr, 0, 0, 0, nullptr, 0};
}

sncqa_status sncqa_run(const sncqa_config* config, const char* command, const sncqa_run_options* options,
                       sncqa_result** out) {
  if (!config || !command || !out) return fail(SNCQA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    sncqa::CommandOptions opts;
    if (options) {
      if (options->out_dir) opts.out_dir = options->out_dir;
      if (options->seeds) {
        if (options->num_seeds == 0) throw sncqa::ConfigError("seed list is empty");
        opts.seeds = std::vector<std::uint64_t>(options->seeds, options->seeds + options->num_seeds);
      }
      opts.require_converged = options->require_converged != 0;
      if (options->n_max) opts.n_max = options->n_max;
      if (options->suite) opts.suite = options->suite;
      if (options->workers) opts.workers = options->workers;
    }
    const std::string cmd = command;
    sncqa::CommandResult r;
    if (cmd == "exact") {
      r = sncqa::cmd_exact(config->config, opts);
    } else if (cmd == "vqe") {
      r = sncqa::cmd_vqe(config->config, opts);
    } else if (cmd == "benchmark") {
      r = sncqa::cmd_benchmark(config->config, opts);
    } else if (cmd == "scaling") {
      if (!opts.out_dir) opts.out_dir = config->config.output_directory;
      r = sncqa::cmd_scaling(opts);
    } else if (cmd == "resources") {
      r = sncqa::cmd_resources(config->config, opts);
    } else if (cmd == "noise") {
      r = sncqa::cmd_noise(config->config, opts);
    } else {
      throw sncqa::InvalidArgument("unknown command: " + cmd);
    }
    auto* h = new sncqa_result{std::move(r), {}, {}};
    h->summary = h->result.summary.dump(2);
    for (const auto& f : h->result.files) h->files.push_back(f.string());
    *out = h;
    return h->result.status == sncqa::CommandStatus::NotConverged ? SNCQA_NOT_CONVERGED : SNCQA_OK;
  });
}

const char* sncqa_result_summary(const sncqa_result* result) { return result ? result->summary.c_str() : ""; }

size_t sncqa_result_file_count(const sncqa_result* result) { return result ? result->files.size() : 0; }

const char* sncqa_result_file(const sncqa_result* result, size_t index) {
  if (!result || index >= result->files.size()) return nullptr;
  return result->files[index].c_str();
}

int sncqa_result_converged(const sncqa_result* result) {
  return result && result->result.status == sncqa::CommandStatus::Ok ? 1 : 0;
}

void sncqa_result_free(sncqa_result* result) { delete result; }

sncqa_status sncqa_exact_energy(int rows, int cols, double j1, double j2, double* energy) {
  if (!energy) return fail(SNCQA_ERR_INVALID_ARGUMENT, "energy is null");
  return guarded([&] {
    const sncqa::Lattice lattice(rows, cols);
    *energy = sncqa::exact_ground_energy(sncqa::build_hamiltonian(lattice, j1, j2)).energy;
    return SNCQA_OK;
  });
}

sncqa_status sncqa_irrep_dim(int n, int k, char* buffer, size_t len, size_t* needed) {
  return guarded([&] {
    const std::string s = sncqa::irrep_dim(n, k).str();
    if (needed) *needed = s.size();
    if (buffer && len > 0) {
      const std::size_t m = std::min(len - 1, s.size());
      std::memcpy(buffer, s.data(), m);
      buffer[m] = '\0';
    }
    return SNCQA_OK;
  });
}

}  // extern "C"
