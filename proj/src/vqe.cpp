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

#include "sncqa/vqe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "sncqa/error.hpp"
#include "sncqa/gradient.hpp"
#include "sncqa/rng.hpp"

namespace sncqa {

std::string grad_mode_name(GradMode mode) { return mode == GradMode::Adjoint ? "adjoint" : "parameter_shift"; }

GradMode grad_mode_from_name(const std::string& name) {
  if (name == "adjoint") return GradMode::Adjoint;
  if (name == "parameter_shift") return GradMode::ParameterShift;
  throw InvalidArgument("unknown gradient mode: " + name);
}

std::string optimizer_name(OptimizerKind kind) { return kind == OptimizerKind::Adam ? "adam" : "gd"; }

OptimizerKind optimizer_from_name(const std::string& name) {
  if (name == "gd") return OptimizerKind::GradientDescent;
  if (name == "adam") return OptimizerKind::Adam;
  throw InvalidArgument("unknown optimizer: " + name);
}

void validate(const OptimizerConfig& opt) {
  if (!(opt.learning_rate > 0.0)) throw InvalidArgument("learning_rate must be positive");
  if (!(opt.epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (opt.max_iters < 0) throw InvalidArgument("max_iters must be non-negative");
  if (opt.init_scale < 0.0) throw InvalidArgument("init_scale must be non-negative");
  if (opt.shots && opt.grad_mode != GradMode::ParameterShift) {
    throw InvalidArgument("shot-noise gradients require grad_mode parameter_shift");
  }
  if (opt.shots && *opt.shots < 1) throw InvalidArgument("shots must be at least 1");
}

std::vector<double> initial_parameters(int count, double scale, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<double> p(count);
  for (auto& x : p) x = rng.uniform(-scale, scale);
  return p;
}

RunRecord vqe_run(const HeisenbergHamiltonian& h, const ParamCircuit& circuit, const StateVector& init,
                  double exact_energy, const OptimizerConfig& opt) {
  validate(opt);
  if (circuit.param_count() < 1) throw InvalidArgument("VQE needs a circuit with at least one parameter");
  RunRecord rec;
  rec.config = opt;
  rec.exact_energy = exact_energy;
  rec.param_count = circuit.param_count();

  auto params = initial_parameters(circuit.param_count(), opt.init_scale, opt.seed);
  RngStream noise(opt.seed, 2);
  std::vector<double> grad;
  // Adam moments; bias-corrected with beta1 = 0.9, beta2 = 0.999.
  std::vector<double> m1(params.size(), 0.0), m2(params.size(), 0.0);
  double b1t = 1.0, b2t = 1.0;
  for (int it = 0;; ++it) {
    double energy = 0.0;
    if (opt.grad_mode == GradMode::Adjoint) {
      auto eg = adjoint_gradient(circuit, params, h, init);
      energy = eg.energy;
      grad = std::move(eg.gradient);
    } else {
      energy = expectation(h, circuit.run(init, params));
      grad = opt.shots ? parameter_shift_gradient(circuit, params, h, init, *opt.shots, noise)
                       : parameter_shift_gradient(circuit, params, h, init);
    }
    double gn = 0.0;
    for (double g : grad) gn += g * g;
    rec.trace.push_back({it, energy, std::sqrt(gn)});
    if (!rec.converged_at && energy - exact_energy <= opt.epsilon) rec.converged_at = it;
    if ((rec.converged_at && opt.stop_at_convergence) || it >= opt.max_iters) break;
    if (opt.kind == OptimizerKind::GradientDescent) {
      for (std::size_t k = 0; k < params.size(); ++k) params[k] -= opt.learning_rate * grad[k];
    } else {
      b1t *= 0.9;
      b2t *= 0.999;
      for (std::size_t k = 0; k < params.size(); ++k) {
        m1[k] = 0.9 * m1[k] + 0.1 * grad[k];
        m2[k] = 0.999 * m2[k] + 0.001 * grad[k] * grad[k];
        const double mhat = m1[k] / (1.0 - b1t);
        const double vhat = m2[k] / (1.0 - b2t);
        params[k] -= opt.learning_rate * mhat / (std::sqrt(vhat) + 1e-8);
      }
    }
  }
  rec.final_params = std::move(params);
  return rec;
}

std::optional<int> convergence_iteration(const RunRecord& record, double epsilon) {
  for (const auto& p : record.trace) {
    if (p.energy - record.exact_energy <= epsilon) return p.iteration;
  }
  return std::nullopt;
}

int lower_median(std::vector<int> values) {
  if (values.empty()) throw InvalidArgument("median of an empty set");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

namespace {

template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

double cached_exact_energy(const HeisenbergHamiltonian& h, const LatticeSpec& spec, double j1, double j2) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double, double, int>, double> cache;
  const auto key = std::make_tuple(spec.rows, spec.cols, j1, j2, static_cast<int>(h.convention));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double e = exact_ground_energy(h).energy;
  std::lock_guard lock(mu);
  cache.emplace(key, e);
  return e;
}

}  // namespace

CaseSummary run_case(const BenchmarkCase& bench, int workers) {
  CaseSummary out;
  out.spec = bench;
  try {
    const Lattice lattice(bench.lattice);
    const auto h = build_hamiltonian(lattice, bench.j1, bench.j2, bench.convention);
    out.exact_energy = cached_exact_energy(h, bench.lattice, bench.j1, bench.j2);
    out.param_count = expected_param_count(lattice, bench.ansatz);
    const auto init = prepare_sector_init(lattice, bench.ansatz.init_total_spin);

    out.runs.resize(bench.seeds.size());
    parallel_for(bench.seeds.size(), workers, [&](std::size_t i) {
      RunOutcome& run = out.runs[i];
      run.seed = bench.seeds[i];
      try {
        const auto circuit = build_ansatz(lattice, bench.ansatz, run.seed);
        if (bench.ansatz.type == AnsatzType::SnCQA) {
          run.yjm_sample = sample_yjm_indices(lattice.num_sites(),
                                              bench.ansatz.yjm_sample_count.value_or(lattice.num_sites() - 1),
                                              bench.ansatz.yjm_seed.value_or(run.seed));
        }
        OptimizerConfig opt = bench.optimizer;
        opt.seed = run.seed;
        run.record = vqe_run(h, circuit, init, out.exact_energy, opt);
      } catch (const std::exception& e) {
        run.error = e.what();
      }
    });
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }

  std::vector<int> conv, loose;
  std::vector<double> finals;
  for (const auto& run : out.runs) {
    if (!run.record) continue;
    finals.push_back(run.record->final_error());
    if (auto c = convergence_iteration(*run.record, bench.optimizer.epsilon)) conv.push_back(*c);
    if (bench.loose_epsilon) {
      if (auto c = convergence_iteration(*run.record, *bench.loose_epsilon)) loose.push_back(*c);
    }
  }
  out.converged_runs = static_cast<int>(conv.size());
  if (!conv.empty()) {
    out.best_converged = *std::min_element(conv.begin(), conv.end());
    out.median_converged = lower_median(conv);
  }
  if (!loose.empty()) out.best_loose_converged = *std::min_element(loose.begin(), loose.end());
  if (!finals.empty()) {
    out.best_final_error = *std::min_element(finals.begin(), finals.end());
    out.median_final_error = median(finals);
  }
  return out;
}

std::vector<CaseSummary> benchmark_suite(std::span<const BenchmarkCase> cases, int workers) {
  std::vector<CaseSummary> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(run_case(c, workers));
  return out;
}

namespace {

BenchmarkCase make_case(std::string name, int rows, int cols, double j2, AnsatzType type, int layers,
                        std::optional<int> m) {
  BenchmarkCase c;
  c.name = std::move(name);
  c.lattice = LatticeSpec{rows, cols, Boundary::Open};
  c.j1 = 1.0;
  c.j2 = j2;
  c.ansatz.type = type;
  c.ansatz.layers = layers;
  c.ansatz.yjm_sample_count = m;
  return c;
}

}  // namespace

std::vector<BenchmarkCase> unfrustrated_suite() {
  std::vector<BenchmarkCase> s;
  auto add = [&s](BenchmarkCase c, int ref_params, int ref_iters) {
    c.reference_params = ref_params;
    c.reference_iterations = ref_iters;
    s.push_back(std::move(c));
  };
  add(make_case("sncqa_2x2", 2, 2, 0.0, AnsatzType::SnCQA, 1, 3), 5, 16);
  add(make_case("sncqa_2x3", 2, 3, 0.0, AnsatzType::SnCQA, 3, 5), 24, 27);
  add(make_case("sncqa_2x4", 2, 4, 0.0, AnsatzType::SnCQA, 4, 7), 44, 65);
  for (int m : {2, 3, 4}) {
    auto c = make_case("sncqa_3x4_m" + std::to_string(m), 3, 4, 0.0, AnsatzType::SnCQA, 10, m);
    c.loose_epsilon = 0.7;
    c.seeds = {1, 2, 3};
    if (m == 2) c.reference_params = 80;
    c.reference_iterations = 360;
    s.push_back(std::move(c));
  }
  add(make_case("phea_2x2", 2, 2, 0.0, AnsatzType::PHEA, 4, std::nullopt), 48, 33);
  add(make_case("phea_2x3", 2, 3, 0.0, AnsatzType::PHEA, 10, std::nullopt), 180, 55);
  add(make_case("phea_2x4", 2, 4, 0.0, AnsatzType::PHEA, 20, std::nullopt), 480, 219);
  auto big = make_case("phea_3x4", 3, 4, 0.0, AnsatzType::PHEA, 40, std::nullopt);
  big.reference_params = 1440;
  big.seeds = {1, 2, 3};
  s.push_back(std::move(big));
  return s;
}

std::vector<BenchmarkCase> frustrated_suite() {
  std::vector<BenchmarkCase> s;
  auto add = [&s](BenchmarkCase c, int ref_params, int ref_iters) {
    c.reference_params = ref_params;
    c.reference_iterations = ref_iters;
    s.push_back(std::move(c));
  };
  add(make_case("frustrated_sncqa_2x2", 2, 2, 0.5, AnsatzType::SnCQA, 4, 1), 12, 15);
  add(make_case("frustrated_sncqa_2x3", 2, 3, 0.5, AnsatzType::SnCQA, 6, 4), 42, 52);
  add(make_case("frustrated_sncqa_2x4", 2, 4, 0.5, AnsatzType::SnCQA, 6, 4), 48, 56);
  return s;
}

std::vector<BenchmarkCase> noise_suite(std::span<const std::uint64_t> shots_list) {
  std::vector<BenchmarkCase> s;
  for (auto shots : shots_list) {
    auto c = make_case("noise_sncqa_2x2_shots" + std::to_string(shots), 2, 2, 0.0, AnsatzType::SnCQA, 2, 1);
    c.optimizer.grad_mode = GradMode::ParameterShift;
    c.optimizer.shots = shots;
    c.optimizer.stop_at_convergence = false;
    s.push_back(std::move(c));
  }
  return s;
}

}  // namespace sncqa
