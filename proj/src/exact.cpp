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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "sncqa/error.hpp"
#include "sncqa/hamiltonian.hpp"
#include "sncqa/rng.hpp"

namespace sncqa {

namespace {

struct SparseSector {
  std::vector<double> diag;
  // Off-diagonal entries in CSR form.
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> col;
  std::vector<double> val;
};

SparseSector build_sparse_sector(const HeisenbergHamiltonian& h, std::span<const std::uint64_t> basis) {
  std::vector<std::int32_t> rank(std::size_t{1} << h.num_qubits, -1);
  for (std::size_t i = 0; i < basis.size(); ++i) rank[basis[i]] = static_cast<std::int32_t>(i);
  SparseSector m;
  m.diag.assign(basis.size(), 0.0);
  m.row_start.push_back(0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::uint64_t s = basis[i];
    for (const auto& t : h.terms) {
      const bool ba = (s >> t.edge.a) & 1U;
      const bool bb = (s >> t.edge.b) & 1U;
      if (ba == bb) {
        m.diag[i] += t.coefficient;
      } else {
        // (XX + YY) sends |01> to 2|10>; ZZ contributes -1.
        m.diag[i] -= t.coefficient;
        const std::uint64_t flipped = s ^ ((std::uint64_t{1} << t.edge.a) | (std::uint64_t{1} << t.edge.b));
        m.col.push_back(static_cast<std::uint32_t>(rank[flipped]));
        m.val.push_back(2.0 * t.coefficient);
      }
    }
    m.row_start.push_back(m.col.size());
  }
  return m;
}

}  // namespace

std::vector<std::uint64_t> sector_basis(int num_qubits, int hamming_weight) {
  if (hamming_weight < 0 || hamming_weight > num_qubits) throw InvalidArgument("Hamming weight out of range");
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (std::popcount(s) == hamming_weight) out.push_back(s);
  }
  return out;
}

std::vector<double> sector_matrix(const HeisenbergHamiltonian& h, std::span<const std::uint64_t> basis) {
  const auto sp = build_sparse_sector(h, basis);
  const std::size_t d = basis.size();
  std::vector<double> dense(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    dense[i * d + i] = sp.diag[i];
    for (std::size_t k = sp.row_start[i]; k < sp.row_start[i + 1]; ++k) dense[i * d + sp.col[k]] += sp.val[k];
  }
  return dense;
}

LanczosResult lanczos_lowest(std::size_t dim,
                             const std::function<void(std::span<const double>, std::span<double>)>& matvec,
                             double tol, int max_iters, std::uint64_t seed) {
  if (dim == 0) throw InvalidArgument("Lanczos on an empty space");
  const int steps_cap = static_cast<int>(std::min<std::size_t>(dim, static_cast<std::size_t>(max_iters)));
  std::vector<std::vector<double>> q;
  std::vector<double> alpha, beta;

  RngStream rng(seed);
  std::vector<double> v(dim);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  auto normalize = [](std::vector<double>& x) {
    double s = 0.0;
    for (double y : x) s += y * y;
    s = std::sqrt(s);
    for (double& y : x) y /= s;
    return s;
  };
  normalize(v);
  q.push_back(v);

  LanczosResult result;
  std::vector<double> w(dim);
  for (int j = 0; j < steps_cap; ++j) {
    matvec(q[j], w);
    double a = 0.0;
    for (std::size_t i = 0; i < dim; ++i) a += q[j][i] * w[i];
    alpha.push_back(a);
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] -= a * q[j][i];
      if (j > 0) w[i] -= beta[j - 1] * q[j - 1][i];
    }
    // Two passes of classical Gram-Schmidt against the whole Krylov basis.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qi : q) {
        double c = 0.0;
        for (std::size_t i = 0; i < dim; ++i) c += qi[i] * w[i];
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * qi[i];
      }
    }
    double b = 0.0;
    for (double x : w) b += x * x;
    b = std::sqrt(b);

    const int m = j + 1;
    Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd e(std::max(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i) e[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    result.eigenvalue = tri.eigenvalues()[0];
    result.residual = b * std::abs(tri.eigenvectors()(m - 1, 0));
    result.iterations = m;
    if (result.residual < tol || b < 1e-14) return result;
    beta.push_back(b);
    for (auto& x : w) x /= b;
    q.push_back(w);
  }
  if (static_cast<std::size_t>(steps_cap) < dim) {
    throw Error("Lanczos did not converge in " + std::to_string(max_iters) + " steps (residual " +
                std::to_string(result.residual) + ")");
  }
  return result;
}

double sector_ground_energy(const HeisenbergHamiltonian& h, int hamming_weight, EigenMethod* method_used) {
  const auto basis = sector_basis(h.num_qubits, hamming_weight);
  const std::size_t d = basis.size();
  if (d <= kDenseSectorLimit) {
    if (method_used) *method_used = EigenMethod::Dense;
    const auto dense = sector_matrix(h, basis);
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(dense.data(), d, d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
  }
  if (method_used) *method_used = EigenMethod::Lanczos;
  const auto sp = build_sparse_sector(h, basis);
  auto matvec = [&sp](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      double acc = sp.diag[i] * x[i];
      for (std::size_t k = sp.row_start[i]; k < sp.row_start[i + 1]; ++k) acc += sp.val[k] * x[sp.col[k]];
      y[i] = acc;
    }
  };
  return lanczos_lowest(d, matvec).eigenvalue;
}

GroundTruth exact_ground_energy(const HeisenbergHamiltonian& h) {
  if (h.num_qubits > kMaxExactQubits) {
    throw CapacityError("exact diagonalization is limited to " + std::to_string(kMaxExactQubits) + " sites, got " +
                        std::to_string(h.num_qubits));
  }
  GroundTruth best;
  best.energy = std::numeric_limits<double>::infinity();
  const int n = h.num_qubits;
  for (int w = 0; w <= n; ++w) {
    EigenMethod method{};
    const double e = sector_ground_energy(h, w, &method);
    const double sz = 0.5 * n - w;
    const bool lower = e < best.energy - 1e-9;
    const bool tie = std::abs(e - best.energy) <= 1e-9;
    const bool better_label = std::abs(sz) < std::abs(best.sz_sector) ||
                              (std::abs(sz) == std::abs(best.sz_sector) && sz > best.sz_sector);
    if (lower || (tie && better_label)) {
      // Keep the lowest energy even when the label wins a tie.
      best.energy = lower ? e : std::min(e, best.energy);
      best.sz_sector = sz;
      best.method = method;
    }
  }
  return best;
}

}  // namespace sncqa
