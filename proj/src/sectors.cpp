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

#include "sncqa/sectors.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <vector>

#include "sncqa/error.hpp"

namespace sncqa {

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigCount irrep_dim(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) {
    throw InvalidArgument("(" + std::to_string(n - k) + ", " + std::to_string(k) + ") is not a two-row partition");
  }
  return binomial(n, k) - binomial(n, k - 1);
}

bool schur_weyl_check(int n) {
  if (n < 1) throw InvalidArgument("Schur-Weyl check needs n >= 1");
  BigCount sum = 0;
  for (int k = 0; 2 * k <= n; ++k) sum += BigCount(n - 2 * k + 1) * irrep_dim(n, k);
  return sum == (BigCount(1) << n);
}

ScalingRatio scaling_ratio(int n) {
  if (n % 2 != 0) throw InvalidArgument("scaling ratio is defined for even n only");
  if (n < 4 || n > 100) throw InvalidArgument("scaling ratio supports 4 <= n <= 100");
  ScalingRatio r;
  r.numerator = BigCount(1) << n;
  r.denominator = irrep_dim(n, n / 2);
  r.value = r.numerator.convert_to<double>() / r.denominator.convert_to<double>();
  return r;
}

BigCount max_two_row_dim(int n, int* argmax_k) {
  BigCount best = 0;
  int best_k = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    auto d = irrep_dim(n, k);
    if (d > best) {
      best = d;
      best_k = k;
    }
  }
  if (argmax_k) *argmax_k = best_k;
  return best;
}

int brute_force_sector_dim(int n, double total_spin) {
  if (n < 1 || n > 10) throw CapacityError("brute-force sector dimension supports 1 <= n <= 10");
  const double w_real = n / 2.0 - total_spin;
  if (total_spin < 0.0 || w_real < 0.0 || std::floor(w_real) != w_real) {
    throw InvalidArgument("spin " + std::to_string(total_spin) + " has no S_z sector on " + std::to_string(n) +
                          " spins");
  }
  const int weight = static_cast<int>(w_real);
  std::vector<std::uint32_t> basis;
  std::vector<int> rank(1u << n, -1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) == weight) {
      rank[s] = static_cast<int>(basis.size());
      basis.push_back(s);
    }
  }
  const int d = static_cast<int>(basis.size());
  // S^2 = (3n/4 - n(n-1)/4) I + sum_{i<j} SWAP_ij
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Identity(d, d) * (0.75 * n - 0.25 * n * (n - 1));
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::uint32_t s = basis[r];
        const bool bi = (s >> i) & 1U, bj = (s >> j) & 1U;
        const std::uint32_t t = bi == bj ? s : s ^ ((1u << i) | (1u << j));
        s2(rank[t], r) += 1.0;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s2, Eigen::EigenvaluesOnly);
  const double target = total_spin * (total_spin + 1.0);
  int count = 0;
  for (int i = 0; i < d; ++i) {
    if (std::abs(solver.eigenvalues()[i] - target) <= 1e-8) ++count;
  }
  return count;
}

}  // namespace sncqa
