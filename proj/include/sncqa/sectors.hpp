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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sncqa {

using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(int n, int k);

/// Dimension of the S_n irrep for the two-row partition (n - k, k), i.e. the
/// multiplicity of total spin S = n/2 - k: C(n, k) - C(n, k - 1).
BigCount irrep_dim(int n, int k);

/// sum_k (n - 2k + 1) * irrep_dim(n, k) == 2^n, in exact arithmetic.
bool schur_weyl_check(int n);

struct ScalingRatio {
  BigCount numerator;    // 2^n
  BigCount denominator;  // spin-0 sector dimension
  double value = 0.0;
};

/// 2^n over the total-spin-0 sector dimension; n even, 4 <= n <= 100.
ScalingRatio scaling_ratio(int n);

/// Largest two-row dimension max_k irrep_dim(n, k), with its k.
BigCount max_two_row_dim(int n, int* argmax_k = nullptr);

/// Counts eigenvalues S(S+1) of S^2 restricted to the S_z = S sector by dense
/// diagonalization. n <= 10.
int brute_force_sector_dim(int n, double total_spin);

}  // namespace sncqa
