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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sncqa {

enum class Boundary : std::uint8_t { Open };

struct LatticeSpec {
  int rows = 1;
  int cols = 2;
  Boundary boundary = Boundary::Open;
};

enum class EdgeKind : std::uint8_t { NearestNeighbor, NextNearestNeighbor };

/// Undirected lattice bond with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  EdgeKind kind = EdgeKind::NearestNeighbor;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// site -> image site
using Permutation = std::vector<int>;

/// Rectangular grid with row-major site numbering: site(r, c) = r * cols + c.
class Lattice {
 public:
  explicit Lattice(LatticeSpec spec);
  Lattice(int rows, int cols) : Lattice(LatticeSpec{rows, cols, Boundary::Open}) {}

  int rows() const { return spec_.rows; }
  int cols() const { return spec_.cols; }
  int num_sites() const { return spec_.rows * spec_.cols; }
  const LatticeSpec& spec() const { return spec_; }

  int site(int row, int col) const { return row * spec_.cols + col; }
  int row_of(int site) const { return site / spec_.cols; }
  int col_of(int site) const { return site % spec_.cols; }

  std::span<const Edge> edges(EdgeKind kind) const;
  bool adjacent(int a, int b, EdgeKind kind) const;

  std::string label() const;

 private:
  LatticeSpec spec_;
  std::vector<Edge> nn_;
  std::vector<Edge> nnn_;
};

/// Boustrophedon chain: element p is the site visited at chain position p.
/// Even rows run left to right, odd rows right to left.
Permutation snake_ordering(const Lattice& lattice);

struct SymmetryGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // identity first, closed under composition
};

/// Dihedral point group of the rectangle: both mirror flips, plus the
/// quarter turn for square lattices.
SymmetryGroup lattice_symmetry_group(const Lattice& lattice);

/// Closure of a generating set under composition. Identity is element 0.
std::vector<Permutation> close_group(std::span<const Permutation> generators, int num_points);

/// (p ∘ q)(x) = p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

struct OrbitPartition {
  std::vector<std::vector<Edge>> orbits;
  std::vector<Permutation> group_generators;
};

/// Image of an edge under a site permutation, normalized so that a < b.
Edge apply_to_edge(const Permutation& g, const Edge& e);

/// Equivalence classes of edges of one kind under the induced edge action.
/// Orbits are ordered by their smallest edge; edges inside an orbit are sorted.
OrbitPartition edge_orbits(const Lattice& lattice, std::span<const Permutation> group, EdgeKind kind);

}  // namespace sncqa
