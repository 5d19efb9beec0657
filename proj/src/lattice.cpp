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

#include "sncqa/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sncqa/error.hpp"

namespace sncqa {

namespace {

Edge make_edge(int a, int b, EdgeKind kind) {
  if (a > b) std::swap(a, b);
  return Edge{a, b, kind};
}

}  // namespace

Lattice::Lattice(LatticeSpec spec) : spec_(spec) {
  if (spec.rows < 1 || spec.cols < 1) {
    throw InvalidArgument("lattice dimensions must be positive, got " + std::to_string(spec.rows) +
                          "x" + std::to_string(spec.cols));
  }
  if (spec.rows * spec.cols < 2) {
    throw InvalidArgument("lattice needs at least two sites to carry an interaction");
  }
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      if (c + 1 < spec.cols) nn_.push_back(make_edge(site(r, c), site(r, c + 1), EdgeKind::NearestNeighbor));
      if (r + 1 < spec.rows) nn_.push_back(make_edge(site(r, c), site(r + 1, c), EdgeKind::NearestNeighbor));
      if (r + 1 < spec.rows && c + 1 < spec.cols) {
        nnn_.push_back(make_edge(site(r, c), site(r + 1, c + 1), EdgeKind::NextNearestNeighbor));
        nnn_.push_back(make_edge(site(r, c + 1), site(r + 1, c), EdgeKind::NextNearestNeighbor));
      }
    }
  }
  std::sort(nn_.begin(), nn_.end());
  std::sort(nnn_.begin(), nnn_.end());
}

std::span<const Edge> Lattice::edges(EdgeKind kind) const {
  return kind == EdgeKind::NearestNeighbor ? std::span<const Edge>(nn_) : std::span<const Edge>(nnn_);
}

bool Lattice::adjacent(int a, int b, EdgeKind kind) const {
  auto e = make_edge(a, b, kind);
  auto list = edges(kind);
  return std::binary_search(list.begin(), list.end(), e);
}

std::string Lattice::label() const { return std::to_string(rows()) + "x" + std::to_string(cols()); }

Permutation snake_ordering(const Lattice& lattice) {
  Permutation chain;
  chain.reserve(lattice.num_sites());
  for (int r = 0; r < lattice.rows(); ++r) {
    for (int i = 0; i < lattice.cols(); ++i) {
      int c = (r % 2 == 0) ? i : lattice.cols() - 1 - i;
      chain.push_back(lattice.site(r, c));
    }
  }
  return chain;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

std::vector<Permutation> close_group(std::span<const Permutation> generators, int num_points) {
  Permutation identity(num_points);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> elements{identity};
  std::set<Permutation> seen{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      auto next = compose(g, elements[i]);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

SymmetryGroup lattice_symmetry_group(const Lattice& lattice) {
  const int n = lattice.num_sites();
  const int rows = lattice.rows();
  const int cols = lattice.cols();
  SymmetryGroup group;
  Permutation hflip(n), vflip(n);
  for (int s = 0; s < n; ++s) {
    int r = lattice.row_of(s), c = lattice.col_of(s);
    hflip[s] = lattice.site(r, cols - 1 - c);
    vflip[s] = lattice.site(rows - 1 - r, c);
  }
  group.generators.push_back(hflip);
  group.generators.push_back(vflip);
  if (rows == cols) {
    Permutation rot(n);
    for (int s = 0; s < n; ++s) {
      int r = lattice.row_of(s), c = lattice.col_of(s);
      rot[s] = lattice.site(c, rows - 1 - r);
    }
    group.generators.push_back(rot);
  }
  group.elements = close_group(group.generators, n);
  return group;
}

Edge apply_to_edge(const Permutation& g, const Edge& e) { return make_edge(g[e.a], g[e.b], e.kind); }

OrbitPartition edge_orbits(const Lattice& lattice, std::span<const Permutation> group, EdgeKind kind) {
  auto edges = lattice.edges(kind);
  std::map<Edge, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index.emplace(edges[i], static_cast<int>(i));

  std::vector<int> orbit_of(edges.size(), -1);
  OrbitPartition out;
  out.group_generators.assign(group.begin(), group.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(out.orbits.size());
    std::vector<int> frontier{static_cast<int>(i)};
    orbit_of[i] = id;
    std::vector<Edge> members;
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      members.push_back(edges[cur]);
      for (const auto& g : group) {
        if (static_cast<int>(g.size()) != lattice.num_sites()) {
          throw InvalidArgument("group element acts on the wrong number of sites");
        }
        auto it = index.find(apply_to_edge(g, edges[cur]));
        if (it == index.end()) throw InvalidArgument("group element does not preserve the lattice edges");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          frontier.push_back(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(std::move(members));
  }
  return out;
}

}  // namespace sncqa
