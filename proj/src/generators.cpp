// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dca/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dca/error.hpp"

namespace dca {

namespace {

constexpr int kMaxGeneratedSize = 10;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

// Union-find over graph vertices, used for forest tests.
class Forest {
 public:
  explicit Forest(int vertices) : parent_(static_cast<std::size_t>(vertices) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& up = parent_[static_cast<std::size_t>(v)];
      up = parent_[static_cast<std::size_t>(up)];
      v = up;
    }
    return v;
  }

  /// False if u and v were already connected.
  bool unite(int u, int v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent_[static_cast<std::size_t>(u)] = v;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<bool> uniform_bases(const UniformMatroid& m) {
  require(m.n >= 1 && m.n <= kMaxGroundSize, "uniform matroid: n outside 1..20");
  require(m.rank >= 0 && m.rank <= m.n, "uniform matroid: rank outside 0..n");
  std::vector<bool> basis(std::size_t{1} << m.n);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    basis[s] = cardinality(static_cast<Subset>(s)) == m.rank;
  }
  return basis;
}

std::vector<bool> partition_bases(const PartitionMatroid& m) {
  require(m.n >= 1 && m.n <= kMaxGroundSize, "partition matroid: n outside 1..20");
  require(m.blocks.size() == m.capacities.size(), "partition matroid: one capacity per block");
  std::vector<Subset> masks;
  Subset covered = 0;
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    const Subset block = subset_of(m.blocks[b], m.n);
    require((block & covered) == 0, "partition matroid: blocks overlap");
    require(m.capacities[b] >= 0 && m.capacities[b] <= cardinality(block),
            "partition matroid: capacity outside 0..|block|");
    covered |= block;
    masks.push_back(block);
  }
  require(covered == GroundSet(m.n).full(), "partition matroid: blocks do not cover 1..n");
  std::vector<bool> basis(std::size_t{1} << m.n);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    bool ok = true;
    for (std::size_t b = 0; b < masks.size() && ok; ++b) {
      ok = cardinality(static_cast<Subset>(s) & masks[b]) == m.capacities[b];
    }
    basis[s] = ok;
  }
  return basis;
}

std::vector<bool> graphic_bases(const GraphicMatroid& m) {
  const int n = static_cast<int>(m.edges.size());
  require(n >= 1 && n <= kMaxGroundSize, "graphic matroid: edge count outside 1..20");
  require(m.vertices >= 1, "graphic matroid: needs a vertex");
  for (const auto& [u, v] : m.edges) {
    require(u >= 1 && u <= m.vertices && v >= 1 && v <= m.vertices,
            "graphic matroid: edge endpoint outside 1..vertices");
  }
  auto is_forest = [&](Subset s) {
    Forest forest(m.vertices);
    for (int e : elements(s)) {
      const auto& [u, v] = m.edges[static_cast<std::size_t>(e - 1)];
      if (!forest.unite(u, v)) return false;
    }
    return true;
  };
  Forest all(m.vertices);
  int rank = 0;
  for (const auto& [u, v] : m.edges) rank += all.unite(u, v) ? 1 : 0;
  std::vector<bool> basis(std::size_t{1} << n);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto mask = static_cast<Subset>(s);
    basis[s] = cardinality(mask) == rank && is_forest(mask);
  }
  return basis;
}

int ground_size(const MatroidDescription& matroid) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GraphicMatroid>) {
          return static_cast<int>(m.edges.size());
        } else {
          return m.n;
        }
      },
      matroid);
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int denominator) {
  const int k = std::uniform_int_distribution<int>(lo * denominator, hi * denominator)(rng);
  Rational r(k, denominator);
  r.canonicalize();
  return r;
}

std::vector<Rational> random_weights(std::mt19937_64& rng, int n, int bound) {
  std::vector<Rational> w;
  for (int e = 0; e < n; ++e) w.push_back(random_rational(rng, -bound, bound, 2));
  return w;
}

}  // namespace

SetFn gen_cardinality_concave(int n, std::span<const Rational> phi) {
  const GroundSet ground(n);
  require(phi.size() == static_cast<std::size_t>(n) + 1, "phi needs n + 1 values");
  for (std::size_t k = 2; k < phi.size(); ++k) {
    require(phi[k] - phi[k - 1] <= phi[k - 1] - phi[k - 2],
            "phi is not concave at " + std::to_string(k - 1));
  }
  std::vector<ExtValue> table(ground.subset_count());
  for (std::size_t s = 0; s < table.size(); ++s) {
    table[s] = phi[static_cast<std::size_t>(cardinality(static_cast<Subset>(s)))];
  }
  return SetFn(ground, std::move(table));
}

SetFn gen_matroid_weighted(const MatroidDescription& matroid, std::span<const Rational> weights) {
  const int n = ground_size(matroid);
  require(weights.size() == static_cast<std::size_t>(n), "one weight per ground element");
  const std::vector<bool> basis = std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) return uniform_bases(m);
        else if constexpr (std::is_same_v<T, PartitionMatroid>) return partition_bases(m);
        else return graphic_bases(m);
      },
      matroid);
  const PriceVector w(std::vector<Rational>(weights.begin(), weights.end()));
  std::vector<ExtValue> table(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (basis[s]) table[s] = w.sum_over(static_cast<Subset>(s));
  }
  return SetFn(GroundSet(n), std::move(table));
}

std::vector<std::string> fixture_names() {
  return {"pairs-fail", "pairs-disconnect", "two-point-n2", "nonequi-fail", "single-point"};
}

SetFn gen_fixture(std::string_view name) {
  using Entries = std::vector<std::pair<Subset, Rational>>;
  const Subset s12 = 0b0011, s13 = 0b0101, s14 = 0b1001, s23 = 0b0110, s24 = 0b1010,
               s34 = 0b1100;
  if (name == "pairs-fail") {
    const Entries e = {{s12, 1}, {s34, 1}, {s13, 0}, {s14, 0}, {s23, 0}, {s24, 0}};
    return SetFn::from_entries(4, e);
  }
  if (name == "pairs-disconnect") {
    const Entries e = {{s12, 1}, {s34, 1}};
    return SetFn::from_entries(4, e);
  }
  if (name == "two-point-n2") {
    const Entries e = {{0b00, 0}, {0b01, 1}, {0b10, 1}, {0b11, 1}};
    return SetFn::from_entries(2, e);
  }
  if (name == "nonequi-fail") {
    const Entries e = {{0b00, 0}, {0b01, 1}, {0b10, 1}, {0b11, 3}};
    return SetFn::from_entries(2, e);
  }
  if (name == "single-point") {
    const Entries e = {{0, 0}};
    return SetFn::from_entries(2, e);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

SetFn gen_perturbed(const SetFn& base, const Rational& magnitude, std::uint64_t seed) {
  require(magnitude >= 0, "perturbation magnitude must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-16, 16);
  std::vector<ExtValue> table(base.table().begin(), base.table().end());
  for (Subset s : base.domain()) table[s] = table[s] + Rational(magnitude * step(rng) / 16);
  return SetFn(base.ground(), std::move(table));
}

const char* to_string(Family family) {
  switch (family) {
    case Family::CardinalityConcave: return "cardinality-concave";
    case Family::UniformMatroid: return "uniform-matroid";
    case Family::PartitionMatroid: return "partition-matroid";
    case Family::GraphicMatroid: return "graphic-matroid";
  }
  return "unknown";
}

SetFn generate(const InstanceSpec& spec) {
  require(spec.n >= 1 && spec.n <= kMaxGeneratedSize, "generated instances need 1 <= n <= 10");
  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  switch (spec.family) {
    case Family::CardinalityConcave: {
      std::vector<Rational> increments;
      for (int k = 0; k < n; ++k) increments.push_back(random_rational(rng, -4, 4, 2));
      std::sort(increments.begin(), increments.end(), std::greater<>());
      std::vector<Rational> phi(1, Rational(0));
      for (const auto& d : increments) phi.push_back(phi.back() + d);
      return tilt(gen_cardinality_concave(n, phi), PriceVector(random_weights(rng, n, 3)));
    }
    case Family::UniformMatroid:
      return gen_matroid_weighted(UniformMatroid{uniform(0, n), n}, random_weights(rng, n, 5));
    case Family::PartitionMatroid: {
      const int block_count = uniform(1, std::min(n, 3));
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
      for (int e = 1; e <= n; ++e) {
        // The first block_count elements seed distinct blocks so none is empty.
        const int b = e <= block_count ? e - 1 : uniform(0, block_count - 1);
        blocks[static_cast<std::size_t>(b)].push_back(e);
      }
      std::vector<int> capacities;
      for (const auto& block : blocks) capacities.push_back(uniform(0, static_cast<int>(block.size())));
      return gen_matroid_weighted(PartitionMatroid{n, blocks, capacities},
                                  random_weights(rng, n, 5));
    }
    case Family::GraphicMatroid: {
      GraphicMatroid g{uniform(2, 5), {}};
      for (int e = 0; e < n; ++e) {
        const int u = uniform(1, g.vertices);
        int v = uniform(1, g.vertices - 1);
        if (v >= u) ++v;
        g.edges.emplace_back(u, v);
      }
      return gen_matroid_weighted(g, random_weights(rng, n, 5));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace dca
