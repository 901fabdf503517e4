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

#ifndef DCA_GENERATORS_HPP
#define DCA_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dca/set_function.hpp"

namespace dca {

/// f(X) = phi(|X|); phi(0..n) must have nonincreasing differences.
SetFn gen_cardinality_concave(int n, std::span<const Rational> phi);

struct UniformMatroid {
  int rank;
  int n;
};

/// Blocks partition {1..n}; a basis takes exactly capacities[b] elements of
/// block b.
struct PartitionMatroid {
  int n;
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

/// Element e is edges[e-1]; bases are the maximal spanning forests.
struct GraphicMatroid {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};

using MatroidDescription = std::variant<UniformMatroid, PartitionMatroid, GraphicMatroid>;

/// f(X) = w(X) on the bases, -inf elsewhere. Throws Error(InvalidArgument)
/// for malformed descriptions or a weight vector of the wrong length.
SetFn gen_matroid_weighted(const MatroidDescription& matroid, std::span<const Rational> weights);

/// Named fixtures: pairs-fail, pairs-disconnect, two-point-n2, nonequi-fail,
/// single-point. Throws Error(InvalidArgument) for unknown names.
SetFn gen_fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Adds k/16 * magnitude, k uniform in [-16, 16], to every finite entry.
SetFn gen_perturbed(const SetFn& base, const Rational& magnitude, std::uint64_t seed);

enum class Family {
  CardinalityConcave,  // random concave phi, plus a random modular tilt
  UniformMatroid,
  PartitionMatroid,
  GraphicMatroid,
};

const char* to_string(Family family);

struct InstanceSpec {
  Family family = Family::CardinalityConcave;
  int n = 1;
  std::uint64_t seed = 0;
};

/// Random instance of a known M-natural-concave family. 1 <= n <= 10.
SetFn generate(const InstanceSpec& spec);

}  // namespace dca

#endif  // DCA_GENERATORS_HPP
