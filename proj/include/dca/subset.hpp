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

#ifndef DCA_SUBSET_HPP
#define DCA_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dca {

/// Subsets of the ground set {1..n} as bitmasks; element i lives at bit i-1.
/// Masks stay internal, everything user-facing speaks sorted element lists.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 20;

inline int cardinality(Subset s) { return std::popcount(s); }

inline bool contains(Subset s, int element) { return (s >> (element - 1)) & 1U; }

inline Subset singleton(int element) { return Subset{1} << (element - 1); }

inline bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

/// Smallest element of a nonempty set.
inline int min_element(Subset s) { return std::countr_zero(s) + 1; }

/// Sorted 1-based element list.
std::vector<int> elements(Subset s);

/// Inverse of elements(); throws Error(InvalidArgument) on out-of-range or
/// repeated entries.
Subset subset_of(std::span<const int> elements, int ground_size);

/// "{1,3}" style rendering for diagnostics.
std::string format_subset(Subset s);

}  // namespace dca

#endif  // DCA_SUBSET_HPP
