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

#ifndef DCA_SET_FUNCTION_HPP
#define DCA_SET_FUNCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dca/ext_value.hpp"
#include "dca/rational.hpp"
#include "dca/subset.hpp"

namespace dca {

/// N = {1, ..., n} with 1 <= n <= 20.
class GroundSet {
 public:
  explicit GroundSet(int size);

  int size() const { return size_; }
  std::size_t subset_count() const { return std::size_t{1} << size_; }
  Subset full() const { return static_cast<Subset>(subset_count() - 1); }
  bool contains(int element) const { return element >= 1 && element <= size_; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int size_;
};

/// Exact rational prices indexed by ground-set element (1-based accessors).
class PriceVector {
 public:
  PriceVector() = default;
  explicit PriceVector(int size) : entries_(static_cast<std::size_t>(size)) {}
  explicit PriceVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static PriceVector unit(int size, int element, const Rational& scale = 1);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int element) const { return entries_.at(element - 1); }
  Rational& operator[](int element) { return entries_.at(element - 1); }
  std::span<const Rational> entries() const { return entries_; }

  /// p(X) = sum of p_i over i in X.
  Rational sum_over(Subset s) const;

  PriceVector operator+(const PriceVector& other) const;
  PriceVector operator-(const PriceVector& other) const;

  /// Componentwise max / min.
  PriceVector join(const PriceVector& other) const;
  PriceVector meet(const PriceVector& other) const;

  /// Concatenation (p, q) used for the lifted ground set N u S.
  PriceVector concat(const PriceVector& tail) const;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  void require_same_size(const PriceVector& other) const;

  std::vector<Rational> entries_;
};

/// f: 2^N -> Q u {-inf} stored densely over all 2^n masks. The effective
/// domain is never empty. Immutable after construction.
class SetFn {
 public:
  /// Throws Error(InvalidArgument) if the table length is not 2^n or every
  /// entry is -inf.
  SetFn(GroundSet ground, std::vector<ExtValue> table);

  /// Convenience: -inf everywhere except the listed entries.
  static SetFn from_entries(int n, std::span<const std::pair<Subset, Rational>> entries);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

  const ExtValue& eval(Subset s) const { return table_.at(s); }
  const ExtValue& operator()(Subset s) const { return table_[s]; }
  std::span<const ExtValue> table() const { return table_; }

  /// dom f in ascending mask order.
  std::span<const Subset> domain() const { return domain_; }
  bool in_domain(Subset s) const { return table_[s].is_finite(); }

  /// Largest / smallest |X| over dom f.
  int max_cardinality() const { return max_card_; }
  int min_cardinality() const { return min_card_; }

  /// F = max |f(X)| over dom f.
  const Rational& max_abs_value() const { return max_abs_; }

  friend bool operator==(const SetFn& a, const SetFn& b) {
    return a.ground_ == b.ground_ && a.table_ == b.table_;
  }

 private:
  GroundSet ground_;
  std::vector<ExtValue> table_;
  std::vector<Subset> domain_;
  int max_card_ = 0;
  int min_card_ = 0;
  Rational max_abs_;
};

struct ConjugateValue {
  Rational value;
  /// First maximizer in ascending mask order.
  Subset maximizer = 0;
};

/// g(p) = max over X of f(X) - p(X).
ConjugateValue conjugate(const SetFn& f, const PriceVector& p);

/// f_p(X) = f(X) + p(X); dom unchanged.
SetFn tilt(const SetFn& f, const PriceVector& p);

/// The equicardinal extension on N u S, S = {n+1, ..., n+s}:
/// lifted(Z) = base(Z n N) if |Z| = r, -inf otherwise.
struct LiftedSetFn {
  SetFn base;
  int slots;
  int max_card;  // r
  int min_card;  // r'
  SetFn lifted;

  /// Mask of the slack elements S inside the lifted ground set.
  Subset slack_mask() const;
};

/// Default slots = r - r' + 2. Throws Error(InvalidArgument) when
/// slots < r - r' or n + slots > 20.
LiftedSetFn lift(const SetFn& f, std::optional<int> slots = std::nullopt);

/// Conjugate of the lifted function computed from the base function: for
/// each X in dom f the r - |X| cheapest slack elements are charged.
/// Throws Error(DimensionMismatch) when p or q have the wrong length.
Rational lifted_conjugate(const LiftedSetFn& lf, const PriceVector& p, const PriceVector& q);

}  // namespace dca

#endif  // DCA_SET_FUNCTION_HPP
