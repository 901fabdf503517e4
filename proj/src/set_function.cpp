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

#include "dca/set_function.hpp"

#include <algorithm>
#include <string>

#include "dca/error.hpp"

namespace dca {

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 1 || size > kMaxGroundSize) {
    throw Error(ErrorCode::InvalidArgument,
                "ground set size " + std::to_string(size) + " outside 1..20");
  }
}

PriceVector PriceVector::unit(int size, int element, const Rational& scale) {
  PriceVector e(size);
  e[element] = scale;
  return e;
}

Rational PriceVector::sum_over(Subset s) const {
  Rational total = 0;
  for (; s != 0; s &= s - 1) total += entries_[static_cast<std::size_t>(std::countr_zero(s))];
  return total;
}

void PriceVector::require_same_size(const PriceVector& other) const {
  if (size() != other.size()) {
    throw Error(ErrorCode::DimensionMismatch, "price vectors of length " +
                                                  std::to_string(size()) + " and " +
                                                  std::to_string(other.size()));
  }
}

PriceVector PriceVector::operator+(const PriceVector& other) const {
  require_same_size(other);
  PriceVector out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
  return out;
}

PriceVector PriceVector::operator-(const PriceVector& other) const {
  require_same_size(other);
  PriceVector out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= other.entries_[k];
  return out;
}

PriceVector PriceVector::join(const PriceVector& other) const {
  require_same_size(other);
  PriceVector out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (other.entries_[k] > out.entries_[k]) out.entries_[k] = other.entries_[k];
  }
  return out;
}

PriceVector PriceVector::meet(const PriceVector& other) const {
  require_same_size(other);
  PriceVector out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (other.entries_[k] < out.entries_[k]) out.entries_[k] = other.entries_[k];
  }
  return out;
}

PriceVector PriceVector::concat(const PriceVector& tail) const {
  std::vector<Rational> all = entries_;
  all.insert(all.end(), tail.entries_.begin(), tail.entries_.end());
  return PriceVector(std::move(all));
}

SetFn::SetFn(GroundSet ground, std::vector<ExtValue> table)
    : ground_(ground), table_(std::move(table)) {
  if (table_.size() != ground_.subset_count()) {
    throw Error(ErrorCode::InvalidArgument, "table has " + std::to_string(table_.size()) +
                                                " entries, expected 2^" +
                                                std::to_string(ground_.size()));
  }
  min_card_ = ground_.size();
  for (std::size_t s = 0; s < table_.size(); ++s) {
    if (!table_[s].is_finite()) continue;
    const auto mask = static_cast<Subset>(s);
    domain_.push_back(mask);
    max_card_ = std::max(max_card_, cardinality(mask));
    min_card_ = std::min(min_card_, cardinality(mask));
    const Rational a = abs(table_[s].value());
    if (a > max_abs_) max_abs_ = a;
  }
  if (domain_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "effective domain is empty");
  }
}

SetFn SetFn::from_entries(int n, std::span<const std::pair<Subset, Rational>> entries) {
  const GroundSet ground(n);
  std::vector<ExtValue> table(ground.subset_count());
  for (const auto& [s, v] : entries) {
    if (s > ground.full()) {
      throw Error(ErrorCode::InvalidArgument, "subset outside the ground set");
    }
    table[s] = ExtValue(v);
  }
  return SetFn(ground, std::move(table));
}

ConjugateValue conjugate(const SetFn& f, const PriceVector& p) {
  if (p.size() != f.n()) {
    throw Error(ErrorCode::DimensionMismatch, "price of length " + std::to_string(p.size()) +
                                                  " for n = " + std::to_string(f.n()));
  }
  const auto dom = f.domain();
  ConjugateValue best{f(dom[0]).value() - p.sum_over(dom[0]), dom[0]};
  Rational candidate;
  for (std::size_t k = 1; k < dom.size(); ++k) {
    candidate = f(dom[k]).value() - p.sum_over(dom[k]);
    if (candidate > best.value) {
      best.value = candidate;
      best.maximizer = dom[k];
    }
  }
  return best;
}

SetFn tilt(const SetFn& f, const PriceVector& p) {
  if (p.size() != f.n()) {
    throw Error(ErrorCode::DimensionMismatch, "tilt vector has the wrong length");
  }
  std::vector<ExtValue> table(f.table().begin(), f.table().end());
  for (Subset s : f.domain()) table[s] = table[s] + p.sum_over(s);
  return SetFn(f.ground(), std::move(table));
}

Subset LiftedSetFn::slack_mask() const {
  return lifted.ground().full() & ~base.ground().full();
}

LiftedSetFn lift(const SetFn& f, std::optional<int> slots) {
  const int r = f.max_cardinality();
  const int r_min = f.min_cardinality();
  const int s = slots.value_or(r - r_min + 2);
  if (s < r - r_min || s < 1) {
    throw Error(ErrorCode::InvalidArgument, "slots = " + std::to_string(s) +
                                                " below r - r' = " + std::to_string(r - r_min));
  }
  if (f.n() + s > kMaxGroundSize) {
    throw Error(ErrorCode::InvalidArgument,
                "lifted ground set of size " + std::to_string(f.n() + s) + " exceeds 20");
  }
  const GroundSet lifted_ground(f.n() + s);
  const Subset base_mask = f.ground().full();
  std::vector<ExtValue> table(lifted_ground.subset_count());
  for (std::size_t z = 0; z < table.size(); ++z) {
    const auto mask = static_cast<Subset>(z);
    if (cardinality(mask) == r) table[z] = f(mask & base_mask);
  }
  return LiftedSetFn{f, s, r, r_min, SetFn(lifted_ground, std::move(table))};
}

Rational lifted_conjugate(const LiftedSetFn& lf, const PriceVector& p, const PriceVector& q) {
  if (p.size() != lf.base.n() || q.size() != lf.slots) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected prices of lengths " + std::to_string(lf.base.n()) + " and " +
                    std::to_string(lf.slots));
  }
  // cheapest[k] = minimum q(U) over |U| = k.
  std::vector<Rational> sorted(q.entries().begin(), q.entries().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> cheapest(sorted.size() + 1);
  for (std::size_t k = 0; k < sorted.size(); ++k) cheapest[k + 1] = cheapest[k] + sorted[k];

  std::optional<Rational> best;
  for (Subset x : lf.base.domain()) {
    const int need = lf.max_card - cardinality(x);
    if (need > lf.slots) continue;
    Rational value = lf.base(x).value() - p.sum_over(x) - cheapest[static_cast<std::size_t>(need)];
    if (!best || value > *best) best = std::move(value);
  }
  return *best;
}

}  // namespace dca
