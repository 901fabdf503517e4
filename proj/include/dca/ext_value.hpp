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

#ifndef DCA_EXT_VALUE_HPP
#define DCA_EXT_VALUE_HPP

#include <compare>
#include <optional>
#include <string>

#include "dca/rational.hpp"

namespace dca {

/// A finite exact rational or -inf. There is no +inf.
class ExtValue {
 public:
  ExtValue() = default;  // -inf
  ExtValue(Rational value) : value_(std::move(value)) {}
  ExtValue(long value) : value_(Rational(value)) {}
  ExtValue(int value) : value_(Rational(value)) {}

  static ExtValue neg_inf() { return ExtValue(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_neg_inf() const { return !value_.has_value(); }

  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (!a.is_finite() || !b.is_finite()) return neg_inf();
    return ExtValue(Rational(*a.value_ + *b.value_));
  }
  friend ExtValue operator+(const ExtValue& a, const Rational& b) {
    if (!a.is_finite()) return neg_inf();
    return ExtValue(Rational(*a.value_ + b));
  }
  friend ExtValue operator-(const ExtValue& a, const Rational& b) {
    if (!a.is_finite()) return neg_inf();
    return ExtValue(Rational(*a.value_ - b));
  }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.is_finite() != b.is_finite()) return false;
    return !a.is_finite() || *a.value_ == *b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (!a.is_finite() || !b.is_finite()) return a.is_finite() <=> b.is_finite();
    const int c = cmp(*a.value_, *b.value_);
    return c <=> 0;
  }

  /// "-inf" or the canonical rational text.
  std::string to_string() const;

 private:
  std::optional<Rational> value_;
};

}  // namespace dca

#endif  // DCA_EXT_VALUE_HPP
