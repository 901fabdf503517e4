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

#ifndef DCA_RATIONAL_HPP
#define DCA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dca {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b != 0) into canonical form. Whitespace,
/// decimal points and exponents are rejected. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical text: "a" for integers, "a/b" with b > 0 and gcd(a,b) = 1.
std::string format_rational(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace dca

#endif  // DCA_RATIONAL_HPP
