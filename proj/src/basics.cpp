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

#include "dca/error.hpp"
#include "dca/ext_value.hpp"
#include "dca/rational.hpp"
#include "dca/subset.hpp"

#include <cctype>

namespace dca {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotEquicardinal: return "NotEquicardinal";
    case ErrorCode::UniqueMatchingRequired: return "UniqueMatchingRequired";
    case ErrorCode::NotALocalFailure: return "NotALocalFailure";
    case ErrorCode::CertificateSearchExhausted: return "CertificateSearchExhausted";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorCode::Parse, "invalid rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::Parse, "invalid rational '" + std::string(text) + "': zero denominator");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

std::string ExtValue::to_string() const {
  return is_finite() ? format_rational(*value_) : std::string("-inf");
}

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  for (; s != 0; s &= s - 1) out.push_back(min_element(s));
  return out;
}

Subset subset_of(std::span<const int> elements, int ground_size) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > ground_size) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(e) + " outside 1.." + std::to_string(ground_size));
    }
    if (contains(s, e)) {
      throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(e) + " repeated");
    }
    s |= singleton(e);
  }
  return s;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace dca
