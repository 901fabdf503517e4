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

#ifndef DCA_DOCUMENT_HPP
#define DCA_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dca/axioms.hpp"
#include "dca/certificates.hpp"
#include "dca/set_function.hpp"

namespace dca {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "dca-report/1";

// Set function documents:
//
//   {"n": 4, "default": "-inf",
//    "values": [{"set": [1, 2], "value": "1"}, {"set": [3, 4], "value": "1/2"}]}
//
// Sets are sorted 1-based element lists, values are rational strings. The
// canonical form orders entries by cardinality, then lexicographically.

/// Throws Error(Parse) naming the offending line or field.
SetFn parse_setfn_document(std::string_view text);
nlohmann::json setfn_to_json(const SetFn& f);
/// Canonical text, two-space indent, trailing newline.
std::string serialize_setfn_document(const SetFn& f);

/// sha256 of the canonical document, "sha256:<hex>".
std::string input_digest(const SetFn& f);

struct WitnessRecord {
  std::string kind;  // equicardinal, disconnect, m, mnat, local
  std::vector<int> x, y;
  std::optional<int> i;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct VerdictRecord {
  std::string axiom;
  bool pass = false;
  std::optional<WitnessRecord> witness;
  /// Set when the check could not run (e.g. connectedness on a
  /// non-equicardinal domain).
  std::optional<std::string> error;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

struct ConjugateRecord {
  std::vector<Rational> price;
  Rational value;
  std::vector<int> maximizer;

  friend bool operator==(const ConjugateRecord&, const ConjugateRecord&) = default;
};

struct ViolationRecord {
  std::vector<Rational> p, q, join, meet;
  Rational g_p, g_q, g_join, g_meet;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

struct CertificateRecord {
  std::string target;  // on-base, on-lifted
  int slots = 0;
  std::string construction;  // disconnection, local-exchange
  std::vector<int> x, y;
  ViolationRecord values;
  Rational big_m;
  Rational rail_offset;
  int distance = 0;
  std::optional<Rational> step;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct FalsifierRecord {
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<ViolationRecord> violation;

  friend bool operator==(const FalsifierRecord&, const FalsifierRecord&) = default;
};

struct Report {
  std::string schema = kReportSchema;
  std::string tool_version = kToolVersion;
  std::string input_digest;
  std::vector<VerdictRecord> verdicts;
  std::optional<ConjugateRecord> conjugate;
  std::optional<CertificateRecord> certificate;
  /// Best-effort random search on the base conjugate, run when the
  /// certificate lives on the lifted function.
  std::optional<FalsifierRecord> base_falsifier;

  friend bool operator==(const Report&, const Report&) = default;
};

WitnessRecord to_record(const ExchangeWitness& w);
WitnessRecord to_record(const CardinalityWitness& w);
WitnessRecord to_record(const DisconnectWitness& w);
WitnessRecord to_record(const StructuralWitness& w);
ViolationRecord to_record(const SubmodularViolation& v);
CertificateRecord to_record(const SubmodularityCertificate& cert);

nlohmann::json report_to_json(const Report& report);
/// Throws Error(Parse) on schema mismatch.
Report report_from_json(const nlohmann::json& j);

}  // namespace dca

#endif  // DCA_DOCUMENT_HPP
