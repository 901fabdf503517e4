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

#include "dca/document.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>

#include "dca/error.hpp"

namespace dca {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

bool canonical_less(Subset a, Subset b) {
  if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
  return elements(a) < elements(b);
}

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rational strings");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) fail(where + "[" + std::to_string(k) + "]", "expected a rational string");
    try {
      out.push_back(parse_rational(j[k].get<std::string>()));
    } catch (const Error& e) {
      fail(where + "[" + std::to_string(k) + "]", e.what());
    }
  }
  return out;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> ints_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) fail(where + "[" + std::to_string(k) + "]", "expected an integer");
    out.push_back(j[k].get<int>());
  }
  return out;
}

std::vector<Rational> to_vector(const PriceVector& p) {
  return std::vector<Rational>(p.entries().begin(), p.entries().end());
}

json violation_to_json(const ViolationRecord& v) {
  return json{{"p", rationals_to_json(v.p)},
              {"q", rationals_to_json(v.q)},
              {"join", rationals_to_json(v.join)},
              {"meet", rationals_to_json(v.meet)},
              {"g_p", format_rational(v.g_p)},
              {"g_q", format_rational(v.g_q)},
              {"g_join", format_rational(v.g_join)},
              {"g_meet", format_rational(v.g_meet)}};
}

ViolationRecord violation_from_json(const json& j, const std::string& where) {
  ViolationRecord v;
  v.p = rationals_from_json(field(j, "p", where), where + ".p");
  v.q = rationals_from_json(field(j, "q", where), where + ".q");
  v.join = rationals_from_json(field(j, "join", where), where + ".join");
  v.meet = rationals_from_json(field(j, "meet", where), where + ".meet");
  v.g_p = rational_from_json(field(j, "g_p", where), where + ".g_p");
  v.g_q = rational_from_json(field(j, "g_q", where), where + ".g_q");
  v.g_join = rational_from_json(field(j, "g_join", where), where + ".g_join");
  v.g_meet = rational_from_json(field(j, "g_meet", where), where + ".g_meet");
  return v;
}

}  // namespace

SetFn parse_setfn_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("line " + std::to_string(line_of(text, e.byte)), "malformed JSON");
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "default" && key != "values") fail(key, "unknown field");
  }
  const json& n_field = field(doc, "n", "document");
  if (!n_field.is_number_integer()) fail("n", "expected an integer");
  const long long n = n_field.get<long long>();
  if (n < 1 || n > kMaxGroundSize) fail("n", "must lie in 1..20");
  if (doc.contains("default") && doc["default"] != "-inf") {
    fail("default", "only \"-inf\" is supported");
  }
  const json& values = field(doc, "values", "document");
  if (!values.is_array()) fail("values", "expected an array");

  const GroundSet ground(static_cast<int>(n));
  std::vector<ExtValue> table(ground.subset_count());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::string where = "values[" + std::to_string(k) + "]";
    const json& entry = values[k];
    if (!entry.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (key != "set" && key != "value") fail(where + "." + key, "unknown field");
    }
    const std::vector<int> members = ints_from_json(field(entry, "set", where), where + ".set");
    if (!std::is_sorted(members.begin(), members.end())) fail(where + ".set", "must be sorted");
    Subset s = 0;
    try {
      s = subset_of(members, ground.size());
    } catch (const Error& e) {
      fail(where + ".set", e.what());
    }
    if (table[s].is_finite()) fail(where + ".set", "duplicate set " + format_subset(s));
    table[s] = rational_from_json(field(entry, "value", where), where + ".value");
  }
  if (std::none_of(table.begin(), table.end(), [](const ExtValue& v) { return v.is_finite(); })) {
    fail("values", "at least one finite value is required");
  }
  return SetFn(ground, std::move(table));
}

json setfn_to_json(const SetFn& f) {
  std::vector<Subset> order(f.domain().begin(), f.domain().end());
  std::sort(order.begin(), order.end(), canonical_less);
  json values = json::array();
  for (Subset s : order) {
    values.push_back(json{{"set", elements(s)}, {"value", f(s).to_string()}});
  }
  return json{{"n", f.n()}, {"default", "-inf"}, {"values", std::move(values)}};
}

std::string serialize_setfn_document(const SetFn& f) { return setfn_to_json(f).dump(2) + "\n"; }

std::string input_digest(const SetFn& f) {
  const std::string text = serialize_setfn_document(f);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr);
  std::string out = "sha256:";
  char hex[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(hex, sizeof(hex), "%02x", digest[k]);
    out += hex;
  }
  return out;
}

WitnessRecord to_record(const ExchangeWitness& w) {
  return {to_string(w.kind), elements(w.x), elements(w.y), w.i};
}

WitnessRecord to_record(const CardinalityWitness& w) {
  return {"equicardinal", elements(w.x), elements(w.y), std::nullopt};
}

WitnessRecord to_record(const DisconnectWitness& w) {
  return {"disconnect", elements(w.x), elements(w.y), std::nullopt};
}

WitnessRecord to_record(const StructuralWitness& w) {
  return std::visit([](const auto& v) { return to_record(v); }, w);
}

ViolationRecord to_record(const SubmodularViolation& v) {
  return {to_vector(v.p), to_vector(v.q), to_vector(v.join), to_vector(v.meet),
          v.g_p,          v.g_q,          v.g_join,          v.g_meet};
}

CertificateRecord to_record(const SubmodularityCertificate& cert) {
  CertificateRecord r;
  r.target = to_string(cert.target);
  r.slots = cert.slots;
  r.construction = to_string(cert.params.construction);
  r.x = elements(cert.params.x);
  r.y = elements(cert.params.y);
  r.values = {to_vector(cert.p), to_vector(cert.q), to_vector(cert.p.join(cert.q)),
              to_vector(cert.p.meet(cert.q)), cert.g_p, cert.g_q, cert.g_join, cert.g_meet};
  r.big_m = cert.params.big_m;
  r.rail_offset = cert.params.rail_offset;
  r.distance = cert.params.distance;
  r.step = cert.params.step;
  return r;
}

json report_to_json(const Report& report) {
  json out{{"schema", report.schema},
           {"tool_version", report.tool_version},
           {"input_digest", report.input_digest}};
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json entry{{"axiom", v.axiom}, {"pass", v.pass}};
    if (v.witness) {
      json w{{"kind", v.witness->kind}, {"x", v.witness->x}, {"y", v.witness->y}};
      if (v.witness->i) w["i"] = *v.witness->i;
      entry["witness"] = std::move(w);
    }
    if (v.error) entry["error"] = *v.error;
    verdicts.push_back(std::move(entry));
  }
  out["verdicts"] = std::move(verdicts);
  if (report.conjugate) {
    out["conjugate"] = json{{"price", rationals_to_json(report.conjugate->price)},
                            {"value", format_rational(report.conjugate->value)},
                            {"maximizer", report.conjugate->maximizer}};
  }
  if (report.certificate) {
    const auto& c = *report.certificate;
    json block = violation_to_json(c.values);
    block["target"] = c.target;
    block["slots"] = c.slots;
    block["construction"] = c.construction;
    block["x"] = c.x;
    block["y"] = c.y;
    json params{{"M", format_rational(c.big_m)},
                {"C", format_rational(c.rail_offset)},
                {"distance", c.distance}};
    if (c.step) params["a"] = format_rational(*c.step);
    block["params"] = std::move(params);
    out["certificate"] = std::move(block);
  }
  if (report.base_falsifier) {
    json block{{"trials", report.base_falsifier->trials}, {"seed", report.base_falsifier->seed}};
    if (report.base_falsifier->violation) {
      block["violation"] = violation_to_json(*report.base_falsifier->violation);
    }
    out["base_falsifier"] = std::move(block);
  }
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  try {
    r.schema = field(j, "schema", "report").get<std::string>();
    if (r.schema != kReportSchema) fail("schema", "unsupported report schema '" + r.schema + "'");
    r.tool_version = field(j, "tool_version", "report").get<std::string>();
    r.input_digest = field(j, "input_digest", "report").get<std::string>();
    const json& verdicts = field(j, "verdicts", "report");
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      const std::string where = "verdicts[" + std::to_string(k) + "]";
      const json& v = verdicts[k];
      VerdictRecord rec;
      rec.axiom = field(v, "axiom", where).get<std::string>();
      rec.pass = field(v, "pass", where).get<bool>();
      if (v.contains("witness")) {
        const json& w = v["witness"];
        WitnessRecord wr;
        wr.kind = field(w, "kind", where).get<std::string>();
        wr.x = ints_from_json(field(w, "x", where), where + ".witness.x");
        wr.y = ints_from_json(field(w, "y", where), where + ".witness.y");
        if (w.contains("i")) wr.i = w["i"].get<int>();
        rec.witness = std::move(wr);
      }
      if (v.contains("error")) rec.error = v["error"].get<std::string>();
      r.verdicts.push_back(std::move(rec));
    }
    if (j.contains("conjugate")) {
      const json& c = j["conjugate"];
      ConjugateRecord rec;
      rec.price = rationals_from_json(field(c, "price", "conjugate"), "conjugate.price");
      rec.value = rational_from_json(field(c, "value", "conjugate"), "conjugate.value");
      rec.maximizer = ints_from_json(field(c, "maximizer", "conjugate"), "conjugate.maximizer");
      r.conjugate = std::move(rec);
    }
    if (j.contains("certificate")) {
      const json& c = j["certificate"];
      CertificateRecord rec;
      rec.values = violation_from_json(c, "certificate");
      rec.target = field(c, "target", "certificate").get<std::string>();
      rec.slots = field(c, "slots", "certificate").get<int>();
      rec.construction = field(c, "construction", "certificate").get<std::string>();
      rec.x = ints_from_json(field(c, "x", "certificate"), "certificate.x");
      rec.y = ints_from_json(field(c, "y", "certificate"), "certificate.y");
      const json& params = field(c, "params", "certificate");
      rec.big_m = rational_from_json(field(params, "M", "certificate.params"), "certificate.params.M");
      rec.rail_offset =
          rational_from_json(field(params, "C", "certificate.params"), "certificate.params.C");
      rec.distance = field(params, "distance", "certificate.params").get<int>();
      if (params.contains("a")) rec.step = rational_from_json(params["a"], "certificate.params.a");
      r.certificate = std::move(rec);
    }
    if (j.contains("base_falsifier")) {
      const json& b = j["base_falsifier"];
      FalsifierRecord rec;
      rec.trials = field(b, "trials", "base_falsifier").get<int>();
      rec.seed = field(b, "seed", "base_falsifier").get<std::uint64_t>();
      if (b.contains("violation")) {
        rec.violation = violation_from_json(b["violation"], "base_falsifier.violation");
      }
      r.base_falsifier = std::move(rec);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("report: ") + e.what());
  }
  return r;
}

}  // namespace dca
