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

#include "doctest.h"

#include "dca/document.hpp"
#include "dca/generators.hpp"
#include "support/builders.hpp"
#include "support/process.hpp"

using namespace dca;
using dca::testing::fixture_path;
using dca::testing::run_cli;
using dca::testing::write_temp;
using nlohmann::json;

TEST_CASE("shipped fixture files match the generators") {
  for (const auto& name : fixture_names()) {
    std::ifstream in(fixture_path(name));
    REQUIRE(in);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(parse_setfn_document(text) == gen_fixture(name));
    CHECK(serialize_setfn_document(gen_fixture(name)) == text);
  }
}

TEST_CASE("check") {
  const auto r = run_cli("check " + fixture_path("pairs-fail") + " --axiom mnat");
  CHECK(r.exit_code == 1);
  const json report = json::parse(r.out);
  const json& w = report["verdicts"][0]["witness"];
  CHECK(w["x"] == json({1, 2}));
  CHECK(w["y"] == json({3, 4}));
  CHECK(w["i"] == 1);
  CHECK(report_to_json(report_from_json(report)) == report);

  CHECK(run_cli("check " + fixture_path("two-point-n2") + " --axiom all").exit_code == 0);
  CHECK(run_cli("check " + fixture_path("uniform-2-4") + " --axiom theorem4").exit_code == 0);
  CHECK(run_cli("check " + fixture_path("pairs-disconnect") + " --axiom connected").exit_code == 1);

  const auto bad = write_temp("bad-rational.json",
                              R"({"n": 2, "values": [{"set": [1], "value": "1/0"}]})");
  CHECK(run_cli("check " + bad).exit_code == 2);
  CHECK(run_cli("check /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("check " + fixture_path("nonequi-fail") + " --axiom local").exit_code == 2);
  CHECK(run_cli("check " + fixture_path("pairs-fail") + " --axiom bogus").exit_code == 2);
}

TEST_CASE("conjugate") {
  auto r = run_cli("conjugate " + fixture_path("two-point-n2") + " --price 0,0");
  CHECK(r.exit_code == 0);
  json c = json::parse(r.out)["conjugate"];
  CHECK(c["value"] == "1");
  CHECK(c["maximizer"] == json({1}));

  r = run_cli("conjugate " + fixture_path("two-point-n2") + " --price 2,2");
  c = json::parse(r.out)["conjugate"];
  CHECK(c["value"] == "0");
  CHECK(c["maximizer"] == json::array());

  r = run_cli("conjugate " + fixture_path("single-point") + " --price -3/7,5");
  CHECK(json::parse(r.out)["conjugate"]["value"] == "0");

  CHECK(run_cli("conjugate " + fixture_path("two-point-n2") + " --price 1").exit_code == 2);
  CHECK(run_cli("conjugate " + fixture_path("two-point-n2") + " --price 1,x").exit_code == 2);
}

TEST_CASE("certify") {
  auto r = run_cli("certify " + fixture_path("pairs-fail"));
  CHECK(r.exit_code == 3);
  json cert = json::parse(r.out)["certificate"];
  CHECK(cert["target"] == "on-base");
  CHECK(parse_rational(cert["g_p"].get<std::string>()) +
            parse_rational(cert["g_q"].get<std::string>()) <
        parse_rational(cert["g_join"].get<std::string>()) +
            parse_rational(cert["g_meet"].get<std::string>()));

  r = run_cli("certify " + fixture_path("uniform-2-4"));
  CHECK(r.exit_code == 0);
  CHECK_FALSE(json::parse(r.out).contains("certificate"));

  r = run_cli("certify " + fixture_path("nonequi-fail"));
  CHECK(r.exit_code == 3);
  const json report = json::parse(r.out);
  CHECK(report["certificate"]["target"] == "on-lifted");
  CHECK(report["certificate"]["slots"] == 4);
  CHECK(report["certificate"]["p"].size() == 6);
  CHECK(report.contains("base_falsifier"));
  CHECK(report_to_json(report_from_json(report)) == report);
}

TEST_CASE("lift") {
  const auto chain = write_temp(
      "chain.json", R"({"n": 2, "values": [{"set": [], "value": "0"}, {"set": [1], "value": "1"}]})");
  for (const std::string& path :
       {chain, fixture_path("pairs-fail"), fixture_path("single-point")}) {
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto r = run_cli("lift " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == serialize_setfn_document(lift(parse_setfn_document(text)).lifted));
  }
  const auto out_path = write_temp("lifted.json", "");
  CHECK(run_cli("lift " + chain + " --slots 1 -o " + out_path).exit_code == 0);
  std::ifstream in(out_path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(parse_setfn_document(text).n() == 3);

  CHECK(run_cli("lift " + fixture_path("nonequi-fail") + " --slots 1").exit_code == 2);
  CHECK(run_cli("lift " + fixture_path("nonequi-fail") + " --slots 19").exit_code == 2);
}

TEST_CASE("selftest") {
  CHECK(run_cli("selftest --n 2 --trials 10").exit_code == 0);
  CHECK(run_cli("selftest --n 9").exit_code == 2);
  CHECK(run_cli("selftest --trials 0").exit_code == 2);
}
