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

// dcacert: command-line front end for the dca library.
//
//   dcacert check FILE [--axiom m|mnat|equicardinal|connected|local|theorem4|all]
//   dcacert conjugate FILE --price p1,...,pn
//   dcacert certify FILE
//   dcacert lift FILE [--slots s] [--output PATH]
//   dcacert selftest [--n k] [--trials t] [--seed s]
//
// Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 certificate produced,
// 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dca/axioms.hpp"
#include "dca/certificates.hpp"
#include "dca/document.hpp"
#include "dca/error.hpp"
#include "dca/selftest.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitInternal = 4;

constexpr int kFalsifierTrials = 2000;
constexpr std::uint64_t kFalsifierSeed = 0;

// Thrown for input problems that map to exit code 2.
struct InputError {
  std::string message;
};

dca::SetFn load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{path + ": cannot open"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return dca::parse_setfn_document(buffer.str());
  } catch (const dca::Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

void emit(const dca::Report& report) {
  std::cout << dca::report_to_json(report).dump(2) << "\n";
}

template <class Witness>
dca::VerdictRecord verdict(const std::string& axiom, const dca::Check<Witness>& c) {
  dca::VerdictRecord v{axiom, c.passed(), std::nullopt, std::nullopt};
  if (!c.passed()) v.witness = dca::to_record(c.witness());
  return v;
}

dca::VerdictRecord run_axiom(const dca::SetFn& f, const std::string& axiom) {
  if (axiom == "m") return verdict(axiom, dca::check_m_concave(f));
  if (axiom == "mnat") return verdict(axiom, dca::check_mnat_concave(f));
  if (axiom == "equicardinal") return verdict(axiom, dca::check_equicardinal(f));
  if (axiom == "theorem4") return verdict(axiom, dca::check_m_via_local_exchange(f));
  try {
    if (axiom == "connected") return verdict(axiom, dca::check_connected(f));
    return verdict(axiom, dca::check_local_exchange(f));
  } catch (const dca::Error& e) {
    return {axiom, false, std::nullopt, std::string(dca::to_string(e.code())) + ": " + e.what()};
  }
}

int cmd_check(const std::string& path, const std::string& axiom) {
  const dca::SetFn f = load(path);
  dca::Report report;
  report.input_digest = dca::input_digest(f);
  const std::vector<std::string> axioms =
      axiom == "all"
          ? std::vector<std::string>{"equicardinal", "mnat", "m", "connected", "local", "theorem4"}
          : std::vector<std::string>{axiom};
  for (const auto& a : axioms) report.verdicts.push_back(run_axiom(f, a));
  // Connectedness and local exchange are undefined off equicardinal domains.
  if (axiom != "all" && report.verdicts.front().error) {
    throw InputError{*report.verdicts.front().error};
  }
  emit(report);
  // With --axiom all the structural verdicts (equicardinality, connectedness,
  // M-concavity) classify the function; only M-natural concavity decides.
  for (const auto& v : report.verdicts) {
    if (!v.pass && (axiom != "all" || v.axiom == "mnat")) return kExitFail;
  }
  return kExitPass;
}

int cmd_conjugate(const std::string& path, const std::string& price_text) {
  const dca::SetFn f = load(path);
  std::vector<dca::Rational> price;
  std::stringstream tokens(price_text);
  for (std::string token; std::getline(tokens, token, ',');) {
    try {
      price.push_back(dca::parse_rational(token));
    } catch (const dca::Error& e) {
      throw InputError{std::string("--price: ") + e.what()};
    }
  }
  if (static_cast<int>(price.size()) != f.n()) {
    throw InputError{"--price: expected " + std::to_string(f.n()) + " entries, got " +
                     std::to_string(price.size())};
  }
  const auto g = dca::conjugate(f, dca::PriceVector(price));
  dca::Report report;
  report.input_digest = dca::input_digest(f);
  report.conjugate = dca::ConjugateRecord{price, g.value, dca::elements(g.maximizer)};
  emit(report);
  return kExitPass;
}

int cmd_certify(const std::string& path) {
  const dca::SetFn f = load(path);
  dca::Report report;
  report.input_digest = dca::input_digest(f);
  report.verdicts.push_back(run_axiom(f, "mnat"));
  std::optional<dca::SubmodularityCertificate> cert;
  try {
    cert = dca::certify_not_mnat(f);
  } catch (const dca::Error& e) {
    if (e.code() == dca::ErrorCode::InvalidArgument) throw InputError{e.what()};
    throw;
  }
  if (!cert) {
    emit(report);
    return kExitPass;
  }
  const bool on_base = cert->target == dca::CertificateTarget::OnBase;
  const dca::SetFn target = on_base ? f : dca::lift(f).lifted;
  if (!dca::verify_certificate(target, *cert)) {
    std::cerr << "internal error: certificate failed re-verification\n";
    return kExitInternal;
  }
  report.certificate = dca::to_record(*cert);
  if (!on_base) {
    dca::FalsifierRecord search{kFalsifierTrials, kFalsifierSeed, std::nullopt};
    if (auto v = dca::falsify_submodularity(f, kFalsifierTrials, kFalsifierSeed)) {
      search.violation = dca::to_record(*v);
    }
    report.base_falsifier = std::move(search);
  }
  emit(report);
  return kExitCertificate;
}

int cmd_lift(const std::string& path, std::optional<int> slots, const std::string& output) {
  const dca::SetFn f = load(path);
  dca::LiftedSetFn lf = [&] {
    try {
      return dca::lift(f, slots);
    } catch (const dca::Error& e) {
      throw InputError{std::string("--slots: ") + e.what()};
    }
  }();
  const std::string text = dca::serialize_setfn_document(lf.lifted);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!(out << text)) throw InputError{output + ": cannot write"};
  }
  return kExitPass;
}

int cmd_selftest(int n, int trials, std::uint64_t seed) {
  const auto tallies = dca::run_selftest({n, trials, seed});
  bool ok = true;
  for (const auto& t : tallies) {
    std::cout << (t.ok() ? "ok   " : "FAIL ") << t.name << ": " << t.checked << " checked, "
              << t.violations << " violations\n";
    for (const auto& example : t.examples) std::cout << "       " << example << "\n";
    ok = ok && t.ok();
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange-axiom checks and conjugate submodularity certificates for set functions"};
  app.require_subcommand(1);

  std::string file;
  std::string axiom = "all";
  auto* check = app.add_subcommand("check", "Run exchange-axiom checkers");
  check->add_option("file", file, "Set function document")->required();
  check->add_option("--axiom", axiom, "Axiom to check")
      ->check(CLI::IsMember({"m", "mnat", "equicardinal", "connected", "local", "theorem4", "all"}));

  std::string price;
  auto* conj = app.add_subcommand("conjugate", "Evaluate the concave conjugate at a price");
  conj->add_option("file", file, "Set function document")->required();
  conj->add_option("--price", price, "Comma-separated rationals p1,...,pn")->required();

  auto* certify = app.add_subcommand("certify", "Certify failure of M-natural concavity");
  certify->add_option("file", file, "Set function document")->required();

  std::optional<int> slots;
  std::string output;
  auto* lift = app.add_subcommand("lift", "Write the equicardinal lift of a set function");
  lift->add_option("file", file, "Set function document")->required();
  lift->add_option("--slots", slots, "Number of slack elements (default r - r' + 2)");
  lift->add_option("-o,--output", output, "Output path (default stdout)");

  int n = 4;
  int trials = 100;
  std::uint64_t seed = 42;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--n", n, "Largest ground set size")->check(CLI::Range(1, 6));
  selftest->add_option("--trials", trials, "Random probes per instance")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(file, axiom);
    if (*conj) return cmd_conjugate(file, price);
    if (*certify) return cmd_certify(file);
    if (*lift) return cmd_lift(file, slots, output);
    if (*selftest) return cmd_selftest(n, trials, seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const dca::Error& e) {
    std::cerr << "internal error (" << dca::to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
