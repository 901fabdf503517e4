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

#ifndef DCA_AXIOMS_HPP
#define DCA_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dca/set_function.hpp"

namespace dca {

/// Outcome of a decidable check: pass, or the first witness in the fixed
/// enumeration order (ascending masks, then ascending elements).
template <class Witness>
class Check {
 public:
  Check() = default;
  Check(Witness witness) : witness_(std::move(witness)) {}

  static Check pass() { return Check(); }

  bool passed() const { return !witness_.has_value(); }
  explicit operator bool() const { return passed(); }
  const Witness& witness() const { return *witness_; }

 private:
  std::optional<Witness> witness_;
};

enum class ExchangeKind {
  MConcave,     // f(X) + f(Y) <= f(X - i + j) + f(Y + i - j) for some j
  MnatConcave,  // the above, or f(X) + f(Y) <= f(X - i) + f(Y + i)
  Local,        // the M-concave exchange restricted to |X \ Y| = 2
};

const char* to_string(ExchangeKind kind);

/// X, Y in dom f and i in X \ Y for which the exchange fails for every
/// j in Y \ X. For Local, i is min(X \ Y) and every (i, j) pair fails.
struct ExchangeWitness {
  Subset x = 0;
  Subset y = 0;
  int i = 0;
  ExchangeKind kind = ExchangeKind::MConcave;

  friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

struct CardinalityWitness {
  Subset x = 0;
  Subset y = 0;

  friend bool operator==(const CardinalityWitness&, const CardinalityWitness&) = default;
};

/// |X \ Y| = |Y \ X| >= 2 and no other member of dom f lies in [X n Y, X u Y].
struct DisconnectWitness {
  Subset x = 0;
  Subset y = 0;

  friend bool operator==(const DisconnectWitness&, const DisconnectWitness&) = default;
};

using StructuralWitness = std::variant<CardinalityWitness, DisconnectWitness, ExchangeWitness>;

/// Four conjugate values at a lattice-incomparable pair with
/// g(p) + g(q) < g(p v q) + g(p ^ q).
struct SubmodularViolation {
  PriceVector p, q, join, meet;
  Rational g_p, g_q, g_join, g_meet;
};

Check<CardinalityWitness> check_equicardinal(const SetFn& f);
Check<ExchangeWitness> check_m_concave(const SetFn& f);
Check<ExchangeWitness> check_mnat_concave(const SetFn& f);

/// Throws Error(NotEquicardinal) on a non-equicardinal domain.
Check<DisconnectWitness> check_connected(const SetFn& f);
Check<ExchangeWitness> check_local_exchange(const SetFn& f);

/// Equicardinal, then connected, then local exchange; first failure wins.
Check<StructuralWitness> check_m_via_local_exchange(const SetFn& f);

/// Every (X, Y, i) violating the M-concave exchange, sorted by |Y \ X|, then
/// X, Y, i ascending.
std::vector<ExchangeWitness> find_exchange_failures(const SetFn& f);

/// Checks g(p + a e_i) + g(p + b e_j) >= g(p) + g(p + a e_i + b e_j).
/// Throws Error(InvalidArgument) if i == j, a < 0 or b < 0.
Check<SubmodularViolation> check_unit_submodular_at(const SetFn& f, const PriceVector& p, int i,
                                                   int j, const Rational& a, const Rational& b);

/// Checks g(p) + g(q) >= g(p v q) + g(p ^ q).
Check<SubmodularViolation> check_submodular_pair(const SetFn& f, const PriceVector& p,
                                                const PriceVector& q);

/// Random search over unit perturbations. Prices come from
/// {-2F, -F, -1, 0, 1, F, 2F}, step sizes from {1/2, 1, F}, F = max |f|.
/// Deterministic in seed. Throws Error(InvalidArgument) if trials < 1.
std::optional<SubmodularViolation> falsify_submodularity(const SetFn& f, int trials,
                                                         std::uint64_t seed);

}  // namespace dca

#endif  // DCA_AXIOMS_HPP
