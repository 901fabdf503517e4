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

#ifndef DCA_CERTIFICATES_HPP
#define DCA_CERTIFICATES_HPP

#include <array>
#include <optional>

#include "dca/axioms.hpp"
#include "dca/set_function.hpp"

namespace dca {

/// Edge weights of K4 in the order 12, 13, 14, 23, 24, 34.
using K4Weights = std::array<ExtValue, 6>;

inline constexpr std::array<std::pair<int, int>, 6> kK4Edges = {
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Optimal dual of the maximum weight perfect matching LP on K4 when
/// {12, 34} is the unique optimum: vertex prices with tight matching edges
/// and strictly slack finite non-matching edges.
struct MatchingDual {
  std::array<Rational, 4> prices;
  /// beta_e = alpha_e - price_u - price_v, -inf kept for absent edges.
  std::array<ExtValue, 6> reduced;
};

/// Closed-form dual. With u = p1 + p3 and v = p1 - p3 the constraints
/// decouple into two open intervals; each coordinate takes its interval
/// midpoint, bound + 1 / bound - 1 when half-open, and the balanced value
/// (a12 + a34)/2, (a12 - a34)/2 when unbounded.
/// Throws Error(UniqueMatchingRequired) unless a12, a34 are finite and
/// a12 + a34 > max(a13 + a24, a14 + a23).
MatchingDual matching_dual(const K4Weights& alpha);

enum class CertificateTarget { OnBase, OnLifted };
enum class Construction { Disconnection, LocalExchange };

const char* to_string(CertificateTarget target);
const char* to_string(Construction construction);

/// Constants used to build a certificate. rail_offset is M^2 |X n Y| for the
/// disconnection construction and M |X n Y| for the local exchange one.
struct CertificateParams {
  Construction construction = Construction::Disconnection;
  Subset x = 0;
  Subset y = 0;
  Rational big_m;
  Rational rail_offset;
  int distance = 0;  // |X \ Y|
  Rational value_bound;  // F
  std::optional<Rational> step;  // a, local exchange only
  std::optional<MatchingDual> dual;
};

/// Price vectors p, q with g(p) + g(q) < g(p v q) + g(p ^ q) for the conjugate
/// g of the target function (the base f, or its lift on N u S).
struct SubmodularityCertificate {
  CertificateTarget target = CertificateTarget::OnBase;
  int slots = 0;  // |S| when OnLifted
  PriceVector p, q;
  Rational g_p, g_q, g_join, g_meet;
  CertificateParams params;

  /// g(p v q) + g(p ^ q) - g(p) - g(q), positive for a valid certificate.
  Rational gap() const { return g_join + g_meet - g_p - g_q; }
};

/// Rails at -M^2 on X n Y and +M^2 outside X u Y confine maximizers to the
/// interval [X n Y, X u Y]; M starts at 4F + n + 2 and doubles until the
/// exact check succeeds (at most 40 doublings).
/// Throws Error(NotEquicardinal), Error(InvalidArgument) for a bad witness,
/// Error(CertificateSearchExhausted).
SubmodularityCertificate disconnection_certificate(const SetFn& f, const DisconnectWitness& witness);

/// Prices agree with the matching dual plus (a, -a, 0, 0) resp. the dual on
/// X \ Y = {x1 < x2}, Y \ X = {y1 < y2}; rails -M on X n Y, +M off X u Y.
/// Throws Error(NotEquicardinal), Error(NotALocalFailure),
/// Error(CertificateSearchExhausted).
SubmodularityCertificate local_exchange_certificate(const SetFn& f, Subset x, Subset y,
                                                    std::optional<Rational> step = std::nullopt);

/// None when f passes the M-natural exchange; otherwise a verified
/// certificate on f (equicardinal domain) or on lift(f) (all other cases).
std::optional<SubmodularityCertificate> certify_not_mnat(const SetFn& f);

/// Recomputes all four conjugate values on the target function and checks
/// they match the recorded ones and the strict inequality holds.
bool verify_certificate(const SetFn& target, const SubmodularityCertificate& cert);

}  // namespace dca

#endif  // DCA_CERTIFICATES_HPP
