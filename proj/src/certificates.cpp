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

#include "dca/certificates.hpp"

#include <algorithm>
#include <string>

#include "dca/error.hpp"

namespace dca {

const char* to_string(CertificateTarget target) {
  return target == CertificateTarget::OnBase ? "on-base" : "on-lifted";
}

const char* to_string(Construction construction) {
  return construction == Construction::Disconnection ? "disconnection" : "local-exchange";
}

namespace {

constexpr int kMaxDoublings = 40;

// Open interval with optional ends; nullopt is -inf / +inf respectively.
struct OpenInterval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  Rational pick(const Rational& unbounded_choice) const {
    if (lower && upper) return (*lower + *upper) / 2;
    if (lower) return *lower + 1;
    if (upper) return *upper - 1;
    return unbounded_choice;
  }
};

std::optional<Rational> finite(const ExtValue& v) {
  if (v.is_finite()) return v.value();
  return std::nullopt;
}

bool has_unique_matching(const K4Weights& a) {
  if (!a[0].is_finite() || !a[5].is_finite()) return false;
  const ExtValue matched = a[0] + a[5];
  return matched > a[1] + a[4] && matched > a[2] + a[3];
}

Rational initial_big_m(const SetFn& f) { return 4 * f.max_abs_value() + f.n() + 2; }

SubmodularityCertificate make_certificate(const SubmodularViolation& v, CertificateParams params) {
  SubmodularityCertificate cert;
  cert.p = v.p;
  cert.q = v.q;
  cert.g_p = v.g_p;
  cert.g_q = v.g_q;
  cert.g_join = v.g_join;
  cert.g_meet = v.g_meet;
  cert.params = std::move(params);
  return cert;
}

SubmodularityCertificate certify_equicardinal(const SetFn& f) {
  if (auto c = check_connected(f); !c) return disconnection_certificate(f, c.witness());
  if (auto c = check_local_exchange(f); !c) {
    return local_exchange_certificate(f, c.witness().x, c.witness().y);
  }
  throw Error(ErrorCode::CertificateSearchExhausted,
              "function is connected and locally exchangeable but failed the exchange check");
}

}  // namespace

MatchingDual matching_dual(const K4Weights& alpha) {
  if (!has_unique_matching(alpha)) {
    throw Error(ErrorCode::UniqueMatchingRequired,
                "{12, 34} is not the unique maximum weight perfect matching");
  }
  const Rational& a12 = alpha[0].value();
  const Rational& a34 = alpha[5].value();
  const auto a13 = finite(alpha[1]);
  const auto a14 = finite(alpha[2]);
  const auto a23 = finite(alpha[3]);
  const auto a24 = finite(alpha[4]);

  // u = p1 + p3 and v = p1 - p3; every non-matching edge bounds exactly one.
  OpenInterval u_range;
  if (a13) u_range.lower = *a13;
  if (a24) u_range.upper = a12 + a34 - *a24;
  OpenInterval v_range;
  if (a14) v_range.lower = *a14 - a34;
  if (a23) v_range.upper = a12 - *a23;

  const Rational u = u_range.pick((a12 + a34) / 2);
  const Rational v = v_range.pick((a12 - a34) / 2);

  MatchingDual dual;
  dual.prices[0] = (u + v) / 2;
  dual.prices[1] = a12 - dual.prices[0];
  dual.prices[2] = (u - v) / 2;
  dual.prices[3] = a34 - dual.prices[2];
  for (std::size_t e = 0; e < kK4Edges.size(); ++e) {
    const auto [s, t] = kK4Edges[e];
    dual.reduced[e] = alpha[e] - (dual.prices[static_cast<std::size_t>(s - 1)] +
                                  dual.prices[static_cast<std::size_t>(t - 1)]);
  }
  return dual;
}

SubmodularityCertificate disconnection_certificate(const SetFn& f,
                                                   const DisconnectWitness& witness) {
  if (!check_equicardinal(f)) {
    throw Error(ErrorCode::NotEquicardinal, "disconnection certificate needs equal cardinalities");
  }
  const Subset x = witness.x;
  const Subset y = witness.y;
  const Subset x_only = x & ~y;
  const Subset y_only = y & ~x;
  const Subset common = x & y;
  const Subset outside = f.ground().full() & ~(x | y);
  if (x > f.ground().full() || y > f.ground().full() || !f.in_domain(x) || !f.in_domain(y) ||
      cardinality(x_only) < 2 || cardinality(x_only) != cardinality(y_only)) {
    throw Error(ErrorCode::InvalidArgument, "not a disconnection witness");
  }
  for (Subset z : f.domain()) {
    if (z != x && z != y && is_subset_of(common, z) && is_subset_of(z, x | y)) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a disconnection witness: " + format_subset(z) + " lies between");
    }
  }

  const int i0 = min_element(x_only);
  const int j0 = min_element(y_only);
  Rational big_m = initial_big_m(f);
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, big_m *= 2) {
    const Rational rail = big_m * big_m;
    PriceVector p(f.n());
    PriceVector q(f.n());
    for (int e = 1; e <= f.n(); ++e) {
      if (contains(x_only, e)) {
        p[e] = e == i0 ? Rational(-big_m) : Rational(0);
        q[e] = e == i0 ? Rational(0) : Rational(-big_m);
      } else if (contains(y_only, e)) {
        p[e] = q[e] = e == j0 ? Rational(-big_m) : Rational(0);
      } else if (contains(common, e)) {
        p[e] = q[e] = -rail;
      } else if (contains(outside, e)) {
        p[e] = q[e] = rail;
      }
    }
    if (auto c = check_submodular_pair(f, p, q); !c) {
      CertificateParams params;
      params.construction = Construction::Disconnection;
      params.x = x;
      params.y = y;
      params.big_m = big_m;
      params.rail_offset = rail * cardinality(common);
      params.distance = cardinality(x_only);
      params.value_bound = f.max_abs_value();
      return make_certificate(c.witness(), std::move(params));
    }
  }
  throw Error(ErrorCode::CertificateSearchExhausted,
              "no disconnection certificate after " + std::to_string(kMaxDoublings) + " doublings");
}

SubmodularityCertificate local_exchange_certificate(const SetFn& f, Subset x, Subset y,
                                                    std::optional<Rational> step) {
  if (!check_equicardinal(f)) {
    throw Error(ErrorCode::NotEquicardinal, "local exchange certificate needs equal cardinalities");
  }
  const Subset x_only = x & ~y;
  const Subset y_only = y & ~x;
  const Subset common = x & y;
  if (x > f.ground().full() || y > f.ground().full() || !f.in_domain(x) || !f.in_domain(y) ||
      cardinality(x_only) != 2 || cardinality(y_only) != 2) {
    throw Error(ErrorCode::NotALocalFailure, "need X, Y in dom f with |X \\ Y| = |Y \\ X| = 2");
  }
  // Relabel X \ Y -> {1, 2}, Y \ X -> {3, 4}.
  const std::array<int, 4> label = {min_element(x_only), min_element(x_only & (x_only - 1)),
                                    min_element(y_only), min_element(y_only & (y_only - 1))};
  K4Weights alpha;
  for (std::size_t e = 0; e < kK4Edges.size(); ++e) {
    const auto [s, t] = kK4Edges[e];
    alpha[e] = f(common | singleton(label[static_cast<std::size_t>(s - 1)]) |
                 singleton(label[static_cast<std::size_t>(t - 1)]));
  }
  if (!has_unique_matching(alpha)) {
    throw Error(ErrorCode::NotALocalFailure,
                "local exchange holds for " + format_subset(x) + ", " + format_subset(y));
  }
  MatchingDual dual = matching_dual(alpha);

  std::optional<Rational> slack;
  for (std::size_t e : {1, 2, 3, 4}) {
    if (!dual.reduced[e].is_finite()) continue;
    const Rational gap = abs(dual.reduced[e].value());
    if (!slack || gap < *slack) slack = gap;
  }
  const Rational max_step = slack.value_or(Rational(1));
  const Rational a = step.value_or(max_step);
  if (a <= 0 || a > max_step) {
    throw Error(ErrorCode::InvalidArgument,
                "step must lie in (0, " + format_rational(max_step) + "]");
  }

  const Subset outside = f.ground().full() & ~(x | y);
  Rational big_m = initial_big_m(f);
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, big_m *= 2) {
    PriceVector base(f.n());
    for (int e = 1; e <= f.n(); ++e) {
      if (contains(common, e)) base[e] = -big_m;
      if (contains(outside, e)) base[e] = big_m;
    }
    for (std::size_t k = 0; k < 4; ++k) base[label[k]] = dual.prices[k];
    PriceVector p = base;
    p[label[0]] += a;
    p[label[1]] -= a;
    if (auto c = check_submodular_pair(f, p, base); !c) {
      CertificateParams params;
      params.construction = Construction::LocalExchange;
      params.x = x;
      params.y = y;
      params.big_m = big_m;
      params.rail_offset = big_m * cardinality(common);
      params.distance = 2;
      params.value_bound = f.max_abs_value();
      params.step = a;
      params.dual = dual;
      return make_certificate(c.witness(), std::move(params));
    }
  }
  throw Error(ErrorCode::CertificateSearchExhausted,
              "no local exchange certificate after " + std::to_string(kMaxDoublings) +
                  " doublings");
}

std::optional<SubmodularityCertificate> certify_not_mnat(const SetFn& f) {
  if (check_mnat_concave(f)) return std::nullopt;
  if (check_equicardinal(f)) return certify_equicardinal(f);

  const LiftedSetFn lf = lift(f);
  SubmodularityCertificate cert = certify_equicardinal(lf.lifted);
  cert.target = CertificateTarget::OnLifted;
  cert.slots = lf.slots;

  // The lifted conjugate has a closed form over dom f; both routes must agree.
  auto split = [&](const PriceVector& v) {
    std::vector<Rational> head(v.entries().begin(), v.entries().begin() + f.n());
    std::vector<Rational> tail(v.entries().begin() + f.n(), v.entries().end());
    return lifted_conjugate(lf, PriceVector(std::move(head)), PriceVector(std::move(tail)));
  };
  const PriceVector join = cert.p.join(cert.q);
  const PriceVector meet = cert.p.meet(cert.q);
  if (split(cert.p) != cert.g_p || split(cert.q) != cert.g_q || split(join) != cert.g_join ||
      split(meet) != cert.g_meet) {
    throw Error(ErrorCode::CertificateSearchExhausted,
                "lifted conjugate routes disagree on the certificate");
  }
  return cert;
}

bool verify_certificate(const SetFn& target, const SubmodularityCertificate& cert) {
  if (cert.p.size() != target.n() || cert.q.size() != target.n()) return false;
  const Rational g_p = conjugate(target, cert.p).value;
  const Rational g_q = conjugate(target, cert.q).value;
  const Rational g_join = conjugate(target, cert.p.join(cert.q)).value;
  const Rational g_meet = conjugate(target, cert.p.meet(cert.q)).value;
  return g_p == cert.g_p && g_q == cert.g_q && g_join == cert.g_join && g_meet == cert.g_meet &&
         g_p + g_q < g_join + g_meet;
}

}  // namespace dca
