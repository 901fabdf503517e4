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

#include "dca/axioms.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <tuple>

#include "dca/error.hpp"

namespace dca {

const char* to_string(ExchangeKind kind) {
  switch (kind) {
    case ExchangeKind::MConcave: return "m";
    case ExchangeKind::MnatConcave: return "mnat";
    case ExchangeKind::Local: return "local";
  }
  return "unknown";
}

namespace {

// Scratch space for f(A) + f(B) >= lhs tests; avoids reallocating
// temporaries in the O(|dom|^2 n^2) scans.
class ExchangeTester {
 public:
  explicit ExchangeTester(const SetFn& f) : f_(f) {}

  void set_pair(Subset x, Subset y) { lhs_ = f_(x).value() + f_(y).value(); }

  bool holds(Subset a, Subset b) {
    if (!f_.in_domain(a) || !f_.in_domain(b)) return false;
    rhs_ = f_(a).value() + f_(b).value();
    return lhs_ <= rhs_;
  }

  /// Some j in Y \ X with f(X) + f(Y) <= f(X - i + j) + f(Y + i - j).
  bool swap_exists(Subset x, Subset y, int i) {
    const Subset bit_i = singleton(i);
    for (Subset rest = y & ~x; rest != 0; rest &= rest - 1) {
      const Subset bit_j = rest & (~rest + 1);
      if (holds((x & ~bit_i) | bit_j, (y | bit_i) & ~bit_j)) return true;
    }
    return false;
  }

 private:
  const SetFn& f_;
  Rational lhs_;
  Rational rhs_;
};

void require_equicardinal(const SetFn& f, const char* what) {
  if (!check_equicardinal(f).passed()) {
    throw Error(ErrorCode::NotEquicardinal,
                std::string(what) + " requires an equicardinal effective domain");
  }
}

bool single_swap_toward(const SetFn& f, Subset x, Subset y) {
  for (Subset out = x & ~y; out != 0; out &= out - 1) {
    const Subset bit_i = out & (~out + 1);
    for (Subset in = y & ~x; in != 0; in &= in - 1) {
      const Subset bit_j = in & (~in + 1);
      if (f.in_domain((y | bit_i) & ~bit_j)) return true;
    }
  }
  return false;
}

}  // namespace

Check<CardinalityWitness> check_equicardinal(const SetFn& f) {
  const auto dom = f.domain();
  const int size = cardinality(dom[0]);
  for (Subset y : dom) {
    if (cardinality(y) != size) return CardinalityWitness{dom[0], y};
  }
  return Check<CardinalityWitness>::pass();
}

Check<ExchangeWitness> check_m_concave(const SetFn& f) {
  ExchangeTester tester(f);
  for (Subset x : f.domain()) {
    for (Subset y : f.domain()) {
      if (x == y) continue;
      tester.set_pair(x, y);
      for (Subset out = x & ~y; out != 0; out &= out - 1) {
        const int i = min_element(out);
        if (!tester.swap_exists(x, y, i)) return ExchangeWitness{x, y, i, ExchangeKind::MConcave};
      }
    }
  }
  return Check<ExchangeWitness>::pass();
}

Check<ExchangeWitness> check_mnat_concave(const SetFn& f) {
  ExchangeTester tester(f);
  for (Subset x : f.domain()) {
    for (Subset y : f.domain()) {
      if (x == y) continue;
      tester.set_pair(x, y);
      for (Subset out = x & ~y; out != 0; out &= out - 1) {
        const int i = min_element(out);
        const Subset bit_i = singleton(i);
        if (tester.holds(x & ~bit_i, y | bit_i)) continue;
        if (!tester.swap_exists(x, y, i)) {
          return ExchangeWitness{x, y, i, ExchangeKind::MnatConcave};
        }
      }
    }
  }
  return Check<ExchangeWitness>::pass();
}

Check<DisconnectWitness> check_connected(const SetFn& f) {
  require_equicardinal(f, "connectedness check");
  for (Subset x : f.domain()) {
    for (Subset y : f.domain()) {
      if (x == y || single_swap_toward(f, x, y)) continue;
      // Shrink toward Y until no other member sits in [X n Y, X u Y]. Any
      // such Z keeps the pair (Z, Y) without a single swap.
      Subset current = x;
      for (bool shrunk = true; shrunk;) {
        shrunk = false;
        const Subset low = current & y;
        const Subset high = current | y;
        for (Subset z : f.domain()) {
          if (z == current || z == y) continue;
          if (is_subset_of(low, z) && is_subset_of(z, high)) {
            current = z;
            shrunk = true;
            break;
          }
        }
      }
      return DisconnectWitness{current, y};
    }
  }
  return Check<DisconnectWitness>::pass();
}

Check<ExchangeWitness> check_local_exchange(const SetFn& f) {
  require_equicardinal(f, "local exchange check");
  ExchangeTester tester(f);
  for (Subset x : f.domain()) {
    for (Subset y : f.domain()) {
      const Subset out = x & ~y;
      if (cardinality(out) != 2) continue;
      tester.set_pair(x, y);
      bool found = false;
      for (Subset rest = out; rest != 0 && !found; rest &= rest - 1) {
        found = tester.swap_exists(x, y, min_element(rest));
      }
      if (!found) return ExchangeWitness{x, y, min_element(out), ExchangeKind::Local};
    }
  }
  return Check<ExchangeWitness>::pass();
}

Check<StructuralWitness> check_m_via_local_exchange(const SetFn& f) {
  if (auto c = check_equicardinal(f); !c) return StructuralWitness(c.witness());
  if (auto c = check_connected(f); !c) return StructuralWitness(c.witness());
  if (auto c = check_local_exchange(f); !c) return StructuralWitness(c.witness());
  return Check<StructuralWitness>::pass();
}

std::vector<ExchangeWitness> find_exchange_failures(const SetFn& f) {
  std::vector<ExchangeWitness> failures;
  ExchangeTester tester(f);
  for (Subset x : f.domain()) {
    for (Subset y : f.domain()) {
      if (x == y) continue;
      tester.set_pair(x, y);
      for (Subset out = x & ~y; out != 0; out &= out - 1) {
        const int i = min_element(out);
        if (!tester.swap_exists(x, y, i)) {
          failures.push_back({x, y, i, ExchangeKind::MConcave});
        }
      }
    }
  }
  std::stable_sort(failures.begin(), failures.end(),
                   [](const ExchangeWitness& a, const ExchangeWitness& b) {
                     return std::tuple(cardinality(a.y & ~a.x), a.x, a.y, a.i) <
                            std::tuple(cardinality(b.y & ~b.x), b.x, b.y, b.i);
                   });
  return failures;
}

Check<SubmodularViolation> check_submodular_pair(const SetFn& f, const PriceVector& p,
                                                const PriceVector& q) {
  if (p.size() != f.n() || q.size() != f.n()) {
    throw Error(ErrorCode::DimensionMismatch, "price vectors must have length n");
  }
  SubmodularViolation v{p, q, p.join(q), p.meet(q), {}, {}, {}, {}};
  v.g_p = conjugate(f, v.p).value;
  v.g_q = conjugate(f, v.q).value;
  v.g_join = conjugate(f, v.join).value;
  v.g_meet = conjugate(f, v.meet).value;
  if (v.g_p + v.g_q >= v.g_join + v.g_meet) return Check<SubmodularViolation>::pass();
  return v;
}

Check<SubmodularViolation> check_unit_submodular_at(const SetFn& f, const PriceVector& p, int i,
                                                   int j, const Rational& a, const Rational& b) {
  if (i == j || !f.ground().contains(i) || !f.ground().contains(j)) {
    throw Error(ErrorCode::InvalidArgument, "unit perturbation needs distinct elements of N");
  }
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::InvalidArgument, "unit perturbation steps must be nonnegative");
  }
  // With a, b >= 0 the join is p + a e_i + b e_j and the meet is p.
  return check_submodular_pair(f, p + PriceVector::unit(f.n(), i, a),
                               p + PriceVector::unit(f.n(), j, b));
}

std::optional<SubmodularViolation> falsify_submodularity(const SetFn& f, int trials,
                                                         std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  const int n = f.n();
  if (n < 2) return std::nullopt;
  const Rational scale = std::max(f.max_abs_value(), Rational(1));
  const std::array<Rational, 7> grid = {-2 * scale, -scale, Rational(-1), Rational(0),
                                        Rational(1), scale,  2 * scale};
  const std::array<Rational, 3> steps = {Rational(1, 2), Rational(1), scale};

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  };
  for (int t = 0; t < trials; ++t) {
    PriceVector p(n);
    for (int e = 1; e <= n; ++e) p[e] = grid[pick(grid.size())];
    const int i = static_cast<int>(pick(static_cast<std::size_t>(n))) + 1;
    int j = static_cast<int>(pick(static_cast<std::size_t>(n - 1))) + 1;
    if (j >= i) ++j;
    const Rational& a = steps[pick(steps.size())];
    const Rational& b = steps[pick(steps.size())];
    if (auto c = check_unit_submodular_at(f, p, i, j, a, b); !c) return c.witness();
  }
  return std::nullopt;
}

}  // namespace dca
