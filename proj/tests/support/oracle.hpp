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

// Reference implementations used only by tests. They walk subsets as sorted
// element lists and never touch the library's domain cache, price sums or
// scan order, so they stay independent of the code they check.

#ifndef DCA_TESTS_ORACLE_HPP
#define DCA_TESTS_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "dca/set_function.hpp"

namespace dca::oracle {

using ElementSet = std::set<int>;

inline ExtValue value_at(const SetFn& f, const ElementSet& s) {
  const std::vector<int> members(s.begin(), s.end());
  return f.eval(subset_of(members, f.n()));
}

/// All subsets of {1..n} as element sets.
inline std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  ElementSet current;
  std::function<void(int)> walk = [&](int e) {
    if (e > n) {
      out.push_back(current);
      return;
    }
    walk(e + 1);
    current.insert(e);
    walk(e + 1);
    current.erase(e);
  };
  walk(1);
  return out;
}

/// max over X of f(X) - sum_{i in X} price[i-1].
inline Rational brute_conjugate(const SetFn& f, const std::vector<Rational>& price) {
  std::optional<Rational> best;
  for (const auto& s : all_subsets(f.n())) {
    const ExtValue v = value_at(f, s);
    if (!v.is_finite()) continue;
    Rational total = v.value();
    for (int e : s) total -= price[static_cast<std::size_t>(e - 1)];
    if (!best || total > *best) best = total;
  }
  return *best;
}

/// Conjugate of the slack extension on N u {n+1..n+slots}: maximize
/// f(Z n N) - price(Z) over Z with |Z| = r, r the largest |X| in dom f.
/// Built from f directly, without the library's lift.
inline Rational brute_lifted_conjugate(const SetFn& f, int slots,
                                       const std::vector<Rational>& price) {
  std::size_t r = 0;
  for (const auto& s : all_subsets(f.n())) {
    if (value_at(f, s).is_finite()) r = std::max(r, s.size());
  }
  std::optional<Rational> best;
  for (const auto& z : all_subsets(f.n() + slots)) {
    if (z.size() != r) continue;
    ElementSet base;
    for (int e : z) {
      if (e <= f.n()) base.insert(e);
    }
    const ExtValue v = value_at(f, base);
    if (!v.is_finite()) continue;
    Rational total = v.value();
    for (int e : z) total -= price[static_cast<std::size_t>(e - 1)];
    if (!best || total > *best) best = total;
  }
  return *best;
}

inline Rational brute_conjugate(const SetFn& f, const PriceVector& p) {
  return brute_conjugate(f, std::vector<Rational>(p.entries().begin(), p.entries().end()));
}

/// g(p) + g(q) < g(p v q) + g(p ^ q) with all four values brute-forced.
inline bool brute_violates(const SetFn& f, const PriceVector& p, const PriceVector& q) {
  std::vector<Rational> join, meet;
  for (int e = 1; e <= f.n(); ++e) {
    join.push_back(p[e] > q[e] ? p[e] : q[e]);
    meet.push_back(p[e] < q[e] ? p[e] : q[e]);
  }
  return brute_conjugate(f, p) + brute_conjugate(f, q) <
         brute_conjugate(f, join) + brute_conjugate(f, meet);
}

inline std::vector<ElementSet> effective_domain(const SetFn& f) {
  std::vector<ElementSet> dom;
  for (const auto& s : all_subsets(f.n())) {
    if (value_at(f, s).is_finite()) dom.push_back(s);
  }
  return dom;
}

inline ElementSet minus(ElementSet s, int e) {
  s.erase(e);
  return s;
}

inline ElementSet plus(ElementSet s, int e) {
  s.insert(e);
  return s;
}

/// Direct transcription of the exchange axioms; allow_drop adds the
/// f(X - i) + f(Y + i) alternative.
inline bool naive_exchange(const SetFn& f, bool allow_drop) {
  const auto dom = effective_domain(f);
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      const ExtValue lhs = value_at(f, x) + value_at(f, y);
      for (int i : x) {
        if (y.count(i)) continue;
        bool ok = allow_drop && lhs <= value_at(f, minus(x, i)) + value_at(f, plus(y, i));
        for (int j : y) {
          if (ok) break;
          if (x.count(j)) continue;
          ok = lhs <= value_at(f, plus(minus(x, i), j)) + value_at(f, minus(plus(y, i), j));
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

inline bool naive_m_concave(const SetFn& f) { return naive_exchange(f, false); }
inline bool naive_mnat_concave(const SetFn& f) { return naive_exchange(f, true); }

}  // namespace dca::oracle

#endif  // DCA_TESTS_ORACLE_HPP
