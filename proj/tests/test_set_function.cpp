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

#include <random>

#include "dca/error.hpp"
#include "dca/generators.hpp"
#include "dca/set_function.hpp"
#include "support/builders.hpp"
#include "support/oracle.hpp"

using namespace dca;
using dca::testing::make_fn;
using dca::testing::prices;
using dca::testing::q;
using dca::testing::set;

namespace {

SetFn two_point_n2() { return make_fn(2, {{{}, 0}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}}); }

// dom = {{}, {1}} on n = 2.
SetFn short_chain() { return make_fn(2, {{{}, 0}, {{1}, 1}}); }

}  // namespace

TEST_CASE("ExtValue arithmetic and order") {
  const ExtValue inf = ExtValue::neg_inf();
  CHECK((inf + ExtValue(3)).is_neg_inf());
  CHECK((ExtValue(3) + inf).is_neg_inf());
  CHECK(ExtValue(q(1, 2)) + ExtValue(q(1, 3)) == ExtValue(q(5, 6)));
  CHECK(inf < ExtValue(-1000000));
  CHECK(inf == ExtValue::neg_inf());
  CHECK(ExtValue(2) > ExtValue(q(3, 2)));
  CHECK(inf.to_string() == "-inf");
  CHECK(ExtValue(q(-4, 6)).to_string() == "-2/3");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(format_rational(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(" 1"), Error);
}

TEST_CASE("ground set and table validation") {
  CHECK_THROWS_AS(GroundSet(0), Error);
  CHECK_THROWS_AS(GroundSet(21), Error);
  CHECK_THROWS_AS(SetFn(GroundSet(2), std::vector<ExtValue>(4)), Error);
  CHECK_THROWS_AS(SetFn(GroundSet(2), std::vector<ExtValue>(3, ExtValue(0))), Error);
}

TEST_CASE("eval") {
  const SetFn single = make_fn(2, {{{}, 0}});
  CHECK(single.eval(0) == ExtValue(0));

  const SetFn pairs = gen_fixture("pairs-fail");
  CHECK(pairs.eval(set({1, 3})) == ExtValue(0));
  CHECK(pairs.eval(set({1, 2})) == ExtValue(1));
  CHECK(pairs.eval(set({1})).is_neg_inf());
  CHECK(pairs.domain().size() == 6);
  CHECK(pairs.max_cardinality() == 2);
  CHECK(pairs.min_cardinality() == 2);
}

TEST_CASE("conjugate examples") {
  const SetFn single = make_fn(3, {{{}, 0}});
  CHECK(conjugate(single, prices({5, -7, q(1, 3)})).value == 0);

  const SetFn f = two_point_n2();
  CHECK(conjugate(f, prices({0, 0})).value == 1);
  CHECK(conjugate(f, prices({0, 0})).maximizer == set({1}));
  CHECK(conjugate(f, prices({2, 2})).value == 0);
  CHECK(conjugate(f, prices({2, 2})).maximizer == 0);

  const SetFn pairs = gen_fixture("pairs-fail");
  const PriceVector half = prices({q(1, 2), q(1, 2), q(1, 2), q(1, 2)});
  CHECK(conjugate(pairs, half).value == 0);
  CHECK(oracle::brute_conjugate(pairs, half) == 0);

  CHECK_THROWS_AS(conjugate(f, prices({1})), Error);
}

TEST_CASE("tilt examples") {
  const SetFn pairs = gen_fixture("pairs-fail");
  CHECK(tilt(pairs, PriceVector(4)) == pairs);

  const SetFn one = make_fn(1, {{{}, 0}, {{1}, 1}});
  const SetFn tilted_one = tilt(one, prices({-1}));
  CHECK(tilted_one.eval(0) == ExtValue(0));
  CHECK(tilted_one.eval(set({1})) == ExtValue(0));

  const SetFn t = tilt(pairs, prices({1, 0, 0, 0}));
  CHECK(t.eval(set({1, 2})) == ExtValue(2));
  CHECK(t.eval(set({3, 4})) == ExtValue(1));
  CHECK(t.eval(set({1, 3})) == ExtValue(1));
  CHECK(t.eval(set({1, 4})) == ExtValue(1));
  CHECK(t.eval(set({2, 3})) == ExtValue(0));
  CHECK(t.eval(set({2, 4})) == ExtValue(0));
  CHECK(t.eval(set({1})).is_neg_inf());
  CHECK(t.domain().size() == pairs.domain().size());
}

TEST_CASE("lift of a short chain") {
  const LiftedSetFn lf = lift(short_chain());
  CHECK(lf.max_card == 1);
  CHECK(lf.min_card == 0);
  CHECK(lf.slots == 3);
  CHECK(lf.lifted.n() == 5);
  CHECK(lf.lifted.eval(set({1})) == ExtValue(1));
  CHECK(lf.lifted.eval(set({3})) == ExtValue(0));
  CHECK(lf.lifted.eval(set({4})) == ExtValue(0));
  CHECK(lf.lifted.eval(set({5})) == ExtValue(0));
  CHECK(lf.lifted.eval(set({2})).is_neg_inf());
  CHECK(lf.lifted.eval(0).is_neg_inf());
  for (Subset z = 0; z < 32; ++z) {
    if (cardinality(z) != 1) CHECK(lf.lifted.eval(z).is_neg_inf());
  }
  CHECK(lf.slack_mask() == set({3, 4, 5}));
}

TEST_CASE("lift of an equicardinal function only extends by -inf") {
  const SetFn pairs = gen_fixture("pairs-fail");
  const LiftedSetFn lf = lift(pairs);
  CHECK(lf.slots == 2);
  for (Subset z = 0; z < 64; ++z) {
    if (is_subset_of(z, pairs.ground().full())) {
      CHECK(lf.lifted.eval(z) == pairs.eval(z));
    } else {
      CHECK(lf.lifted.eval(z).is_neg_inf());
    }
  }
}

TEST_CASE("lift of a single point") {
  const SetFn single = make_fn(2, {{{}, q(7, 3)}});
  const LiftedSetFn lf = lift(single);
  CHECK(lf.slots == 2);
  CHECK(lf.lifted.eval(0) == ExtValue(q(7, 3)));
  CHECK(lf.lifted.domain().size() == 1);
}

TEST_CASE("lift rejects too few slots and oversized ground sets") {
  CHECK_THROWS_AS(lift(short_chain(), 0), Error);
  CHECK_NOTHROW(lift(short_chain(), 1));
  const SetFn wide = make_fn(18, {{{}, 0}, {{1}, 0}});
  CHECK_THROWS_AS(lift(wide), Error);  // 18 + 3 > 20
  CHECK_NOTHROW(lift(wide, 2));
}

TEST_CASE("lifted conjugate examples") {
  const LiftedSetFn lf = lift(short_chain());
  CHECK(lifted_conjugate(lf, prices({0, 0}), prices({0, 0, 0})) == 1);
  CHECK(lifted_conjugate(lf, prices({0, 0}), prices({5, 5, 5})) == 1);
  CHECK(lifted_conjugate(lf, prices({2, 0}), prices({5, 5, -1})) == 1);  // X = {}, U = {5}
  CHECK_THROWS_AS(lifted_conjugate(lf, prices({0}), prices({0, 0, 0})), Error);

  // q = 0 recovers the base conjugate.
  const SetFn f = two_point_n2();
  const LiftedSetFn lf2 = lift(f);
  for (const auto& p : dca::testing::grid_vectors(2, {-1, 0, q(1, 2), 2})) {
    CHECK(lifted_conjugate(lf2, p, PriceVector(lf2.slots)) == conjugate(f, p).value);
  }
}

TEST_CASE("lifted conjugate equals the table conjugate on exhaustive grids") {
  const std::vector<Rational> grid = {-1, 0, q(1, 2)};
  for (const SetFn& f : {short_chain(), two_point_n2(), gen_fixture("nonequi-fail"),
                         make_fn(3, {{{}, 1}, {{1, 2, 3}, 0}, {{2}, q(-1, 2)}})}) {
    const LiftedSetFn lf = lift(f);
    REQUIRE(lf.lifted.n() <= 8);
    for (const auto& pq : dca::testing::grid_vectors(lf.lifted.n(), grid)) {
      std::vector<Rational> head(pq.entries().begin(), pq.entries().begin() + f.n());
      std::vector<Rational> tail(pq.entries().begin() + f.n(), pq.entries().end());
      CHECK(lifted_conjugate(lf, PriceVector(head), PriceVector(tail)) ==
            oracle::brute_conjugate(lf.lifted, pq));
    }
  }
}

TEST_CASE("lift then restrict recovers f") {
  const SetFn f = make_fn(3, {{{}, 1}, {{1, 2, 3}, 0}, {{2}, q(-1, 2)}, {{1, 3}, 4}});
  const LiftedSetFn lf = lift(f);
  const Subset slack = lf.slack_mask();
  for (Subset x : f.domain()) {
    for (Subset u = slack;; u = (u - 1) & slack) {
      if (cardinality(u) == lf.max_card - cardinality(x)) {
        CHECK(lf.lifted.eval(x | u) == f.eval(x));
      }
      if (u == 0) break;
    }
  }
}

TEST_CASE("conjugate properties on random functions") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> value(-6, 6);
  std::uniform_int_distribution<int> coin(0, 2);
  const std::vector<Rational> grid = {-2, q(-1, 2), 0, 1, q(5, 3)};
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);

  for (int round = 0; round < 60; ++round) {
    const int n = 1 + round % 4;
    std::vector<ExtValue> table(std::size_t{1} << n);
    table[0] = ExtValue(value(rng));
    for (std::size_t s = 1; s < table.size(); ++s) {
      if (coin(rng) != 0) table[s] = ExtValue(value(rng));
    }
    const SetFn f(GroundSet(n), table);
    auto draw = [&] {
      PriceVector p(n);
      for (int e = 1; e <= n; ++e) p[e] = grid[pick(rng)];
      return p;
    };
    for (int t = 0; t < 20; ++t) {
      const PriceVector p = draw();
      const PriceVector shift = draw();
      const ConjugateValue g = conjugate(f, p);
      CHECK(g.value == oracle::brute_conjugate(f, p));
      // Upper bound with equality at the reported maximizer.
      for (Subset x : f.domain()) CHECK(g.value >= f(x).value() - p.sum_over(x));
      CHECK(g.value == f(g.maximizer).value() - p.sum_over(g.maximizer));
      // Monotone nonincreasing.
      PriceVector bigger = p;
      for (int e = 1; e <= n; ++e) bigger[e] += abs(shift[e]);
      CHECK(conjugate(f, bigger).value <= g.value);
      // Translation.
      CHECK(conjugate(tilt(f, shift), p).value == conjugate(f, p - shift).value);
    }
  }
}
