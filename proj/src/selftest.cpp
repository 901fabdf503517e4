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

#include "dca/selftest.hpp"

#include <array>
#include <functional>
#include <random>
#include <string>

#include "dca/axioms.hpp"
#include "dca/certificates.hpp"
#include "dca/error.hpp"
#include "dca/generators.hpp"

namespace dca {

namespace {

constexpr int kSeedsPerFamily = 3;
constexpr int kPerturbationsPerInstance = 4;
constexpr int kMaxLiftedSize = 10;

struct Instance {
  std::string label;
  SetFn f;
};

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    ++result_.violations;
    if (result_.examples.size() < 5) result_.examples.push_back(describe());
  }

  PropertyTally take() { return std::move(result_); }

 private:
  PropertyTally result_;
};

class PriceSampler {
 public:
  explicit PriceSampler(std::uint64_t seed) : rng_(seed) {}

  PriceVector draw(int n, const Rational& scale) {
    const std::array<Rational, 9> grid = {-2 * scale, -scale, Rational(-1), Rational(-1, 2),
                                          Rational(0), Rational(1, 2),   Rational(1),
                                          scale,       2 * scale};
    PriceVector p(n);
    for (int e = 1; e <= n; ++e) p[e] = grid[index(grid.size())];
    return p;
  }

  Rational step(const Rational& scale) {
    const std::array<Rational, 4> steps = {Rational(0), Rational(1, 2), Rational(1), scale};
    return steps[index(steps.size())];
  }

  int element(int n) { return static_cast<int>(index(static_cast<std::size_t>(n))) + 1; }

  std::pair<int, int> distinct_pair(int n) {
    const int i = element(n);
    int j = element(n - 1);
    if (j >= i) ++j;
    return {i, j};
  }

 private:
  std::size_t index(std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
  }

  std::mt19937_64 rng_;
};

Rational price_scale(const SetFn& f) { return std::max(f.max_abs_value(), Rational(1)); }

// Every function with values in {0, 1, 2} on every nonempty domain of 2^N.
void enumerate_small(int n, std::vector<Instance>& out) {
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t dom = 1; dom < (std::size_t{1} << subsets); ++dom) {
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < subsets; ++s) {
      if ((dom >> s) & 1U) members.push_back(s);
    }
    std::size_t assignments = 1;
    for (std::size_t k = 0; k < members.size(); ++k) assignments *= 3;
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<ExtValue> table(subsets);
      std::size_t rest = code;
      for (std::size_t s : members) {
        table[s] = ExtValue(static_cast<long>(rest % 3));
        rest /= 3;
      }
      out.push_back({"enum n=" + std::to_string(n) + " dom=" + std::to_string(dom) +
                         " code=" + std::to_string(code),
                     SetFn(GroundSet(n), std::move(table))});
    }
  }
}

}  // namespace

std::vector<PropertyTally> run_selftest(const SelftestOptions& options) {
  if (options.max_n < 1 || options.max_n > 6) {
    throw Error(ErrorCode::InvalidArgument, "selftest n must lie in 1..6");
  }
  if (options.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");

  std::vector<Instance> instances;
  for (const auto& name : fixture_names()) {
    SetFn f = gen_fixture(name);
    if (f.n() <= options.max_n) instances.push_back({name, std::move(f)});
  }
  std::uint64_t seed = options.seed;
  for (int n = 1; n <= options.max_n; ++n) {
    for (Family family : {Family::CardinalityConcave, Family::UniformMatroid,
                          Family::PartitionMatroid, Family::GraphicMatroid}) {
      for (int k = 0; k < kSeedsPerFamily; ++k) {
        const InstanceSpec spec{family, n, seed++};
        SetFn f = generate(spec);
        const std::string label = std::string(to_string(family)) + " n=" + std::to_string(n) +
                                  " seed=" + std::to_string(spec.seed);
        if (n <= 5) {
          for (int m = 0; m < kPerturbationsPerInstance; ++m) {
            instances.push_back({label + " perturbed " + std::to_string(m),
                                 gen_perturbed(f, Rational(2), seed++)});
          }
        }
        instances.push_back({label, std::move(f)});
      }
    }
  }
  if (options.max_n <= 2) {
    for (int n = 1; n <= options.max_n; ++n) enumerate_small(n, instances);
  }

  Tally unit("unit-submodular (mnat => g submodular)");
  Tally pair("pair-submodular (mnat => g submodular)");
  Tally certified("certificate (not mnat => verified violation)");
  Tally local_route("m-concave <=> equicardinal, connected, local exchange");
  Tally prop_equi("m-concave <=> mnat-concave and equicardinal");
  Tally prop_lift("mnat-concave(f) <=> m-concave(lift f)");
  Tally failures("exchange failure list empty <=> m-concave");
  Tally lifted_formula("lifted conjugate closed form == table conjugate");
  Tally lifted_submod("unit-submodular on lifted conjugate (mnat)");

  PriceSampler sampler(options.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& [label, f] : instances) {
    const bool mnat = check_mnat_concave(f).passed();
    const bool m = check_m_concave(f).passed();
    const bool equi = check_equicardinal(f).passed();
    const Rational scale = price_scale(f);
    auto describe = [&label = label] { return label; };

    local_route.record(m == check_m_via_local_exchange(f).passed(), describe);
    prop_equi.record(m == (mnat && equi), describe);
    failures.record(m == find_exchange_failures(f).empty(), describe);

    if (mnat) {
      for (int t = 0; t < options.trials && f.n() >= 2; ++t) {
        const PriceVector p = sampler.draw(f.n(), scale);
        const auto [i, j] = sampler.distinct_pair(f.n());
        const Rational a = sampler.step(scale);
        const Rational b = sampler.step(scale);
        unit.record(check_unit_submodular_at(f, p, i, j, a, b).passed(), describe);
        const PriceVector q = sampler.draw(f.n(), scale);
        pair.record(check_submodular_pair(f, p, q).passed(), describe);
      }
    } else {
      bool ok = false;
      try {
        const auto cert = certify_not_mnat(f);
        if (cert) {
          ok = cert->target == CertificateTarget::OnBase
                   ? verify_certificate(f, *cert)
                   : verify_certificate(lift(f).lifted, *cert);
        }
      } catch (const Error& e) {
        ok = false;
      }
      certified.record(ok, describe);
    }

    const int slots = f.max_cardinality() - f.min_cardinality() + 2;
    if (f.n() + slots > kMaxLiftedSize) continue;
    const LiftedSetFn lf = lift(f);
    prop_lift.record(mnat == check_m_concave(lf.lifted).passed(), describe);
    const int lifted_n = lf.lifted.n();
    const int samples = std::min(options.trials, 50);
    for (int t = 0; t < samples; ++t) {
      const PriceVector p = sampler.draw(f.n(), scale);
      const PriceVector q = sampler.draw(lf.slots, scale);
      lifted_formula.record(lifted_conjugate(lf, p, q) == conjugate(lf.lifted, p.concat(q)).value,
                            describe);
      if (mnat) {
        const PriceVector pq = p.concat(q);
        const auto [i, j] = sampler.distinct_pair(lifted_n);
        lifted_submod.record(check_unit_submodular_at(lf.lifted, pq, i, j, sampler.step(scale),
                                                      sampler.step(scale))
                                 .passed(),
                             describe);
      }
    }
  }

  std::vector<PropertyTally> out;
  for (Tally* t : {&unit, &pair, &certified, &local_route, &prop_equi, &prop_lift, &failures,
                   &lifted_formula, &lifted_submod}) {
    out.push_back(t->take());
  }
  return out;
}

}  // namespace dca
