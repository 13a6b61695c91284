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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "am/chain.hpp"
#include "am/oracle.hpp"
#include "fixtures.hpp"

using namespace am;
using namespace am::tests;

TEST_CASE("chain run on the poset fixture") {
  const OptResult r = run_chain(p3_operator(), w136_linkage());
  CHECK(r.optimum == Subset::of({1, 3}));
  CHECK(r.value == 4);
  REQUIRE(r.trace.steps.size() == 3);
  CHECK(r.trace.steps[0].set == Subset::of({}));
  CHECK(r.trace.steps[0].value == 1);
  CHECK(r.trace.steps[0].chosen == 1);
  CHECK(r.trace.steps[1].set == Subset::of({1}));
  CHECK(r.trace.steps[1].value == 2);
  CHECK(r.trace.steps[1].chosen == 3);
  CHECK(r.trace.steps[2].set == Subset::of({1, 3}));
  CHECK(r.trace.steps[2].value == 4);
  CHECK(r.trace.steps[2].chosen == 2);
  CHECK(r.trace.terminal == Subset::of({1, 2, 3}));
  CHECK(verify_against_oracle(p3_operator(), w136_linkage(), r));
}

TEST_CASE("decreasing objectives keep the empty set optimal") {
  // pi(x, X) = (3 - |X|) + x / 10 decreases along every chain.
  LinkageTable t;
  const GroundSet g(3);
  for (int x = 1; x <= 3; ++x) {
    const std::uint64_t comp = g.full().without(x).bits();
    for (std::uint64_t m = comp;; m = (m - 1) & comp) {
      const Subset set = Subset::from_bits(m);
      t[{x, set}] = (3 - set.size()) + x / 10.0;
      if (m == 0) break;
    }
  }
  const Linkage pi = Linkage::table(g, std::move(t));
  REQUIRE(!check_monotone(pi));
  const OptResult r = run_chain(Operator::full(g), pi);
  CHECK(r.optimum == Subset::of({}));
  CHECK(r.value == 3.1);
  CHECK(verify_against_oracle(Operator::full(g), pi, r));
}

TEST_CASE("failure linkage defeats the chain on a non-isotone operator") {
  const Operator n3 = n3_operator();
  const Generation gen = generate_family(n3);
  const Linkage pi = failure_linkage(
      n3, IsotoneWitness{Subset::of({}), Subset::of({2}), 1}, gen.trace);

  const OptResult r = run_chain(n3, pi);
  CHECK(r.value == 1);
  for (const ChainStep& s : r.trace.steps) CHECK(s.value == 1);

  const BruteMaxResult oracle = brute_max_F_psi(n3, pi);
  CHECK(oracle.value == 2);
  CHECK(oracle.argmax.contains(Subset::of({2})));
  CHECK(!verify_against_oracle(n3, pi, r));
}

TEST_CASE("chain start requires a continuation") {
  OperatorTable empty_table;
  const Operator stuck = Operator::table(GroundSet(2), std::move(empty_table));
  CHECK_THROWS_AS(run_chain(stuck, w136_linkage()), DomainError);
}

TEST_CASE("single-element ground set") {
  LinkageTable t;
  t[{1, Subset::of({})}] = 2.5;
  const Linkage pi = Linkage::table(GroundSet(1), std::move(t));
  const OptResult r = run_chain(Operator::full(GroundSet(1)), pi);
  CHECK(r.optimum == Subset::of({}));
  CHECK(r.value == 2.5);
  CHECK(verify_against_oracle(Operator::full(GroundSet(1)), pi, r));
}

TEST_CASE("theorem-3 forward on random instances") {
  for (unsigned seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const Operator op = random_isotone_operator(seed, n);
    const Linkage pi =
        random_monotone_linkage(seed + 1000, n, 1 + static_cast<int>(seed % 3));
    const OptResult r = run_chain(op, pi);
    CHECK(r.value == brute_max_F_psi(op, pi).value);
  }
}

TEST_CASE("theorem-3 converse on random non-isotone instances") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const NonIsotoneInstance inst = random_nonisotone_operator(seed, n);
    const Generation gen = generate_family(inst.op);
    const Linkage pi = failure_linkage(inst.op, inst.witness, gen.trace);
    const OptResult r = run_chain(inst.op, pi);
    const BruteMaxResult oracle = brute_max_F_psi(inst.op, pi);
    CHECK(r.value == 1);
    CHECK(oracle.value == 2);
    CHECK(r.value < oracle.value);
  }
}

TEST_CASE("chain dominance inequality along the produced trace") {
  for (unsigned seed = 500; seed < 520; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Operator op = random_isotone_operator(seed, n);
    const Linkage pi = random_monotone_linkage(seed + 7, n, 2);
    const OptResult r = run_chain(op, pi);
    const Family fam = generate_family(op).family;

    for (Subset x : fam) {
      if (op.evaluate(x).empty()) continue;
      if (r.trace.terminal.subset_of(x)) continue;
      // First chain prefix not inside x.
      std::size_t j = 0;
      while (j < r.trace.steps.size() &&
             r.trace.steps[j].set.with(r.trace.steps[j].chosen).subset_of(x))
        ++j;
      REQUIRE(j < r.trace.steps.size());
      const ChainStep& step = r.trace.steps[j];
      const int elem = step.chosen;
      CHECK(objective_F_psi(pi, op, x).value <= pi.value(elem, x));
      CHECK(pi.value(elem, x) <= pi.value(elem, step.set));
      CHECK(pi.value(elem, step.set) == step.value);
    }
  }
}

TEST_CASE("determinism: identical inputs give identical traces") {
  const OptResult a = run_chain(p3_operator(), w136_linkage());
  const OptResult b = run_chain(p3_operator(), w136_linkage());
  REQUIRE(a.trace.steps.size() == b.trace.steps.size());
  for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
    CHECK(a.trace.steps[i].set == b.trace.steps[i].set);
    CHECK(a.trace.steps[i].chosen == b.trace.steps[i].chosen);
    CHECK(a.trace.steps[i].value == b.trace.steps[i].value);
  }
  CHECK(a.trace.linkage_evaluations == b.trace.linkage_evaluations);
}

TEST_CASE("evaluation count stays within n(n+1)") {
  for (unsigned seed = 900; seed < 930; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const Operator op = random_isotone_operator(seed, n);
    const Linkage pi = random_monotone_linkage(seed, n, 2);
    const OptResult r = run_chain(op, pi);
    CHECK(r.trace.linkage_evaluations <= static_cast<long>(n) * (n + 1));
  }
}
