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

#include <set>

#include "am/oracle.hpp"
#include "fixtures.hpp"

using namespace am;
using namespace am::tests;

TEST_CASE("enumerate_feasible matches the generator") {
  CHECK(enumerate_feasible(p3_operator()) == p3_family());
  CHECK(enumerate_feasible(n3_operator()) == n3_family());
  CHECK(enumerate_feasible(Operator::full(GroundSet(3))).size() == 8);
  CHECK(enumerate_feasible(Operator::chain(GroundSet(3))).size() == 4);

  OracleBudget tight;
  tight.max_ground = 2;
  CHECK_THROWS_AS(enumerate_feasible(p3_operator(), tight), BudgetError);
}

TEST_CASE("differential: independent enumeration equals generation") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const Operator op = random_isotone_operator(seed, n);
    CHECK(enumerate_feasible(op) == generate_family(op).family);
  }
  for (unsigned seed = 0; seed < 50; ++seed) {
    const NonIsotoneInstance inst = random_nonisotone_operator(seed, 5);
    CHECK(enumerate_feasible(inst.op) == generate_family(inst.op).family);
  }
}

TEST_CASE("brute_max_F_psi on the fixtures") {
  const BruteMaxResult p3 = brute_max_F_psi(p3_operator(), w136_linkage());
  CHECK(p3.value == 4);
  REQUIRE(p3.argmax.size() == 1);
  CHECK(p3.argmax.sets()[0] == Subset::of({1, 3}));

  const Generation gen = generate_family(n3_operator());
  const Linkage fail = failure_linkage(
      n3_operator(), IsotoneWitness{Subset::of({}), Subset::of({2}), 1},
      gen.trace);
  const BruteMaxResult n3 = brute_max_F_psi(n3_operator(), fail);
  CHECK(n3.value == 2);
  REQUIRE(n3.argmax.size() == 1);
  CHECK(n3.argmax.sets()[0] == Subset::of({2}));

  LinkageTable t;
  t[{1, Subset::of({})}] = 6.5;
  const BruteMaxResult one = brute_max_F_psi(
      Operator::full(GroundSet(1)), Linkage::table(GroundSet(1), t));
  CHECK(one.value == 6.5);
  REQUIRE(one.argmax.size() == 1);
  CHECK(one.argmax.sets()[0] == Subset::of({}));
}

TEST_CASE("brute_max_F_psi rejects operators stuck mid-family") {
  // {} -> {1} -> {1,2} is feasible, but Psi({1}) was emptied although
  // {1,2} stays reachable through {2}.
  OperatorTable t;
  t[Subset::of({})] = Subset::of({1, 2});
  t[Subset::of({2})] = Subset::of({1});
  const Operator op = Operator::table(GroundSet(2), std::move(t));
  CHECK_THROWS_WITH_AS(brute_max_F_psi(op, w136_linkage()),
                       doctest::Contains("{1}"), DomainError);
}

TEST_CASE("find_stuck_set") {
  OperatorTable t;
  t[Subset::of({})] = Subset::of({1, 2});
  t[Subset::of({2})] = Subset::of({1});
  const Operator op = Operator::table(GroundSet(2), std::move(t));
  const auto stuck = find_stuck_set(op, enumerate_feasible(op));
  REQUIRE(stuck);
  CHECK(*stuck == Subset::of({1}));

  CHECK(!find_stuck_set(p3_operator(), p3_family()));
  CHECK(!find_stuck_set(truncated_operator(p3_operator(), 1),
                        truncate(p3_family(), 2)));
}

TEST_CASE("brute_minimax_W on the fixture") {
  const NestingFunction f([pi = w136_linkage()](int x, Subset a_set) {
    return pi.value(x, a_set.without(x));
  });
  const BruteMinimaxResult k3 = brute_minimax_W(p3_operator(), f, 3);
  CHECK(k3.value == 4);
  REQUIRE(k3.words.size() == 1);
  CHECK(k3.words[0] == Word({1, 3, 2}));

  const BruteMinimaxResult k2 = brute_minimax_W(p3_operator(), f, 2);
  CHECK(k2.value == 2);
  REQUIRE(k2.words.size() == 1);
  CHECK(k2.words[0] == Word({1, 3}));

  CHECK_THROWS_AS(brute_minimax_W(p3_operator(), f, 0), DomainError);
  CHECK_THROWS_AS(brute_minimax_W(p3_operator(), f, 4), DomainError);

  OracleBudget tiny;
  tiny.max_words = 3;
  CHECK_THROWS_AS(brute_minimax_W(p3_operator(), f, 3, tiny), BudgetError);
}

TEST_CASE("random_isotone_operator is deterministic and sound") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    const Operator op = random_isotone_operator(seed, 5);
    CHECK(!check_isotone(op, IsotoneScope::all_subsets));
    CHECK(is_antimatroid(generate_family(op).family));
  }
  CHECK(generate_family(random_isotone_operator(7, 5)).family ==
        generate_family(random_isotone_operator(7, 5)).family);

  // Distinctness across seeds.
  std::set<std::vector<std::uint64_t>> seen;
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::vector<std::uint64_t> key;
    for (Subset s : generate_family(random_isotone_operator(seed, 5)).family)
      key.push_back(s.bits());
    seen.insert(std::move(key));
  }
  CHECK(seen.size() >= 2);

  CHECK_THROWS_AS(random_isotone_operator(1, 9), DomainError);
}

TEST_CASE("random_monotone_linkage is deterministic and monotone") {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const int levels = 1 + static_cast<int>(seed % 5);
    const Linkage pi = random_monotone_linkage(seed, 5, levels);
    CHECK(!check_monotone(pi));
  }
  CHECK(*random_monotone_linkage(3, 4, 2).table_entries() ==
        *random_monotone_linkage(3, 4, 2).table_entries());
  CHECK_THROWS_AS(random_monotone_linkage(1, 4, 0), DomainError);
}

TEST_CASE("levels = 1 gives a constant-per-element linkage") {
  const Linkage pi = random_monotone_linkage(11, 4, 1);
  const Subset full = GroundSet(4).full();
  for (int x = 1; x <= 4; ++x) {
    const double base = pi.value(x, Subset{});
    const std::uint64_t comp = full.without(x).bits();
    for (std::uint64_t m = comp;; m = (m - 1) & comp) {
      CHECK(pi.value(x, Subset::from_bits(m)) == base);
      if (m == 0) break;
    }
  }
}

TEST_CASE("random_nonisotone_operator produces genuine feasible witnesses") {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const NonIsotoneInstance inst = random_nonisotone_operator(seed, 5);
    const auto& [op, w] = inst;
    CHECK(w.a_set.proper_subset_of(w.b_set));
    CHECK(op.evaluate(w.a_set).contains(w.element));
    CHECK(!op.evaluate(w.b_set).contains(w.element));
    CHECK(!w.b_set.contains(w.element));

    const Family fam = generate_family(op).family;
    CHECK(fam.contains(w.a_set));
    CHECK(fam.contains(w.b_set));
    CHECK(!op.evaluate(w.b_set).empty());
    CHECK(!find_stuck_set(op, fam));

    const auto found = check_isotone(op, IsotoneScope::all_subsets);
    CHECK(found);
  }
  CHECK_THROWS_AS(random_nonisotone_operator(1, 2), DomainError);
}
