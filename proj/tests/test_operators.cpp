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

#include "am/operators.hpp"
#include "am/oracle.hpp"
#include "fixtures.hpp"

using namespace am;
using namespace am::tests;

TEST_CASE("builtin operators evaluate per their formulas") {
  CHECK(Operator::full(GroundSet(3)).evaluate(Subset::of({2})) ==
        Subset::of({1, 3}));
  CHECK(Operator::max_order(GroundSet(2)).evaluate(Subset::of({2})) ==
        Subset::of({}));
  CHECK(Operator::max_order(GroundSet(3)).evaluate(Subset::of({})) ==
        Subset::of({1, 2, 3}));
  CHECK(Operator::max_order(GroundSet(3)).evaluate(Subset::of({1})) ==
        Subset::of({2, 3}));
  CHECK(p3_operator().evaluate(Subset::of({1})) == Subset::of({2, 3}));
  CHECK(p3_operator().evaluate(Subset::of({2})) == Subset::of({1}));
  CHECK(Operator::chain(GroundSet(3)).evaluate(Subset::of({})) ==
        Subset::of({1}));
  CHECK(Operator::chain(GroundSet(3)).evaluate(Subset::of({1, 2})) ==
        Subset::of({3}));
  CHECK(Operator::chain(GroundSet(3)).evaluate(Subset::of({1, 2, 3})) ==
        Subset::of({}));
}

TEST_CASE("table operators are partial with empty default") {
  const Operator n3 = n3_operator();
  CHECK(n3.evaluate(Subset::of({})) == Subset::of({1, 2}));
  CHECK(n3.evaluate(Subset::of({3})) == Subset::of({}));
  CHECK(n3.evaluate(Subset::of({1, 2, 3})) == Subset::of({}));

  // Entries violating disjointness are rejected at construction.
  OperatorTable bad;
  bad[Subset::of({1})] = Subset::of({1, 2});
  CHECK_THROWS_AS(Operator::table(GroundSet(2), std::move(bad)), DomainError);
}

TEST_CASE("condition zero holds for every kind on every subset") {
  const std::vector<Operator> ops = {
      Operator::full(GroundSet(3)), Operator::max_order(GroundSet(3)),
      Operator::chain(GroundSet(3)), p3_operator(), n3_operator(),
      operator_from_family(p3_family()),
      truncated_operator(p3_operator(), 1)};
  for (const Operator& op : ops)
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
      const Subset x = Subset::from_bits(bits);
      CHECK((op.evaluate(x) & x).empty());
    }
}

TEST_CASE("generate_family matches the worked examples") {
  CHECK(generate_family(Operator::full(GroundSet(2))).family ==
        Family(GroundSet(2), {Subset::of({}), Subset::of({1}),
                              Subset::of({2}), Subset::of({1, 2})}));
  CHECK(generate_family(Operator::chain(GroundSet(3))).family ==
        Family(GroundSet(3), {Subset::of({}), Subset::of({1}),
                              Subset::of({1, 2}), Subset::of({1, 2, 3})}));
  CHECK(generate_family(p3_operator()).family == p3_family());
  CHECK(generate_family(n3_operator()).family == n3_family());
}

TEST_CASE("every generated set carries a parent chain") {
  const Generation gen = generate_family(n3_operator());
  for (Subset s : gen.family) {
    REQUIRE(gen.trace.known(s));
    Subset prev;
    for (const auto& [set, added] : gen.trace.chain_to(s)) {
      CHECK(gen.family.contains(set));
      CHECK(prev.with(added) == set);
      CHECK(n3_operator().evaluate(prev).contains(added));
      prev = set;
    }
    CHECK(prev == s);
  }
}

TEST_CASE("levels produce sets of exactly their size") {
  for (Subset s : generate_family(p3_operator()).family) {
    const auto chain = generate_family(p3_operator()).trace.chain_to(s);
    CHECK(static_cast<int>(chain.size()) == s.size());
  }
}

TEST_CASE("check_isotone finds canonical witnesses") {
  CHECK(!check_isotone(Operator::full(GroundSet(4)),
                       IsotoneScope::all_subsets));
  CHECK(!check_isotone(p3_operator(), IsotoneScope::all_subsets));

  const auto n3_witness =
      check_isotone(n3_operator(), IsotoneScope::all_subsets);
  REQUIRE(n3_witness);
  CHECK(n3_witness->a_set == Subset::of({}));
  CHECK(n3_witness->b_set == Subset::of({2}));
  CHECK(n3_witness->element == 1);

  const auto mo_witness =
      check_isotone(Operator::max_order(GroundSet(2)),
                    IsotoneScope::all_subsets);
  REQUIRE(mo_witness);
  CHECK(mo_witness->a_set == Subset::of({}));
  CHECK(mo_witness->b_set == Subset::of({2}));
  CHECK(mo_witness->element == 1);
}

TEST_CASE("feasible_only scope ignores off-family behaviour") {
  // The chain operator violates the condition on arbitrary subsets but is
  // clean on its own feasible chain.
  const Operator chain_op = Operator::chain(GroundSet(3));
  CHECK(check_isotone(chain_op, IsotoneScope::all_subsets));
  CHECK(!check_isotone(chain_op, IsotoneScope::feasible_only));
  // N3's witness pair is feasible, so it survives the narrower scope.
  CHECK(check_isotone(n3_operator(), IsotoneScope::feasible_only));
}

TEST_CASE("operator_from_family is the basis operator") {
  const Operator psi = operator_from_family(p3_family());
  CHECK(psi.evaluate(Subset::of({2, 3})) == Subset::of({1}));
  CHECK(psi.evaluate(Subset::of({1})) == Subset::of({2, 3}));
  CHECK(psi.evaluate(Subset::of({1, 2, 3})) == Subset::of({}));
  CHECK(!check_isotone(psi, IsotoneScope::all_subsets));
  CHECK(generate_family(psi).family == p3_family());

  CHECK_THROWS_AS(
      operator_from_family(Family(
          GroundSet(2), {Subset::of({}), Subset::of({1}), Subset::of({2})})),
      DomainError);
}

TEST_CASE("theorem-1 round trip on the fixtures") {
  for (const Family& fam : {p3_family(), n3_family()}) {
    REQUIRE(is_antimatroid(fam));
    CHECK(generate_family(operator_from_family(fam)).family == fam);
  }
  for (unsigned seed = 0; seed < 25; ++seed) {
    const Operator op = random_isotone_operator(seed, 5);
    const Family fam = generate_family(op).family;
    CHECK(is_antimatroid(fam));
    CHECK(generate_family(operator_from_family(fam)).family == fam);
  }
}

TEST_CASE("lemma 1: continuations coincide with membership for isotone ops") {
  for (unsigned seed = 100; seed < 120; ++seed) {
    const Operator op = random_isotone_operator(seed, 6);
    const Family fam = generate_family(op).family;
    const Subset full = op.ground().full();
    for (Subset x : fam)
      for (int e : full - x)
        CHECK(fam.contains(x.with(e)) == op.evaluate(x).contains(e));
  }
}

TEST_CASE("isotone operators generating one family agree on it") {
  // The basis operator and the continuation table of the same antimatroid
  // agree on every feasible set; junk off-family entries change nothing.
  for (unsigned seed = 40; seed < 55; ++seed) {
    const Family fam =
        generate_family(random_isotone_operator(seed, 5)).family;
    const Operator basis = operator_from_family(fam);

    OperatorTable gamma;
    for (Subset x : fam) gamma[x] = feasible_continuations(fam, x);
    // Perturb off-family: claim an arbitrary continuation there.
    const Subset full = fam.ground().full();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 5); ++bits) {
      const Subset x = Subset::from_bits(bits);
      if (fam.contains(x) || (full - x).empty()) continue;
      gamma[x] = Subset::of({(full - x).min_element()});
    }
    const Operator table_op = Operator::table(fam.ground(), std::move(gamma));

    CHECK(generate_family(table_op).family == fam);
    for (Subset x : fam) CHECK(table_op.evaluate(x) == basis.evaluate(x));
  }
}

TEST_CASE("truncated operators generate truncations") {
  CHECK(generate_family(truncated_operator(p3_operator(), 1)).family ==
        truncate(p3_family(), 2));
  CHECK(generate_family(truncated_operator(p3_operator(), 7)).family ==
        p3_family());
  CHECK(generate_family(truncated_operator(Operator::chain(GroundSet(3)), 0))
            .family ==
        Family(GroundSet(3), {Subset::of({}), Subset::of({1})}));
  CHECK_THROWS_AS(truncated_operator(p3_operator(), -1), DomainError);
}

TEST_CASE("check_k_isotone") {
  CHECK(!check_k_isotone(truncated_operator(p3_operator(), 1), 1));

  const auto surviving =
      check_k_isotone(truncated_operator(n3_operator(), 1), 1);
  REQUIRE(surviving);
  CHECK(surviving->a_set == Subset::of({}));
  CHECK(surviving->b_set == Subset::of({2}));
  CHECK(surviving->element == 1);

  // An untruncated operator fails the cutoff clause: some |X| >= 2 still
  // has a continuation, reported as a degenerate A == B witness.
  const auto cutoff = check_k_isotone(Operator::full(GroundSet(3)), 1);
  REQUIRE(cutoff);
  CHECK(cutoff->a_set == cutoff->b_set);
  CHECK(cutoff->a_set.size() >= 2);
  CHECK(!Operator::full(GroundSet(3)).evaluate(cutoff->a_set).empty());
}

TEST_CASE("exhaustive sweeps refuse oversized ground sets") {
  const Operator big = Operator::full(GroundSet(17));
  CHECK_THROWS_AS(check_isotone(big, IsotoneScope::all_subsets), DomainError);
  CHECK_THROWS_AS(check_k_isotone(big, 2), DomainError);
  // feasible_only has no such cap; the chain operator keeps the family
  // linear in n.
  CHECK(!check_isotone(Operator::chain(GroundSet(20)),
                       IsotoneScope::feasible_only));
}

TEST_CASE("truncation commutes with generation (section-5 sweep)") {
  for (unsigned seed = 300; seed < 320; ++seed) {
    const Operator op = random_isotone_operator(seed, 6);
    const Family fam = generate_family(op).family;
    for (int k = 1; k <= 6; ++k) {
      const Family trunc =
          generate_family(truncated_operator(op, k - 1)).family;
      CHECK(trunc == truncate(fam, k));
      const Family closed = close_under_union(trunc);
      CHECK(is_accessible(closed));
      CHECK(truncate(closed, k) == trunc);
    }
  }
}
