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

#ifndef AM_TESTS_FIXTURES_HPP
#define AM_TESTS_FIXTURES_HPP

#include "am/linkage.hpp"
#include "am/operators.hpp"
#include "am/poset.hpp"

// Canonical fixtures shared across the suite.
//
// P3: the poset-minimum operator on n = 3 with covers 1 < 2 and 1 < 3.
//     Its generated family is { {}, {1}, {1,2}, {1,3}, {1,2,3} }.
// W136: the linkage pi(x, X) = w_x - |X| with weights (1, 6, 3).
// N3: a table operator that is not isotone, with canonical witness
//     ({}, {2}, 1); it still generates an antimatroid of seven sets.

namespace am::tests {

inline Operator p3_operator() {
  return Operator::poset_min(Poset(GroundSet(3), {{1, 2}, {1, 3}}));
}

inline Family p3_family() {
  return Family(GroundSet(3), {Subset::of({}), Subset::of({1}),
                               Subset::of({1, 2}), Subset::of({1, 3}),
                               Subset::of({1, 2, 3})});
}

inline Linkage w136_linkage() {
  return Linkage::weight_minus_size(GroundSet(3), {1, 6, 3});
}

inline Operator n3_operator() {
  OperatorTable t;
  t[Subset::of({})] = Subset::of({1, 2});
  t[Subset::of({1})] = Subset::of({2, 3});
  t[Subset::of({2})] = Subset::of({3});
  t[Subset::of({1, 2})] = Subset::of({3});
  t[Subset::of({1, 3})] = Subset::of({2});
  t[Subset::of({2, 3})] = Subset::of({1});
  return Operator::table(GroundSet(3), std::move(t));
}

inline Family n3_family() {
  return Family(GroundSet(3),
                {Subset::of({}), Subset::of({1}), Subset::of({2}),
                 Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3}),
                 Subset::of({1, 2, 3})});
}

}  // namespace am::tests

#endif  // AM_TESTS_FIXTURES_HPP
