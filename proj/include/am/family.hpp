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

#ifndef AM_FAMILY_HPP
#define AM_FAMILY_HPP

#include <vector>

#include "am/sets.hpp"

namespace am {

/// A finite family of feasible subsets of a common ground set.
/// Members are kept duplicate-free in canonical (size, bitmask) order,
/// so iteration and equality are deterministic.
class Family {
 public:
  Family(GroundSet ground, std::vector<Subset> sets);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const std::vector<Subset>& sets() const { return sets_; }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] bool contains(Subset s) const;

  [[nodiscard]] std::vector<Subset>::const_iterator begin() const {
    return sets_.begin();
  }
  [[nodiscard]] std::vector<Subset>::const_iterator end() const {
    return sets_.end();
  }

  friend bool operator==(const Family& a, const Family& b) {
    return a.ground_ == b.ground_ && a.sets_ == b.sets_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> sets_;
};

/// Axiom A1 plus the empty-set requirement: the empty set is feasible and
/// every non-empty feasible set has an element whose removal stays feasible.
/// (A1 applied downward forces the empty set into any finite system, so it
/// is enforced directly.)
bool is_accessible(const Family& fam);

/// Axiom A2: for feasible X, Y with X not a subset of Y there is an
/// x in X-Y with Y+x feasible.
bool satisfies_exchange(const Family& fam);

/// X union Y is feasible for all feasible X, Y.
bool is_union_closed(const Family& fam);

/// Interval property without upper bounds: feasible X subset of Y and
/// X+x feasible (x outside Y) imply Y+x feasible.
bool has_interval_property(const Family& fam);

/// Accessible and union-closed. In debug builds also cross-checks the
/// equivalent criteria (exchange, interval property) on accessible input.
bool is_antimatroid(const Family& fam);

/// Gamma(X) = { x in E-X : X+x feasible }. X must be feasible.
Subset feasible_continuations(const Family& fam, Subset x);

/// The unique maximal feasible subset of X. Requires a union-closed,
/// accessible family; throws otherwise since the basis may be ambiguous.
Subset basis_of(const Family& fam, Subset x);

/// Size of the largest feasible subset of X.
int rank(const Family& fam, Subset x);

/// Rank of the family itself: rank of the full ground set.
int rank(const Family& fam);

/// The unique maximal feasible set (union of all members). Requires a
/// non-empty union-closed family.
Subset max_feasible(const Family& fam);

/// The k-truncation: members of size at most k.
Family truncate(const Family& fam, int k);

/// Smallest union-closed superfamily: all finite unions of members.
/// The closure of an accessible family stays accessible (asserted in
/// debug builds).
Family close_under_union(const Family& fam);

}  // namespace am

#endif  // AM_FAMILY_HPP
