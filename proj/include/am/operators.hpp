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

#ifndef AM_OPERATORS_HPP
#define AM_OPERATORS_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "am/family.hpp"
#include "am/poset.hpp"

namespace am {

using OperatorTable = std::map<Subset, Subset, CanonicalLess>;

/// An expansion operator: a total map X -> Psi(X) with Psi(X) disjoint
/// from X. Values are immutable and cheap to copy.
///
/// Builtin kinds:
///   full       Psi(X) = E - X           (generates the full powerset)
///   max_order  Psi(X) = { x : x > max(X) }, Psi({}) = E
///   poset_min  Psi(X) = minimal elements of E - X in a poset
///              (generates the order ideals)
///   chain      Psi(X) = { max(X) + 1 }, Psi({}) = {1}
///              (generates the chain {} c {1} c {1,2} c ...)
/// plus explicit tables, the basis operator of a family, and truncations.
class Operator {
 public:
  enum class Kind {
    table,
    full,
    max_order,
    poset_min,
    chain,
    basis_of_family,
    truncated,
  };

  static Operator full(GroundSet ground);
  static Operator max_order(GroundSet ground);
  static Operator chain(GroundSet ground);
  static Operator poset_min(Poset poset);
  /// Partial tables are allowed: missing entries evaluate to the empty set.
  /// Entries violating Psi(X) disjoint from X are rejected.
  static Operator table(GroundSet ground, OperatorTable entries);
  /// Psi(X) = Gamma(basis of X); requires an antimatroid.
  static Operator basis_of_family(Family fam);
  /// Psi restricted to arguments of size at most k_minus_1, empty above.
  static Operator truncated(Operator inner, int k_minus_1);

  [[nodiscard]] Subset evaluate(Subset x) const;
  [[nodiscard]] Kind kind() const;
  [[nodiscard]] const GroundSet& ground() const;

  // Kind-specific accessors for serialization; null when not applicable.
  [[nodiscard]] const OperatorTable* table_entries() const;
  [[nodiscard]] const Poset* poset() const;
  [[nodiscard]] const Family* family() const;
  [[nodiscard]] const Operator* inner() const;
  [[nodiscard]] int cutoff() const;

 private:
  struct Impl;
  explicit Operator(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// A counterexample to the isotone condition: A subset of B, a in Psi(A)
/// outside B, yet a not in Psi(B). check_k_isotone additionally reports
/// cutoff violations as degenerate witnesses with A == B (Psi non-empty on
/// an argument that the truncation requires to map to the empty set).
struct IsotoneWitness {
  Subset a_set;
  Subset b_set;
  int element = 0;

  friend bool operator==(const IsotoneWitness&,
                         const IsotoneWitness&) = default;
};

/// One feasible construction chain per generated set: each non-empty set
/// records the parent it was first expanded from and the added element.
class GenerationTrace {
 public:
  explicit GenerationTrace(GroundSet ground) : ground_(std::move(ground)) {}

  void record(Subset child, Subset parent, int added);
  [[nodiscard]] bool known(Subset s) const;

  /// The chain {} = X0 c X1 c ... c Xk = target as (set, added element)
  /// steps; the empty prefix is implicit.
  [[nodiscard]] std::vector<std::pair<Subset, int>> chain_to(
      Subset target) const;

 private:
  GroundSet ground_;
  std::map<Subset, std::pair<Subset, int>, CanonicalLess> parent_;
};

struct Generation {
  Family family;
  GenerationTrace trace;
};

/// Runs the level-by-level generation: T0 = {{}}, T(i+1) = expansions of
/// Ti by Psi. Every set produced at level i has exactly i elements and the
/// result is accessible by construction.
Generation generate_family(const Operator& op);

enum class IsotoneScope { all_subsets, feasible_only };

/// Checks the isotone condition Psi(X) & (E-Y) subset of Psi(Y) for X
/// subset of Y over the requested scope. Returns the canonically first
/// witness, or nullopt if the condition holds. The exhaustive sweep is
/// limited to ground sets of at most 16 elements; use feasible_only above
/// that.
std::optional<IsotoneWitness> check_isotone(const Operator& op,
                                            IsotoneScope scope);

/// The basis operator Psi(X) = Gamma(basis of X) of an antimatroid.
/// It is isotone on all subsets and regenerates the family exactly.
Operator operator_from_family(const Family& fam);

/// Psi_{k-1}: identical to op on arguments of size at most k_minus_1 and
/// empty above. Generates the k-truncation of op's family.
Operator truncated_operator(const Operator& op, int k_minus_1);

/// Checks that op is a (k-1)-isotone operator: the isotone condition
/// restricted to pairs with |Y| <= k_minus_1, plus Psi(X) empty for all
/// |X| >= k_minus_1 + 1. Same witness conventions as check_isotone, with
/// cutoff violations reported as A == B witnesses.
std::optional<IsotoneWitness> check_k_isotone(const Operator& op,
                                              int k_minus_1);

}  // namespace am

#endif  // AM_OPERATORS_HPP
