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

#ifndef AM_ORACLE_HPP
#define AM_ORACLE_HPP

#include <vector>

#include "am/language.hpp"
#include "am/linkage.hpp"
#include "am/operators.hpp"

// Independent brute-force references and seeded instance generators.
// The oracles deliberately share no algorithmic code with the
// implementations they check: feasibility is recomputed by memoized
// depth-first reachability over all subsets, and minima/maxima use their
// own loops.

namespace am {

struct OracleBudget {
  int max_ground = 20;
  long max_words = 1'000'000;
};

/// The family generated by op, recomputed independently: X is feasible
/// iff some element x of X has X - x feasible with x in Psi(X - x).
Family enumerate_feasible(const Operator& op, const OracleBudget& budget = {});

struct BruteMaxResult {
  double value = 0;
  Family argmax;  // every maximizer
};

/// Exact maximum of F_Psi over the feasible sets with non-empty Psi.
/// Throws if the operator is empty at a feasible set that still has a
/// feasible continuation (the non-emptiness premise fails), or if no
/// feasible set has a continuation at all. exclude_empty drops the empty
/// set from the domain (a reporting convenience; the chain optimality
/// theorem only covers the unrestricted problem).
BruteMaxResult brute_max_F_psi(const Operator& op, const Linkage& pi,
                               const OracleBudget& budget = {},
                               bool exclude_empty = false);

struct BruteMinimaxResult {
  double value = 0;
  std::vector<Word> words;  // every minimizer, in canonical order
};

/// Exact minimum of W over all length-k feasible orderings.
BruteMinimaxResult brute_minimax_W(const Operator& op,
                                   const NestingFunction& f, int k,
                                   const OracleBudget& budget = {});

/// A feasible set at which the operator is empty although a feasible
/// continuation exists, if any; canonically first. Such a set makes
/// F_Psi undefined short of the maximal sets.
std::optional<Subset> find_stuck_set(const Operator& op, const Family& fam);

/// Deterministic sampler for isotone operators: grows a random accessible
/// family, closes it under union, and takes the basis operator of the
/// resulting antimatroid. No uniformity over antimatroids is claimed.
/// The generated family always contains at least one singleton.
Operator random_isotone_operator(unsigned seed, int n);

/// Deterministic sampler for monotone linkages: per element, a random
/// antitone plateau profile of |X| with at most `levels` distinct values,
/// perturbed by a set-dependent antitone term when levels > 1. All values
/// are integers stored exactly.
Linkage random_monotone_linkage(unsigned seed, int n, int levels);

struct NonIsotoneInstance {
  Operator op;
  IsotoneWitness witness;  // genuine, with both sets feasible and proper
};

/// Deterministic sampler for non-isotone operators whose failure-linkage
/// instance exhibits the chain suboptimality: starts from a random
/// antimatroid and removes one feasible continuation, keeping the
/// operator non-empty on every non-maximal feasible set. Requires n >= 3.
NonIsotoneInstance random_nonisotone_operator(unsigned seed, int n);

}  // namespace am

#endif  // AM_ORACLE_HPP
