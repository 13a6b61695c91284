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

#ifndef AM_CHAIN_HPP
#define AM_CHAIN_HPP

#include <vector>

#include "am/linkage.hpp"
#include "am/operators.hpp"

namespace am {

struct ChainStep {
  Subset set;      // X_i
  double value;    // F_Psi(X_i)
  int chosen;      // x_(i+1), a pi-minimal feasible continuation
};

struct ChainTrace {
  std::vector<ChainStep> steps;
  Subset terminal;             // final set, where Psi is empty
  long linkage_evaluations = 0;
};

struct OptResult {
  Subset optimum;  // earliest chain set with maximal F_Psi
  double value = 0;
  ChainTrace trace;
};

/// The greedy chain construction: starting from the empty set, repeatedly
/// record F_Psi and extend by a pi-minimal feasible continuation (ties
/// broken towards the smallest element identifier), until Psi empties.
/// Returns the earliest chain set attaining the maximal recorded value.
///
/// Throws if Psi({}) is empty (F_Psi undefined everywhere). The number of
/// linkage evaluations is recorded in the trace and is guaranteed to stay
/// within n(n+1).
OptResult run_chain(const Operator& op, const Linkage& pi);

/// True iff the chain value equals the exact maximum of F_Psi over the
/// generated family minus its maximal sets, computed by the independent
/// brute-force oracle.
bool verify_against_oracle(const Operator& op, const Linkage& pi,
                           const OptResult& result);

}  // namespace am

#endif  // AM_CHAIN_HPP
