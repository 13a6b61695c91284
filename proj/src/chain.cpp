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

#include "am/chain.hpp"

#include "am/oracle.hpp"

namespace am {

OptResult run_chain(const Operator& op, const Linkage& pi) {
  const int n = op.ground().size();
  ChainTrace trace;

  Subset current;
  Subset continuations = op.evaluate(current);
  if (continuations.empty())
    throw DomainError(
        "chain cannot start: operator is empty at {} and F_Psi is undefined");

  Subset best_set;
  double best_value = 0;
  bool have_best = false;

  while (!continuations.empty()) {
    // One pass gives both F_Psi(X) and the smallest pi-minimal element.
    double value = 0;
    int chosen = 0;
    for (int x : continuations) {
      const double v = pi.value(x, current);
      ++trace.linkage_evaluations;
      if (chosen == 0 || v < value) {
        value = v;
        chosen = x;
      }
    }
    if (!have_best || value > best_value) {
      best_set = current;
      best_value = value;
      have_best = true;
    }
    trace.steps.push_back({current, value, chosen});
    current = current.with(chosen);
    continuations = op.evaluate(current);
  }
  trace.terminal = current;

  if (trace.linkage_evaluations > static_cast<long>(n) * (n + 1))
    throw Error("chain exceeded the n(n+1) linkage evaluation bound");

  return OptResult{best_set, best_value, std::move(trace)};
}

bool verify_against_oracle(const Operator& op, const Linkage& pi,
                           const OptResult& result) {
  return brute_max_F_psi(op, pi).value == result.value;
}

}  // namespace am
