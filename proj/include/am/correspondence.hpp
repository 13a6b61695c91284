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

#ifndef AM_CORRESPONDENCE_HPP
#define AM_CORRESPONDENCE_HPP

#include "am/chain.hpp"
#include "am/language.hpp"
#include "am/linkage.hpp"

namespace am {

/// The nesting function induced by a monotone linkage via
/// f(x, A) = pi(x, A - x). Antitone in A whenever pi is monotone, which
/// makes the greedy minimax step coincide with the chain step.
class BridgedNesting {
 public:
  [[nodiscard]] const Linkage& source() const { return source_; }
  [[nodiscard]] double operator()(int x, Subset a_set) const;
  [[nodiscard]] NestingFunction fn() const;

 private:
  friend BridgedNesting bridge_f_from_pi(const Linkage& pi);
  explicit BridgedNesting(Linkage source) : source_(std::move(source)) {}
  Linkage source_;
};

/// Builds the bridged nesting function; rejects non-monotone linkages.
BridgedNesting bridge_f_from_pi(const Linkage& pi);

struct CriticalPrefix {
  int p = 0;       // smallest p with W of the (p+1)-prefix equal to W(alpha)
  Subset set;      // support of the p-prefix
};

/// The shortest prefix x1..xp of alpha such that W(x1..x(p+1)) = W(alpha).
/// Always defined: p = |alpha| - 1 qualifies.
CriticalPrefix shortest_critical_prefix(const BridgedNesting& f,
                                        const Word& alpha);

struct CorrespondenceReport {
  Word word;             // the chain word alpha_k
  int p = 0;             // critical prefix length
  Subset prefix_set;     // its support; equals the chain optimum when holds
  double chain_value = 0;
  double nesting_value = 0;  // W(alpha_k)
  bool holds = false;
};

/// Runs both algorithms on the same instance and checks the translation
/// between them: the chain's element sequence is a minimax-optimal word
/// whose every prefix length is optimal, its shortest critical prefix is
/// the chain optimum with W(alpha) = F_Psi(X0), the greedy word equals
/// the chain word, and the critical prefix maximizes F_Psi against the
/// brute-force oracle.
///
/// Preconditions (violations throw, naming the condition): pi monotone;
/// op isotone (for truncated operators, (k-1)-isotone); k equal to the
/// family rank, or 0 to derive it.
CorrespondenceReport verify_correspondence(const Operator& op,
                                           const Linkage& pi, int k);

}  // namespace am

#endif  // AM_CORRESPONDENCE_HPP
