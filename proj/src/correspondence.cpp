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

#include "am/correspondence.hpp"

#include "am/oracle.hpp"

namespace am {

double BridgedNesting::operator()(int x, Subset a_set) const {
  if (!a_set.contains(x))
    throw DomainError("bridged nesting requires x inside A");
  return source_.value(x, a_set.without(x));
}

NestingFunction BridgedNesting::fn() const {
  return NestingFunction(
      [self = *this](int x, Subset a_set) { return self(x, a_set); });
}

BridgedNesting bridge_f_from_pi(const Linkage& pi) {
  const bool monotone =
      pi.ground().size() <= 16
          ? !check_monotone(pi).has_value()
          : !check_monotone_sampled(pi, 20000, 1).has_value();
  if (!monotone)
    throw DomainError("linkage not monotone; the bridged nesting function "
                      "would not be antitone");
  return BridgedNesting(pi);
}

CriticalPrefix shortest_critical_prefix(const BridgedNesting& f,
                                        const Word& alpha) {
  if (alpha.empty() || !alpha.simple())
    throw DomainError("critical prefix requires a non-empty simple word");
  const int k = alpha.length();
  std::vector<double> running(static_cast<std::size_t>(k));
  double acc = 0;
  for (int i = 1; i <= k; ++i) {
    const double v = f(alpha.letters()[static_cast<std::size_t>(i - 1)],
                       alpha.prefix_support(i));
    acc = (i == 1) ? v : std::max(acc, v);
    running[static_cast<std::size_t>(i - 1)] = acc;
  }
  const double total = running.back();
  for (int p = 0; p < k; ++p)
    if (running[static_cast<std::size_t>(p)] == total)
      return CriticalPrefix{p, alpha.prefix_support(p)};
  return CriticalPrefix{k - 1, alpha.prefix_support(k - 1)};
}

CorrespondenceReport verify_correspondence(const Operator& op,
                                           const Linkage& pi, int k) {
  // Preconditions, each named on violation.
  BridgedNesting bridged = bridge_f_from_pi(pi);  // throws if not monotone

  if (op.kind() == Operator::Kind::truncated) {
    if (auto w = check_k_isotone(op, op.cutoff()))
      throw DomainError("operator not (k-1)-isotone: witness A=" +
                        format_subset(w->a_set) + " B=" +
                        format_subset(w->b_set) + " a=" +
                        std::to_string(w->element));
  } else {
    const auto scope = op.ground().size() <= 12 ? IsotoneScope::all_subsets
                                                : IsotoneScope::feasible_only;
    if (auto w = check_isotone(op, scope))
      throw DomainError("operator not isotone: witness A=" +
                        format_subset(w->a_set) + " B=" +
                        format_subset(w->b_set) + " a=" +
                        std::to_string(w->element));
  }

  const Generation gen = generate_family(op);
  const int family_rank = rank(gen.family);
  if (k == 0) k = family_rank;
  if (k != family_rank)
    throw DomainError("k must equal the family rank " +
                      std::to_string(family_rank) + " (or 0 to derive it)");
  if (k < 1)
    throw DomainError("correspondence requires rank at least 1");

  const OptResult chain = run_chain(op, pi);
  if (static_cast<int>(chain.trace.steps.size()) != k)
    throw DomainError("operator is empty at " +
                      format_subset(chain.trace.terminal) +
                      " before the rank is reached");
  std::vector<int> letters;
  letters.reserve(chain.trace.steps.size());
  for (const ChainStep& s : chain.trace.steps) letters.push_back(s.chosen);
  const Word alpha{std::move(letters)};

  const Word greedy = greedy_minimax(op, bridged.fn(), k);

  bool holds = greedy == alpha;

  // The chain word attains the minimax optimum at every prefix length.
  for (int i = 1; holds && i <= k; ++i) {
    const double oracle_min = brute_minimax_W(op, bridged.fn(), i).value;
    if (nesting_W(bridged.fn(), alpha.prefix(i)) != oracle_min) holds = false;
  }

  const CriticalPrefix crit = shortest_critical_prefix(bridged, alpha);
  const double w_alpha = nesting_W(bridged.fn(), alpha);
  if (!(crit.set == chain.optimum) || w_alpha != chain.value) holds = false;

  // The critical prefix of the greedy word maximizes F_Psi.
  const double oracle_max = brute_max_F_psi(op, pi).value;
  if (objective_F_psi(pi, op, crit.set).value != oracle_max) holds = false;

  return CorrespondenceReport{alpha,       crit.p,  crit.set,
                              chain.value, w_alpha, holds};
}

}  // namespace am
