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

#include "am/oracle.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <set>

namespace am {

Family enumerate_feasible(const Operator& op, const OracleBudget& budget) {
  const GroundSet& ground = op.ground();
  const int n = ground.size();
  if (n > budget.max_ground)
    throw BudgetError("oracle enumeration is limited to " +
                      std::to_string(budget.max_ground) + " elements");

  std::vector<std::int8_t> memo(std::size_t{1} << n, 0);  // 0 ?, 1 yes, 2 no
  std::function<bool(std::uint64_t)> reachable = [&](std::uint64_t bits) {
    if (bits == 0) return true;
    std::int8_t& m = memo[bits];
    if (m != 0) return m == 1;
    bool ok = false;
    const Subset x = Subset::from_bits(bits);
    for (int e : x) {
      const Subset parent = x.without(e);
      if (reachable(parent.bits()) && op.evaluate(parent).contains(e)) {
        ok = true;
        break;
      }
    }
    m = ok ? 1 : 2;
    return ok;
  };

  std::vector<Subset> feasible;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    if (reachable(bits)) feasible.push_back(Subset::from_bits(bits));
  return Family(ground, std::move(feasible));
}

BruteMaxResult brute_max_F_psi(const Operator& op, const Linkage& pi,
                               const OracleBudget& budget,
                               bool exclude_empty) {
  const Family fam = enumerate_feasible(op, budget);
  const Subset full = op.ground().full();

  bool have = false;
  double best = 0;
  std::vector<Subset> argmax;
  for (Subset x : fam) {
    const Subset psi = op.evaluate(x);
    if (psi.empty()) {
      for (int y : full - x)
        if (fam.contains(x.with(y)))
          throw DomainError("operator is empty at feasible " +
                            format_subset(x) +
                            " although a feasible continuation exists");
      continue;  // a maximal set; outside the maximization domain
    }
    if (exclude_empty && x.empty()) continue;
    double v = 0;
    bool first = true;
    for (int e : psi) {
      const double cand = pi.value(e, x);
      if (first || cand < v) v = cand;
      first = false;
    }
    if (!have || v > best) {
      best = v;
      argmax.assign(1, x);
      have = true;
    } else if (v == best) {
      argmax.push_back(x);
    }
  }
  if (!have)
    throw DomainError(
        "maximization domain is empty: no feasible set has a continuation");
  return BruteMaxResult{best, Family(op.ground(), std::move(argmax))};
}

namespace {

void minimax_words(const Family& fam, const NestingFunction& f, int k,
                   const OracleBudget& budget, Word& word, Subset support,
                   double prefix_max, long& visited, bool& have, double& best,
                   std::vector<Word>& out) {
  if (++visited > budget.max_words)
    throw BudgetError("word enumeration exceeds the oracle budget");
  if (word.length() == k) {
    if (!have || prefix_max < best) {
      best = prefix_max;
      out.assign(1, word);
      have = true;
    } else if (prefix_max == best) {
      out.push_back(word);
    }
    return;
  }
  for (int e : fam.ground().full() - support) {
    const Subset next = support.with(e);
    if (!fam.contains(next)) continue;
    const double v = f(e, next);
    const double acc = word.empty() ? v : std::max(prefix_max, v);
    Word extended = word.appended(e);
    minimax_words(fam, f, k, budget, extended, next, acc, visited, have, best,
                  out);
  }
}

}  // namespace

BruteMinimaxResult brute_minimax_W(const Operator& op,
                                   const NestingFunction& f, int k,
                                   const OracleBudget& budget) {
  if (k < 1)
    throw DomainError("minimax oracle requires k >= 1; W is undefined on "
                      "the empty word");
  const Family fam = enumerate_feasible(op, budget);
  if (k > rank(fam))
    throw DomainError("k exceeds the family rank " +
                      std::to_string(rank(fam)));

  long visited = 0;
  bool have = false;
  double best = 0;
  std::vector<Word> out;
  Word word;
  minimax_words(fam, f, k, budget, word, Subset{}, 0, visited, have, best,
                out);
  return BruteMinimaxResult{best, std::move(out)};
}

std::optional<Subset> find_stuck_set(const Operator& op, const Family& fam) {
  const Subset full = fam.ground().full();
  for (Subset x : fam) {
    if (!op.evaluate(x).empty()) continue;
    for (int y : full - x)
      if (fam.contains(x.with(y))) return x;
  }
  return std::nullopt;
}

namespace {

int nth_element_of(Subset s, int index) {
  for (int e : s)
    if (index-- == 0) return e;
  return 0;
}

/// Grows a random accessible family and closes it under union.
Family random_antimatroid(std::mt19937& rng, const GroundSet& ground) {
  const Subset full = ground.full();
  std::vector<Subset> sets{Subset{}};
  std::set<std::uint64_t> present{0};

  const int grow = 1 + static_cast<int>(rng() % (3u * ground.size()));
  for (int i = 0; i < grow; ++i) {
    const Subset base = sets[rng() % sets.size()];
    const Subset comp = full - base;
    if (comp.empty()) continue;
    const int e =
        nth_element_of(comp, static_cast<int>(rng() % comp.size()));
    const Subset child = base.with(e);
    if (present.insert(child.bits()).second) sets.push_back(child);
  }
  return close_under_union(Family(ground, std::move(sets)));
}

}  // namespace

Operator random_isotone_operator(unsigned seed, int n) {
  if (n < 1 || n > 8)
    throw DomainError("isotone sampler supports ground sets of 1..8");
  std::mt19937 rng(seed);
  return operator_from_family(random_antimatroid(rng, GroundSet(n)));
}

Linkage random_monotone_linkage(unsigned seed, int n, int levels) {
  if (levels < 1) throw DomainError("linkage sampler requires levels >= 1");
  if (n < 1 || n > 10)
    throw DomainError("linkage sampler supports ground sets of 1..10");
  std::mt19937 rng(seed);
  const GroundSet ground(n);
  const Subset full = ground.full();

  LinkageTable entries;
  for (int x = 1; x <= n; ++x) {
    // Antitone plateau profile over |X| with at most `levels` values.
    std::vector<double> profile(static_cast<std::size_t>(n) + 1);
    profile[static_cast<std::size_t>(n)] = static_cast<double>(rng() % 3u);
    int steps_left = levels - 1;
    for (int s = n - 1; s >= 0; --s) {
      double inc = 0;
      if (steps_left > 0 && rng() % 2u == 0) {
        inc = static_cast<double>(1 + rng() % 3u);
        --steps_left;
      }
      profile[static_cast<std::size_t>(s)] =
          profile[static_cast<std::size_t>(s + 1)] + inc;
    }
    // Set-dependent antitone perturbation |R - X|, scaled under the
    // plateau gaps.
    Subset r_set;
    if (levels > 1)
      for (int e = 1; e <= n; ++e)
        if (rng() % 2u == 0) r_set = r_set.with(e);

    const std::uint64_t comp = full.without(x).bits();
    for (std::uint64_t m = comp;; m = (m - 1) & comp) {
      const Subset set = Subset::from_bits(m);
      entries[{x, set}] =
          profile[static_cast<std::size_t>(set.size())] * (n + 1) +
          (r_set - set).size();
      if (m == 0) break;
    }
  }
  return Linkage::table(ground, std::move(entries));
}

NonIsotoneInstance random_nonisotone_operator(unsigned seed, int n) {
  if (n < 3 || n > 8)
    throw DomainError("non-isotone sampler supports ground sets of 3..8");
  std::mt19937 rng(seed);
  const GroundSet ground(n);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Family fam = random_antimatroid(rng, ground);
    const Subset top = max_feasible(fam);

    // Candidate witnesses (A, B, a): both proper feasible, A inside B,
    // a a continuation of A outside B, and B keeping a second
    // continuation so the perturbed operator stays non-empty there.
    struct Candidate {
      Subset a_set, b_set;
      int a;
    };
    std::vector<Candidate> candidates;
    for (Subset b_set : fam) {
      if (b_set == top) continue;
      const Subset gamma_b = feasible_continuations(fam, b_set);
      if (gamma_b.size() < 2) continue;
      for (Subset a_set : fam) {
        if (!a_set.proper_subset_of(b_set)) continue;
        const Subset gamma_a = feasible_continuations(fam, a_set);
        for (int a : gamma_a - b_set)
          if (gamma_b.contains(a)) candidates.push_back({a_set, b_set, a});
      }
    }
    if (candidates.empty()) continue;

    const Candidate& pick = candidates[rng() % candidates.size()];
    OperatorTable entries;
    for (Subset x : fam) entries[x] = feasible_continuations(fam, x);
    entries[pick.b_set] = entries[pick.b_set].without(pick.a);
    return NonIsotoneInstance{
        Operator::table(ground, std::move(entries)),
        IsotoneWitness{pick.a_set, pick.b_set, pick.a}};
  }
  throw Error("non-isotone sampler failed to find a witness instance");
}

}  // namespace am
