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

#include "am/operators.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace am {

struct Operator::Impl {
  Kind kind;
  GroundSet ground;
  OperatorTable entries;            // table
  std::optional<Poset> pos;         // poset_min
  std::optional<Family> fam;        // basis_of_family
  std::optional<Operator> wrapped;  // truncated
  int cutoff = -1;                  // truncated

  Impl(Kind k, GroundSet g) : kind(k), ground(std::move(g)) {}
};

Operator::Operator(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

Operator Operator::full(GroundSet ground) {
  return Operator(std::make_shared<Impl>(Kind::full, std::move(ground)));
}

Operator Operator::max_order(GroundSet ground) {
  return Operator(std::make_shared<Impl>(Kind::max_order, std::move(ground)));
}

Operator Operator::chain(GroundSet ground) {
  return Operator(std::make_shared<Impl>(Kind::chain, std::move(ground)));
}

Operator Operator::poset_min(Poset poset) {
  auto impl = std::make_shared<Impl>(Kind::poset_min, poset.ground());
  impl->pos = std::move(poset);
  return Operator(std::move(impl));
}

Operator Operator::table(GroundSet ground, OperatorTable entries) {
  for (const auto& [x, psi] : entries) {
    if (!ground.contains(x) || !ground.contains(psi))
      throw DomainError("operator table entry at " + format_subset(x) +
                        " exceeds the ground set");
    if (!(psi & x).empty())
      throw DomainError("operator table entry at " + format_subset(x) +
                        " intersects its argument");
  }
  auto impl = std::make_shared<Impl>(Kind::table, std::move(ground));
  impl->entries = std::move(entries);
  return Operator(std::move(impl));
}

Operator Operator::basis_of_family(Family fam) {
  if (!is_antimatroid(fam))
    throw DomainError("basis operator requires an antimatroid family");
  auto impl = std::make_shared<Impl>(Kind::basis_of_family, fam.ground());
  impl->fam = std::move(fam);
  return Operator(std::move(impl));
}

Operator Operator::truncated(Operator inner, int k_minus_1) {
  if (k_minus_1 < 0)
    throw DomainError("truncated operator cutoff must be non-negative");
  auto impl = std::make_shared<Impl>(Kind::truncated, inner.ground());
  impl->cutoff = k_minus_1;
  impl->wrapped = std::move(inner);
  return Operator(std::move(impl));
}

Subset Operator::evaluate(Subset x) const {
  const Impl& im = *impl_;
  if (!im.ground.contains(x))
    throw DomainError("operator argument " + format_subset(x) +
                      " exceeds the ground set");
  const Subset full = im.ground.full();
  switch (im.kind) {
    case Kind::full:
      return full - x;
    case Kind::max_order: {
      if (x.empty()) return full;
      const int m = x.max_element();
      return Subset::from_bits(full.bits() &
                               ~((std::uint64_t{1} << m) - 1));
    }
    case Kind::chain: {
      if (x.empty()) return Subset::of({1});
      const int m = x.max_element();
      return m < im.ground.size() ? Subset::of({m + 1}) : Subset{};
    }
    case Kind::poset_min:
      return im.pos->minimal_elements(full - x);
    case Kind::table: {
      auto it = im.entries.find(x);
      return it == im.entries.end() ? Subset{} : it->second;
    }
    case Kind::basis_of_family: {
      Subset basis;
      for (Subset y : *im.fam)
        if (y.subset_of(x)) basis = basis | y;
      Subset gamma;
      for (int e : full - basis)
        if (im.fam->contains(basis.with(e))) gamma = gamma.with(e);
      // Gamma(basis) cannot meet x, else the basis would not be maximal.
      assert((gamma & x).empty());
      return gamma;
    }
    case Kind::truncated:
      return x.size() <= im.cutoff ? im.wrapped->evaluate(x) : Subset{};
  }
  return {};
}

Operator::Kind Operator::kind() const { return impl_->kind; }
const GroundSet& Operator::ground() const { return impl_->ground; }
const OperatorTable* Operator::table_entries() const {
  return impl_->kind == Kind::table ? &impl_->entries : nullptr;
}
const Poset* Operator::poset() const {
  return impl_->pos ? &*impl_->pos : nullptr;
}
const Family* Operator::family() const {
  return impl_->fam ? &*impl_->fam : nullptr;
}
const Operator* Operator::inner() const {
  return impl_->wrapped ? &*impl_->wrapped : nullptr;
}
int Operator::cutoff() const { return impl_->cutoff; }

void GenerationTrace::record(Subset child, Subset parent, int added) {
  parent_.emplace(child, std::make_pair(parent, added));
}

bool GenerationTrace::known(Subset s) const {
  return s.empty() || parent_.count(s) > 0;
}

std::vector<std::pair<Subset, int>> GenerationTrace::chain_to(
    Subset target) const {
  std::vector<std::pair<Subset, int>> chain;
  Subset cur = target;
  while (!cur.empty()) {
    auto it = parent_.find(cur);
    if (it == parent_.end())
      throw DomainError("no generation chain recorded for " +
                        format_subset(target));
    chain.emplace_back(cur, it->second.second);
    cur = it->second.first;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Generation generate_family(const Operator& op) {
  const GroundSet& ground = op.ground();
  GenerationTrace trace(ground);
  std::set<Subset, CanonicalLess> seen;
  std::vector<Subset> level{Subset{}};
  seen.insert(Subset{});

  while (!level.empty()) {
    std::vector<Subset> next;
    for (Subset x : level) {
      for (int e : op.evaluate(x)) {
        Subset child = x.with(e);
        if (seen.insert(child).second) {
          trace.record(child, x, e);
          next.push_back(child);
        }
      }
    }
    std::sort(next.begin(), next.end(), CanonicalLess{});
    level = std::move(next);
  }
  return Generation{Family(ground, {seen.begin(), seen.end()}),
                    std::move(trace)};
}

namespace {

/// All subsets of the ground set in canonical order.
std::vector<Subset> all_subsets_canonical(const GroundSet& ground) {
  std::vector<Subset> subsets;
  subsets.reserve(std::size_t{1} << ground.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground.size()); ++m)
    subsets.push_back(Subset::from_bits(m));
  std::sort(subsets.begin(), subsets.end(), CanonicalLess{});
  return subsets;
}

bool witness_less(const IsotoneWitness& a, const IsotoneWitness& b) {
  if (!(a.a_set == b.a_set)) return canonical_less(a.a_set, b.a_set);
  if (!(a.b_set == b.b_set)) return canonical_less(a.b_set, b.b_set);
  return a.element < b.element;
}

/// Canonically smallest violation (B, a) for a fixed A over the given
/// supersets, or nullopt.
std::optional<IsotoneWitness> best_violation_for(
    const Operator& op, Subset a_set, Subset psi_a,
    const std::vector<Subset>& supersets) {
  const Subset full = op.ground().full();
  std::optional<IsotoneWitness> best;
  for (Subset b_set : supersets) {
    Subset viol = (psi_a & (full - b_set)) - op.evaluate(b_set);
    if (viol.empty()) continue;
    IsotoneWitness w{a_set, b_set, viol.min_element()};
    if (!best || witness_less(w, *best)) best = w;
  }
  return best;
}

}  // namespace

std::optional<IsotoneWitness> check_isotone(const Operator& op,
                                            IsotoneScope scope) {
  const GroundSet& ground = op.ground();
  if (scope == IsotoneScope::all_subsets) {
    if (ground.size() > 16)
      throw DomainError(
          "exhaustive isotone check is limited to 16 elements; use "
          "feasible_only or a sampled sweep");
    const Subset full = ground.full();
    for (Subset a_set : all_subsets_canonical(ground)) {
      Subset psi_a = op.evaluate(a_set);
      if (psi_a.empty()) continue;
      // Enumerate supersets of a_set via submasks of its complement.
      std::vector<Subset> supersets;
      const std::uint64_t comp = (full - a_set).bits();
      for (std::uint64_t m = comp;; m = (m - 1) & comp) {
        supersets.push_back(Subset::from_bits(a_set.bits() | m));
        if (m == 0) break;
      }
      if (auto w = best_violation_for(op, a_set, psi_a, supersets)) return w;
    }
    return std::nullopt;
  }

  const Family fam = generate_family(op).family;
  for (Subset a_set : fam) {
    Subset psi_a = op.evaluate(a_set);
    if (psi_a.empty()) continue;
    std::vector<Subset> supersets;
    for (Subset b_set : fam)
      if (a_set.subset_of(b_set)) supersets.push_back(b_set);
    if (auto w = best_violation_for(op, a_set, psi_a, supersets)) return w;
  }
  return std::nullopt;
}

Operator operator_from_family(const Family& fam) {
  return Operator::basis_of_family(fam);
}

Operator truncated_operator(const Operator& op, int k_minus_1) {
  return Operator::truncated(op, k_minus_1);
}

std::optional<IsotoneWitness> check_k_isotone(const Operator& op,
                                              int k_minus_1) {
  const GroundSet& ground = op.ground();
  if (k_minus_1 < 0) throw DomainError("cutoff must be non-negative");
  if (ground.size() > 16)
    throw DomainError("exhaustive (k-1)-isotone check is limited to 16 "
                      "elements");
  const Subset full = ground.full();
  const auto subsets = all_subsets_canonical(ground);

  std::optional<IsotoneWitness> best_trunc;
  for (Subset a_set : subsets) {
    if (a_set.size() > k_minus_1) continue;
    Subset psi_a = op.evaluate(a_set);
    if (psi_a.empty()) continue;
    std::vector<Subset> supersets;
    const std::uint64_t comp = (full - a_set).bits();
    for (std::uint64_t m = comp;; m = (m - 1) & comp) {
      Subset b_set = Subset::from_bits(a_set.bits() | m);
      if (b_set.size() <= k_minus_1) supersets.push_back(b_set);
      if (m == 0) break;
    }
    if ((best_trunc = best_violation_for(op, a_set, psi_a, supersets)))
      break;
  }

  std::optional<IsotoneWitness> best_cutoff;
  for (Subset x : subsets) {
    if (x.size() <= k_minus_1) continue;
    Subset psi = op.evaluate(x);
    if (!psi.empty()) {
      best_cutoff = IsotoneWitness{x, x, psi.min_element()};
      break;
    }
  }

  if (best_trunc && best_cutoff)
    return witness_less(*best_trunc, *best_cutoff) ? best_trunc : best_cutoff;
  return best_trunc ? best_trunc : best_cutoff;
}

}  // namespace am
