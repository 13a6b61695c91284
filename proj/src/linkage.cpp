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

#include "am/linkage.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace am {

struct Linkage::Impl {
  Kind kind;
  GroundSet ground;
  std::vector<double> weights;                // weight_minus_size
  std::vector<std::vector<double>> distances; // single_linkage
  double empty_value = 0;                     // single_linkage
  LinkageTable entries;                       // table
  FailureParams failure;                      // failure

  Impl(Kind k, GroundSet g) : kind(k), ground(std::move(g)) {}
};

Linkage::Linkage(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Linkage Linkage::weight_minus_size(GroundSet ground, std::vector<double> w) {
  if (static_cast<int>(w.size()) != ground.size())
    throw DomainError("weight vector length must equal the ground set size");
  auto impl = std::make_shared<Impl>(Kind::weight_minus_size,
                                     std::move(ground));
  impl->weights = std::move(w);
  return Linkage(std::move(impl));
}

Linkage Linkage::single_linkage(GroundSet ground,
                                std::vector<std::vector<double>> d,
                                std::optional<double> empty_value) {
  const auto n = static_cast<std::size_t>(ground.size());
  if (d.size() != n)
    throw DomainError("distance matrix must be n x n");
  double max_d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) throw DomainError("distance matrix must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] != d[j][i])
        throw DomainError("distance matrix must be symmetric");
      max_d = std::max(max_d, d[i][j]);
    }
  }
  const double m = empty_value.value_or(2 * max_d + 1);
  if (m < max_d)
    throw DomainError(
        "single-linkage empty-set value must dominate every distance");
  auto impl = std::make_shared<Impl>(Kind::single_linkage, std::move(ground));
  impl->distances = std::move(d);
  impl->empty_value = m;
  return Linkage(std::move(impl));
}

Linkage Linkage::table(GroundSet ground, LinkageTable entries) {
  if (ground.size() > 16)
    throw DomainError("table linkages are limited to 16 elements");
  for (const auto& [key, _] : entries) {
    const auto& [x, set] = key;
    if (!ground.contains(x) || !ground.contains(set) || set.contains(x))
      throw DomainError("linkage table key (" + std::to_string(x) + ", " +
                        format_subset(set) + ") is outside the domain");
  }
  // Totality: objectives take minima, so a missing entry would silently
  // corrupt them.
  const Subset full = ground.full();
  for (int x = 1; x <= ground.size(); ++x) {
    const std::uint64_t comp = (full.without(x)).bits();
    for (std::uint64_t msk = comp;; msk = (msk - 1) & comp) {
      if (!entries.count({x, Subset::from_bits(msk)}))
        throw DomainError("linkage table is missing entry (" +
                          std::to_string(x) + ", " +
                          format_subset(Subset::from_bits(msk)) + ")");
      if (msk == 0) break;
    }
  }
  auto impl = std::make_shared<Impl>(Kind::table, std::move(ground));
  impl->entries = std::move(entries);
  return Linkage(std::move(impl));
}

double Linkage::value(int x, Subset set) const {
  const Impl& im = *impl_;
  if (!im.ground.contains(x) || !im.ground.contains(set))
    throw DomainError("linkage argument outside the ground set");
  if (set.contains(x))
    throw DomainError("linkage undefined for x inside X: x=" +
                      std::to_string(x) + ", X=" + format_subset(set));
  switch (im.kind) {
    case Kind::weight_minus_size:
      return im.weights[static_cast<std::size_t>(x - 1)] - set.size();
    case Kind::single_linkage: {
      if (set.empty()) return im.empty_value;
      double best = im.empty_value;
      for (int y : set)
        best = std::min(best,
                        im.distances[static_cast<std::size_t>(x - 1)]
                                    [static_cast<std::size_t>(y - 1)]);
      return best;
    }
    case Kind::table: {
      auto it = im.entries.find({x, set});
      assert(it != im.entries.end());
      return it->second;
    }
    case Kind::failure: {
      const FailureParams& fp = im.failure;
      if (fp.target.subset_of(set)) return 1.0;
      for (std::size_t i = 0; i < fp.letters.size(); ++i)
        if (x == fp.letters[i] && fp.chain_sets[i].subset_of(set)) return 1.0;
      return 2.0;
    }
  }
  return 0;
}

Linkage::Kind Linkage::kind() const { return impl_->kind; }
const GroundSet& Linkage::ground() const { return impl_->ground; }
const std::vector<double>* Linkage::weights() const {
  return impl_->kind == Kind::weight_minus_size ? &impl_->weights : nullptr;
}
const std::vector<std::vector<double>>* Linkage::distances() const {
  return impl_->kind == Kind::single_linkage ? &impl_->distances : nullptr;
}
double Linkage::empty_value() const { return impl_->empty_value; }
const LinkageTable* Linkage::table_entries() const {
  return impl_->kind == Kind::table ? &impl_->entries : nullptr;
}
const FailureParams* Linkage::failure_params() const {
  return impl_->kind == Kind::failure ? &impl_->failure : nullptr;
}

double linkage_value(const Linkage& pi, int x, Subset set) {
  return pi.value(x, set);
}

namespace {

std::vector<Subset> sorted_submasks(Subset base) {
  std::vector<Subset> out;
  const std::uint64_t comp = base.bits();
  for (std::uint64_t m = comp;; m = (m - 1) & comp) {
    out.push_back(Subset::from_bits(m));
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

std::optional<MonotoneWitness> check_monotone(const Linkage& pi) {
  const GroundSet& ground = pi.ground();
  if (ground.size() > 16)
    throw DomainError(
        "exhaustive monotonicity check is limited to 16 elements; use "
        "check_monotone_sampled");
  const Subset full = ground.full();
  for (int x = 1; x <= ground.size(); ++x) {
    const Subset domain = full.without(x);
    const auto subsets = sorted_submasks(domain);
    for (Subset small : subsets) {
      const double v_small = pi.value(x, small);
      std::optional<MonotoneWitness> best;
      for (Subset large : sorted_submasks(domain - small)) {
        Subset y = small | large;
        if (v_small < pi.value(x, y)) {
          MonotoneWitness w{x, small, y};
          if (!best || canonical_less(y, best->larger)) best = w;
        }
      }
      if (best) return best;
    }
  }
  return std::nullopt;
}

std::optional<MonotoneWitness> check_monotone_sampled(const Linkage& pi,
                                                      int samples,
                                                      unsigned seed) {
  const GroundSet& ground = pi.ground();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> elem(1, ground.size());
  for (int trial = 0; trial < samples; ++trial) {
    const int x = elem(rng);
    Subset small, extra;
    for (int e = 1; e <= ground.size(); ++e) {
      if (e == x) continue;
      const unsigned r = rng() % 4u;
      if (r == 0) small = small.with(e);
      if (r == 1) extra = extra.with(e);
    }
    const Subset large = small | extra;
    if (pi.value(x, small) < pi.value(x, large))
      return MonotoneWitness{x, small, large};
  }
  return std::nullopt;
}

ObjectiveValue objective_F(const Linkage& pi, Subset set) {
  const Subset candidates = pi.ground().full() - set;
  if (candidates.empty())
    throw DomainError("F undefined at the full ground set");
  ObjectiveValue out{0, 0};
  for (int x : candidates) {
    const double v = pi.value(x, set);
    if (out.argmin_element == 0 || v < out.value) out = {v, x};
  }
  return out;
}

ObjectiveValue objective_F_psi(const Linkage& pi, const Operator& op,
                               Subset set) {
  const Subset candidates = op.evaluate(set);
  if (candidates.empty())
    throw DomainError("F_Psi undefined: operator is empty at " +
                      format_subset(set));
  ObjectiveValue out{0, 0};
  for (int x : candidates) {
    const double v = pi.value(x, set);
    if (out.argmin_element == 0 || v < out.value) out = {v, x};
  }
  return out;
}

Linkage failure_linkage(const Operator& op, const IsotoneWitness& witness,
                        const GenerationTrace& trace) {
  const GroundSet& ground = op.ground();
  const Subset a_set = witness.a_set;
  const Subset b_set = witness.b_set;
  const int a = witness.element;

  if (!a_set.subset_of(b_set) || !ground.contains(a) || b_set.contains(a) ||
      !op.evaluate(a_set).contains(a) || op.evaluate(b_set).contains(a))
    throw DomainError("failure_linkage: not a genuine isotone witness");

  FailureParams fp;
  fp.chain_sets.push_back(Subset{});
  Subset prev;
  for (const auto& [step_set, added] : trace.chain_to(a_set)) {
    if (!op.evaluate(prev).contains(added) || !(prev.with(added) == step_set))
      throw DomainError(
          "failure_linkage: generation chain is inconsistent with the "
          "operator");
    fp.chain_sets.push_back(step_set);
    fp.letters.push_back(added);
    prev = step_set;
  }
  fp.letters.push_back(a);
  fp.target = a_set.with(a);
  fp.b_set = b_set;

  auto impl =
      std::make_shared<Linkage::Impl>(Linkage::Kind::failure, ground);
  impl->failure = std::move(fp);
  return Linkage(std::move(impl));
}

}  // namespace am
