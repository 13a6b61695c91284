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

#include "am/family.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <set>

namespace am {

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  assert(ec == std::errc());
  return std::string(buf, ptr);
}

Family::Family(GroundSet ground, std::vector<Subset> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (Subset s : sets_)
    if (!ground_.contains(s))
      throw DomainError("family member " + format_subset(s) +
                        " exceeds the ground set");
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool Family::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
}

bool is_accessible(const Family& fam) {
  if (!fam.contains(Subset{})) return false;
  for (Subset x : fam) {
    if (x.empty()) continue;
    bool has_parent = false;
    for (int e : x) {
      if (fam.contains(x.without(e))) {
        has_parent = true;
        break;
      }
    }
    if (!has_parent) return false;
  }
  return true;
}

bool satisfies_exchange(const Family& fam) {
  for (Subset x : fam) {
    for (Subset y : fam) {
      if (x.subset_of(y)) continue;
      bool found = false;
      for (int e : x - y) {
        if (fam.contains(y.with(e))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_union_closed(const Family& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!fam.contains(fam.sets()[i] | fam.sets()[j])) return false;
  return true;
}

bool has_interval_property(const Family& fam) {
  const Subset full = fam.ground().full();
  for (Subset x : fam) {
    for (Subset y : fam) {
      if (!x.subset_of(y)) continue;
      for (int e : full - y) {
        if (fam.contains(x.with(e)) && !fam.contains(y.with(e))) return false;
      }
    }
  }
  return true;
}

bool is_antimatroid(const Family& fam) {
  const bool accessible = is_accessible(fam);
  const bool closed = accessible && is_union_closed(fam);
#ifndef NDEBUG
  // Proposition 1: the three criteria coincide on accessible systems.
  if (accessible) {
    assert(closed == satisfies_exchange(fam));
    assert(closed == has_interval_property(fam));
  }
#endif
  return accessible && closed;
}

Subset feasible_continuations(const Family& fam, Subset x) {
  if (!fam.contains(x))
    throw DomainError("feasible_continuations: " + format_subset(x) +
                      " is not feasible");
  Subset gamma;
  for (int e : fam.ground().full() - x)
    if (fam.contains(x.with(e))) gamma = gamma.with(e);
  return gamma;
}

Subset basis_of(const Family& fam, Subset x) {
  if (!is_union_closed(fam) || !is_accessible(fam))
    throw DomainError(
        "basis_of requires an antimatroid; the basis may be ambiguous "
        "otherwise");
  Subset basis;
  for (Subset y : fam)
    if (y.subset_of(x)) basis = basis | y;
  return basis;
}

int rank(const Family& fam, Subset x) {
  int best = 0;
  for (Subset y : fam)
    if (y.subset_of(x)) best = std::max(best, y.size());
  return best;
}

int rank(const Family& fam) { return rank(fam, fam.ground().full()); }

Subset max_feasible(const Family& fam) {
  if (fam.size() == 0) throw DomainError("max_feasible: empty family");
  if (!is_union_closed(fam))
    throw DomainError("max_feasible requires a union-closed family");
  Subset all;
  for (Subset y : fam) all = all | y;
  return all;
}

Family truncate(const Family& fam, int k) {
  if (k < 0) throw DomainError("truncate: k must be non-negative");
  std::vector<Subset> kept;
  for (Subset y : fam)
    if (y.size() <= k) kept.push_back(y);
  return Family(fam.ground(), std::move(kept));
}

Family close_under_union(const Family& fam) {
  std::set<Subset, CanonicalLess> closed(fam.begin(), fam.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> fresh;
    for (auto i = closed.begin(); i != closed.end(); ++i)
      for (auto j = std::next(i); j != closed.end(); ++j) {
        Subset u = *i | *j;
        if (!closed.count(u)) fresh.push_back(u);
      }
    for (Subset u : fresh) grew |= closed.insert(u).second;
  }
  Family out(fam.ground(), std::vector<Subset>(closed.begin(), closed.end()));
#ifndef NDEBUG
  if (is_accessible(fam)) assert(is_accessible(out));
#endif
  return out;
}

}  // namespace am
