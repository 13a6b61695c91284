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

#include "am/poset.hpp"

namespace am {

Poset::Poset(GroundSet ground, std::vector<std::pair<int, int>> covers)
    : ground_(std::move(ground)),
      covers_(std::move(covers)),
      below_(static_cast<std::size_t>(ground_.size())) {
  for (auto [a, b] : covers_) {
    if (!ground_.contains(a) || !ground_.contains(b) || a == b)
      throw DomainError("poset cover (" + std::to_string(a) + "," +
                        std::to_string(b) + ") is out of range");
    below_[static_cast<std::size_t>(b - 1)] =
        below_[static_cast<std::size_t>(b - 1)].with(a);
  }
  // Transitive closure by iterating below[b] |= below[a] for a < b.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 1; b <= ground_.size(); ++b) {
      Subset acc = below_[static_cast<std::size_t>(b - 1)];
      for (int a : acc) acc = acc | below_[static_cast<std::size_t>(a - 1)];
      if (!(acc == below_[static_cast<std::size_t>(b - 1)])) {
        below_[static_cast<std::size_t>(b - 1)] = acc;
        changed = true;
      }
    }
  }
  for (int e = 1; e <= ground_.size(); ++e)
    if (strictly_below(e).contains(e))
      throw DomainError("poset covers contain a cycle through element " +
                        std::to_string(e));
}

Subset Poset::minimal_elements(Subset s) const {
  Subset out;
  for (int e : s)
    if ((strictly_below(e) & s).empty()) out = out.with(e);
  return out;
}

}  // namespace am
