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

#ifndef AM_POSET_HPP
#define AM_POSET_HPP

#include <utility>
#include <vector>

#include "am/sets.hpp"

namespace am {

/// A partial order on the ground set, given by cover pairs (a, b) meaning
/// a < b. Construction rejects cyclic inputs.
class Poset {
 public:
  Poset(GroundSet ground, std::vector<std::pair<int, int>> covers);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& covers() const {
    return covers_;
  }

  /// All elements strictly below e in the transitive closure.
  [[nodiscard]] Subset strictly_below(int e) const {
    return below_[static_cast<std::size_t>(e - 1)];
  }

  /// Minimal elements of s: members with no strict predecessor inside s.
  [[nodiscard]] Subset minimal_elements(Subset s) const;

 private:
  GroundSet ground_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Subset> below_;
};

}  // namespace am

#endif  // AM_POSET_HPP
