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

#ifndef AM_SETS_HPP
#define AM_SETS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "am/error.hpp"

namespace am {

/// A subset of a ground set of at most 64 elements, stored as a bitmask.
/// Element identifiers are 1-based; element e occupies bit e-1.
class Subset {
 public:
  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s = s.with(e);
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(int e) const {
    return (bits_ >> (e - 1)) & 1u;
  }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }

  [[nodiscard]] constexpr Subset with(int e) const {
    return Subset(bits_ | bit(e));
  }
  [[nodiscard]] constexpr Subset without(int e) const {
    return Subset(bits_ & ~bit(e));
  }
  [[nodiscard]] constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  /// Smallest element, or 0 if empty.
  [[nodiscard]] constexpr int min_element() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  /// Largest element, or 0 if empty.
  [[nodiscard]] constexpr int max_element() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  /// Iterates the elements in ascending identifier order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_;
  };
  [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int e : *this) out.push_back(e);
    return out;
  }

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t bit(int e) {
    return std::uint64_t{1} << (e - 1);
  }

  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then by bitmask value. All deterministic
/// iteration and witness selection in the library uses this order.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    return canonical_less(a, b);
  }
};

/// The finite ground set E = {1, ..., n}, with optional display labels.
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > 64)
      throw DomainError("ground set size must be between 1 and 64");
    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != n)
        throw DomainError("label count must equal ground set size");
      for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
          if (labels_[i] == labels_[j])
            throw DomainError("ground set labels must be distinct");
    }
  }

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] Subset full() const {
    return Subset::from_bits(n_ == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n_) - 1);
  }
  [[nodiscard]] bool contains(int e) const { return 1 <= e && e <= n_; }
  [[nodiscard]] bool contains(Subset s) const { return s.subset_of(full()); }
  [[nodiscard]] const std::vector<std::string>& labels() const {
    return labels_;
  }
  [[nodiscard]] std::string label(int e) const {
    return labels_.empty() ? std::to_string(e) : labels_[e - 1];
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  int n_;
  std::vector<std::string> labels_;
};

/// Renders a subset as "{1,3}"; the empty set renders as "{}".
std::string format_subset(Subset s);

/// Shortest decimal rendering that round-trips the value exactly.
std::string format_value(double v);

}  // namespace am

#endif  // AM_SETS_HPP
