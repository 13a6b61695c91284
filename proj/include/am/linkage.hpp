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

#ifndef AM_LINKAGE_HPP
#define AM_LINKAGE_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "am/operators.hpp"

namespace am {

struct LinkageKeyLess {
  bool operator()(const std::pair<int, Subset>& a,
                  const std::pair<int, Subset>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return canonical_less(a.second, b.second);
  }
};
using LinkageTable = std::map<std::pair<int, Subset>, double, LinkageKeyLess>;

/// Parameters of the adversarial two-valued linkage built from a
/// non-isotone witness: the generation chain {} = A0 c ... c Ak = A with
/// added letters a1..ak, the witness element a = a(k+1), and the target
/// A + a.
struct FailureParams {
  std::vector<Subset> chain_sets;  // A0 .. Ak
  std::vector<int> letters;        // a1 .. a(k+1); the last one is a
  Subset target;                   // A + a
  Subset b_set;                    // the witness set B, kept for round-trips

  friend bool operator==(const FailureParams&,
                         const FailureParams&) = default;
};

/// A linkage function pi(x, X), defined for x outside X. Values are
/// compared exactly (no tolerance): every construction in this library
/// produces values that both sides of any comparison compute identically.
///
/// Kinds:
///   weight_minus_size  pi(x, X) = w_x - |X|         (always monotone)
///   single_linkage     pi(x, X) = min over y in X of d(x, y); the empty
///                      set maps to a sentinel M >= every distance
///   table              explicit values, total over the domain
///   failure            the two-valued construction from a non-isotone
///                      witness (see failure_linkage)
class Linkage {
 public:
  enum class Kind { table, weight_minus_size, single_linkage, failure };

  static Linkage weight_minus_size(GroundSet ground, std::vector<double> w);
  /// d is a full symmetric matrix with zero diagonal. empty_value defaults
  /// to 2 * (max distance) + 1 and must dominate every distance, otherwise
  /// monotonicity would fail between the empty set and singletons.
  static Linkage single_linkage(GroundSet ground,
                                std::vector<std::vector<double>> d,
                                std::optional<double> empty_value = {});
  /// Must be total over { (x, X) : x in E - X }; missing entries are
  /// construction errors, unlike operator tables, because objectives take
  /// minima over them.
  static Linkage table(GroundSet ground, LinkageTable entries);

  [[nodiscard]] double value(int x, Subset set) const;
  [[nodiscard]] Kind kind() const;
  [[nodiscard]] const GroundSet& ground() const;

  // Kind-specific accessors for serialization; null when not applicable.
  [[nodiscard]] const std::vector<double>* weights() const;
  [[nodiscard]] const std::vector<std::vector<double>>* distances() const;
  [[nodiscard]] double empty_value() const;
  [[nodiscard]] const LinkageTable* table_entries() const;
  [[nodiscard]] const FailureParams* failure_params() const;

 private:
  friend Linkage failure_linkage(const Operator&, const IsotoneWitness&,
                                 const GenerationTrace&);
  struct Impl;
  explicit Linkage(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// A counterexample to monotonicity: x outside Y, X subset of Y, yet
/// pi(x, X) < pi(x, Y).
struct MonotoneWitness {
  int element = 0;
  Subset smaller;
  Subset larger;

  friend bool operator==(const MonotoneWitness&,
                         const MonotoneWitness&) = default;
};

/// pi(x, X) per the linkage's formula. x must lie outside X.
double linkage_value(const Linkage& pi, int x, Subset set);

/// Exhaustive monotonicity check (ground sets of at most 16 elements):
/// returns the first witness in (x, X, Y) order, or nullopt.
std::optional<MonotoneWitness> check_monotone(const Linkage& pi);

/// Randomized check drawing chains X subset of Y; for ground sets too
/// large for the exhaustive sweep.
std::optional<MonotoneWitness> check_monotone_sampled(const Linkage& pi,
                                                      int samples,
                                                      unsigned seed);

/// A minimum together with the smallest element attaining it.
struct ObjectiveValue {
  double value = 0;
  int argmin_element = 0;

  friend bool operator==(const ObjectiveValue&,
                         const ObjectiveValue&) = default;
};

/// F(X) = min over x in E-X of pi(x, X). X must be a proper subset.
ObjectiveValue objective_F(const Linkage& pi, Subset set);

/// F_Psi(X) = min over x in Psi(X) of pi(x, X). Psi(X) must be non-empty.
ObjectiveValue objective_F_psi(const Linkage& pi, const Operator& op,
                               Subset set);

/// The adversarial linkage from the converse direction of the chain
/// optimality theorem: given a genuine witness (A, B, a) for op and a
/// generation chain to A, produces the monotone two-valued linkage under
/// which the chain construction only ever sees value 1 while F_Psi(B) = 2.
Linkage failure_linkage(const Operator& op, const IsotoneWitness& witness,
                        const GenerationTrace& trace);

}  // namespace am

#endif  // AM_LINKAGE_HPP
