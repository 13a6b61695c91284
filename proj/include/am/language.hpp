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

#ifndef AM_LANGUAGE_HPP
#define AM_LANGUAGE_HPP

#include <functional>
#include <string>
#include <vector>

#include "am/family.hpp"
#include "am/operators.hpp"

namespace am {

/// A repeat-free sequence of element identifiers.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] int length() const {
    return static_cast<int>(letters_.size());
  }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] bool simple() const;
  /// The support: the set of letters.
  [[nodiscard]] Subset support() const;
  /// Support of the first i letters.
  [[nodiscard]] Subset prefix_support(int i) const;
  [[nodiscard]] Word prefix(int i) const;
  [[nodiscard]] Word appended(int letter) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// Length-then-lexicographic order; used for all deterministic word lists.
bool word_less(const Word& a, const Word& b);

/// Renders letters space-separated; the empty word renders as "-".
std::string format_word(const Word& w);

/// A finite set of simple words over the ground set, always containing
/// the empty word. Kept duplicate-free in canonical order.
class SimpleLanguage {
 public:
  SimpleLanguage(GroundSet ground, std::vector<Word> words);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  [[nodiscard]] bool contains(const Word& w) const;
  /// Whether every proper prefix of every word is present (computed at
  /// construction).
  [[nodiscard]] bool prefix_closed() const { return prefix_closed_; }

  friend bool operator==(const SimpleLanguage& a, const SimpleLanguage& b) {
    return a.ground_ == b.ground_ && a.words_ == b.words_;
  }

 private:
  GroundSet ground_;
  std::vector<Word> words_;
  bool prefix_closed_;
};

/// Both antimatroid-language axioms: prefix closure, and exchange on
/// supports (for words with support of alpha not inside support of beta,
/// some letter of alpha extends beta within the language).
bool is_antimatroid_language(const SimpleLanguage& lang);

/// The support family { support(alpha) : alpha in L }. Requires an
/// antimatroid language; the result is an antimatroid.
Family family_from_language(const SimpleLanguage& lang);

/// All orderings whose every prefix support is feasible. Requires an
/// antimatroid. Materialization is limited to 10 elements and one million
/// words; use word_in_language for membership above that.
SimpleLanguage language_from_family(const Family& fam);

/// Lazy membership test: every prefix support of w is feasible.
bool word_in_language(const Family& fam, const Word& w);

/// An evaluator f(x, A) with x in A, antitone in A by contract.
class NestingFunction {
 public:
  using Fn = std::function<double(int, Subset)>;
  explicit NestingFunction(Fn f) : f_(std::move(f)) {}

  double operator()(int x, Subset a_set) const {
    if (!a_set.contains(x))
      throw DomainError("nesting function requires x inside A");
    return f_(x, a_set);
  }

 private:
  Fn f_;
};

/// The maximum nesting value W(x1...xk): the maximum of f(xi, support of
/// the first i letters) over i. Undefined on the empty word.
double nesting_W(const NestingFunction& f, const Word& alpha);

/// The greedy minimax-nesting step rule: extend by the feasible
/// continuation minimizing f(x, X + x), ties towards the smallest
/// identifier. Requires k between 1 and the rank; throws if the chain
/// gets stuck before reaching length k.
Word greedy_minimax(const Operator& op, const NestingFunction& f, int k);

}  // namespace am

#endif  // AM_LANGUAGE_HPP
