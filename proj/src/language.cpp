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

#include "am/language.hpp"

#include <algorithm>
#include <cassert>

namespace am {

bool Word::simple() const {
  Subset seen;
  for (int e : letters_) {
    if (e < 1 || e > 64 || seen.contains(e)) return false;
    seen = seen.with(e);
  }
  return true;
}

Subset Word::support() const { return prefix_support(length()); }

Subset Word::prefix_support(int i) const {
  Subset s;
  for (int j = 0; j < i; ++j)
    s = s.with(letters_[static_cast<std::size_t>(j)]);
  return s;
}

Word Word::prefix(int i) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + i));
}

Word Word::appended(int letter) const {
  std::vector<int> out = letters_;
  out.push_back(letter);
  return Word(std::move(out));
}

bool word_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

std::string format_word(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (int e : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

SimpleLanguage::SimpleLanguage(GroundSet ground, std::vector<Word> words)
    : ground_(std::move(ground)), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (!w.simple())
      throw DomainError("language word \"" + format_word(w) +
                        "\" repeats a letter");
    if (!ground_.contains(w.support()))
      throw DomainError("language word \"" + format_word(w) +
                        "\" exceeds the ground set");
  }
  std::sort(words_.begin(), words_.end(), word_less);
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty() || !words_.front().empty())
    throw DomainError("a simple language must contain the empty word");

  prefix_closed_ = true;
  for (const Word& w : words_)
    if (!w.empty() && !contains(w.prefix(w.length() - 1))) {
      prefix_closed_ = false;
      break;
    }
}

bool SimpleLanguage::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, word_less);
}

bool is_antimatroid_language(const SimpleLanguage& lang) {
  if (!lang.prefix_closed()) return false;
  for (const Word& alpha : lang.words()) {
    for (const Word& beta : lang.words()) {
      const Subset alpha_supp = alpha.support();
      if (alpha_supp.subset_of(beta.support())) continue;
      bool found = false;
      for (int x : alpha_supp - beta.support()) {
        if (lang.contains(beta.appended(x))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Family family_from_language(const SimpleLanguage& lang) {
  if (!is_antimatroid_language(lang))
    throw DomainError(
        "support family requires an antimatroid language; an axiom fails");
  std::vector<Subset> supports;
  supports.reserve(lang.words().size());
  for (const Word& w : lang.words()) supports.push_back(w.support());
  Family out(lang.ground(), std::move(supports));
#ifndef NDEBUG
  assert(is_antimatroid(out));
#endif
  return out;
}

namespace {

constexpr long kMaxWords = 1'000'000;

void collect_words(const Family& fam, const Word& word, Subset support,
                   std::vector<Word>& out) {
  if (static_cast<long>(out.size()) > kMaxWords)
    throw BudgetError("language materialization exceeds the word budget");
  out.push_back(word);
  for (int e : fam.ground().full() - support)
    if (fam.contains(support.with(e)))
      collect_words(fam, word.appended(e), support.with(e), out);
}

}  // namespace

SimpleLanguage language_from_family(const Family& fam) {
  if (!is_antimatroid(fam))
    throw DomainError("ordering language requires an antimatroid family");
  if (fam.ground().size() > 10)
    throw BudgetError(
        "language materialization is limited to 10 elements; use "
        "word_in_language for membership");
  std::vector<Word> words;
  collect_words(fam, Word{}, Subset{}, words);
  return SimpleLanguage(fam.ground(), std::move(words));
}

bool word_in_language(const Family& fam, const Word& w) {
  if (!w.simple() || !fam.ground().contains(w.support())) return false;
  for (int i = 1; i <= w.length(); ++i)
    if (!fam.contains(w.prefix_support(i))) return false;
  return fam.contains(Subset{});
}

double nesting_W(const NestingFunction& f, const Word& alpha) {
  if (alpha.empty()) throw DomainError("W is undefined on the empty word");
  if (!alpha.simple()) throw DomainError("W requires a simple word");
  double best = 0;
  for (int i = 1; i <= alpha.length(); ++i) {
    const double v =
        f(alpha.letters()[static_cast<std::size_t>(i - 1)],
          alpha.prefix_support(i));
    if (i == 1 || v > best) best = v;
  }
  return best;
}

Word greedy_minimax(const Operator& op, const NestingFunction& f, int k) {
  if (k < 1) throw DomainError("greedy_minimax requires k >= 1");
  Word word;
  Subset support;
  for (int step = 0; step < k; ++step) {
    const Subset continuations = op.evaluate(support);
    if (continuations.empty())
      throw DomainError("greedy chain stuck at " + format_subset(support) +
                        " before reaching length " + std::to_string(k) +
                        " (is k larger than the rank?)");
    int chosen = 0;
    double best = 0;
    for (int x : continuations) {
      const double v = f(x, support.with(x));
      if (chosen == 0 || v < best) {
        best = v;
        chosen = x;
      }
    }
    word = word.appended(chosen);
    support = support.with(chosen);
  }
  return word;
}

}  // namespace am
