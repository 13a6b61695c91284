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

// Batch front end over the library: loads instance files, runs the
// verifications, generators, optimizers, and correspondence checks, and
// prints deterministic structured text.
//
// Exit codes: 0 all checks pass, 1 semantic failure (an axiom, an
// optimality comparison, or a correspondence check fails), 2 malformed
// input.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "am/chain.hpp"
#include "am/correspondence.hpp"
#include "am/io.hpp"
#include "am/oracle.hpp"

namespace {

using namespace am;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

Family family_of(const InstanceDocument& doc) {
  if (doc.family) return *doc.family;
  if (doc.op) return generate_family(*doc.op).family;
  throw ParseError("this command needs a family or an operator");
}

const Operator& operator_of(const InstanceDocument& doc) {
  if (!doc.op) throw ParseError("this command needs an operator");
  return *doc.op;
}

const Linkage& linkage_of(const InstanceDocument& doc) {
  if (!doc.linkage) throw ParseError("this command needs a linkage");
  return *doc.linkage;
}

void print_family(const Family& fam) {
  for (Subset s : fam) std::cout << format_subset(s) << "\n";
}

std::string witness_str(const IsotoneWitness& w) {
  return "witness A=" + format_subset(w.a_set) +
         " B=" + format_subset(w.b_set) + " a=" + std::to_string(w.element);
}

// ----- verify ---------------------------------------------------------

int verify_family(const Family& fam) {
  bool all = true;
  const Subset full = fam.ground().full();

  {
    bool ok = true;
    std::string detail;
    if (!fam.contains(Subset{})) {
      ok = false;
      detail = " the empty set is not feasible";
    } else {
      for (Subset x : fam) {
        if (x.empty()) continue;
        bool parent = false;
        for (int e : x)
          if (fam.contains(x.without(e))) parent = true;
        if (!parent) {
          ok = false;
          detail = " witness " + format_subset(x);
          break;
        }
      }
    }
    std::cout << "accessible: " << (ok ? "pass" : "FAIL" + detail) << "\n";
    all = all && ok;
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; ok && i < fam.size(); ++i)
      for (std::size_t j = i + 1; ok && j < fam.size(); ++j)
        if (!fam.contains(fam.sets()[i] | fam.sets()[j])) {
          ok = false;
          detail = " witness " + format_subset(fam.sets()[i]) + " " +
                   format_subset(fam.sets()[j]);
        }
    std::cout << "union-closed: " << (ok ? "pass" : "FAIL" + detail) << "\n";
    all = all && ok;
  }

  {
    bool ok = true;
    std::string detail;
    for (Subset x : fam) {
      for (Subset y : fam) {
        if (x.subset_of(y)) continue;
        bool found = false;
        for (int e : x - y)
          if (fam.contains(y.with(e))) found = true;
        if (!found) {
          ok = false;
          detail =
              " witness X=" + format_subset(x) + " Y=" + format_subset(y);
          break;
        }
      }
      if (!ok) break;
    }
    std::cout << "exchange: " << (ok ? "pass" : "FAIL" + detail) << "\n";
    all = all && ok;
  }

  {
    bool ok = true;
    std::string detail;
    for (Subset x : fam) {
      for (Subset y : fam) {
        if (!x.subset_of(y)) continue;
        for (int e : full - y)
          if (fam.contains(x.with(e)) && !fam.contains(y.with(e))) {
            ok = false;
            detail = " witness X=" + format_subset(x) +
                     " Y=" + format_subset(y) + " x=" + std::to_string(e);
            break;
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
    std::cout << "interval: " << (ok ? "pass" : "FAIL" + detail) << "\n";
    all = all && ok;
  }

  const bool anti = is_antimatroid(fam);
  std::cout << "antimatroid: " << (anti ? "pass" : "FAIL") << "\n";
  return all && anti ? kExitPass : kExitFail;
}

int verify_operator(const Operator& op) {
  bool all = true;
  const int n = op.ground().size();

  bool zero_ok = true;
  if (n <= 16) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Subset x = Subset::from_bits(bits);
      if (!(op.evaluate(x) & x).empty()) {
        zero_ok = false;
        std::cout << "condition-zero: FAIL witness " << format_subset(x)
                  << "\n";
        break;
      }
    }
  }
  if (zero_ok) std::cout << "condition-zero: pass\n";
  all = all && zero_ok;

  if (op.kind() == Operator::Kind::truncated) {
    if (auto w = check_k_isotone(op, op.cutoff())) {
      std::cout << "k-isotone: FAIL " << witness_str(*w) << "\n";
      all = false;
    } else {
      std::cout << "k-isotone: pass\n";
    }
  } else {
    const auto scope =
        n <= 16 ? IsotoneScope::all_subsets : IsotoneScope::feasible_only;
    if (auto w = check_isotone(op, scope)) {
      std::cout << "isotone: FAIL " << witness_str(*w) << "\n";
      all = false;
    } else {
      std::cout << "isotone: pass\n";
    }
  }
  return all ? kExitPass : kExitFail;
}

int verify_linkage(const Linkage& pi) {
  const auto w = pi.ground().size() <= 16
                     ? check_monotone(pi)
                     : check_monotone_sampled(pi, 20000, 1);
  if (w) {
    std::cout << "monotone: FAIL witness x=" << w->element
              << " X=" << format_subset(w->smaller)
              << " Y=" << format_subset(w->larger) << "\n";
    return kExitFail;
  }
  std::cout << "monotone: pass\n";
  return kExitPass;
}

int verify_language(const SimpleLanguage& lang) {
  bool all = true;

  if (lang.prefix_closed()) {
    std::cout << "prefix-closed: pass\n";
  } else {
    for (const Word& w : lang.words())
      if (!w.empty() && !lang.contains(w.prefix(w.length() - 1))) {
        std::cout << "prefix-closed: FAIL missing prefix of word "
                  << format_word(w) << "\n";
        break;
      }
    all = false;
  }

  bool exchange_ok = true;
  for (const Word& alpha : lang.words()) {
    for (const Word& beta : lang.words()) {
      if (alpha.support().subset_of(beta.support())) continue;
      bool found = false;
      for (int x : alpha.support() - beta.support())
        if (lang.contains(beta.appended(x))) found = true;
      if (!found) {
        std::cout << "exchange: FAIL witness alpha=" << format_word(alpha)
                  << " beta=" << format_word(beta) << "\n";
        exchange_ok = false;
        break;
      }
    }
    if (!exchange_ok) break;
  }
  if (exchange_ok) std::cout << "exchange: pass\n";
  all = all && exchange_ok;

  std::cout << "antimatroid-language: " << (all ? "pass" : "FAIL") << "\n";
  return all ? kExitPass : kExitFail;
}

int cmd_verify(const InstanceDocument& doc, const std::string& what) {
  if (what == "family") return verify_family(family_of(doc));
  if (what == "operator") return verify_operator(operator_of(doc));
  if (what == "linkage") return verify_linkage(linkage_of(doc));
  if (what == "language") {
    if (!doc.language) throw ParseError("this command needs a language");
    return verify_language(*doc.language);
  }
  throw ParseError("unknown verification target: " + what);
}

// ----- generate / truncate / close ------------------------------------

int cmd_generate(const InstanceDocument& doc) {
  print_family(generate_family(operator_of(doc)).family);
  return kExitPass;
}

int cmd_truncate(const InstanceDocument& doc, int k) {
  print_family(truncate(family_of(doc), k));
  return kExitPass;
}

int cmd_close(const InstanceDocument& doc) {
  print_family(close_under_union(family_of(doc)));
  return kExitPass;
}

// ----- optimize --------------------------------------------------------

int cmd_optimize(const InstanceDocument& doc, bool exclude_empty, bool trace,
                 bool oracle) {
  const Operator& op = operator_of(doc);
  const Linkage& pi = linkage_of(doc);

  const Family fam = generate_family(op).family;
  if (auto stuck = find_stuck_set(op, fam)) {
    std::cout << "error: operator is empty at " << format_subset(*stuck)
              << " although a feasible continuation exists\n";
    return kExitFail;
  }

  OptResult r;
  try {
    r = run_chain(op, pi);
  } catch (const DomainError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitFail;
  }

  Subset optimum = r.optimum;
  double value = r.value;
  if (exclude_empty) {
    bool found = false;
    for (const ChainStep& s : r.trace.steps) {
      if (s.set.empty()) continue;
      if (!found || s.value > value) {
        optimum = s.set;
        value = s.value;
        found = true;
      }
    }
    if (!found) {
      std::cout << "error: the chain visits no non-empty set\n";
      return kExitFail;
    }
  }

  std::cout << "optimum " << format_subset(optimum) << " value "
            << format_value(value) << "\n";

  if (trace) {
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
      const ChainStep& s = r.trace.steps[i];
      std::cout << "step " << i << " X=" << format_subset(s.set)
                << " F=" << format_value(s.value) << " pick " << s.chosen
                << "\n";
    }
    std::cout << "terminal " << format_subset(r.trace.terminal) << "\n";
    std::cout << "linkage-evaluations " << r.trace.linkage_evaluations
              << "\n";
  }

  if (oracle) {
    std::optional<BruteMaxResult> brute;
    try {
      brute = brute_max_F_psi(op, pi, {}, exclude_empty);
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
      return kExitFail;
    }
    std::cout << "oracle " << format_value(brute->value) << " argmax";
    for (Subset s : brute->argmax) std::cout << " " << format_subset(s);
    std::cout << "\n";
    const bool match = brute->value == value;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!match) return kExitFail;
  }
  return kExitPass;
}

// ----- lang ------------------------------------------------------------

int cmd_lang_words(const InstanceDocument& doc) {
  const SimpleLanguage lang = language_from_family(family_of(doc));
  for (const Word& w : lang.words()) std::cout << format_word(w) << "\n";
  return kExitPass;
}

int cmd_lang_minimax(const InstanceDocument& doc, int k) {
  const Operator op = doc.op ? *doc.op : operator_from_family(family_of(doc));
  const BridgedNesting f = bridge_f_from_pi(linkage_of(doc));

  Word word;
  try {
    word = greedy_minimax(op, f.fn(), k);
  } catch (const DomainError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitFail;
  }
  const double w_value = nesting_W(f.fn(), word);
  const BruteMinimaxResult brute = brute_minimax_W(op, f.fn(), k);
  const bool match = w_value == brute.value;
  std::cout << format_word(word) << " W=" << format_value(w_value) << " "
            << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kExitPass : kExitFail;
}

// ----- correspond ------------------------------------------------------

int cmd_correspond(const InstanceDocument& doc, int k) {
  CorrespondenceReport rep;
  try {
    rep = verify_correspondence(operator_of(doc), linkage_of(doc), k);
  } catch (const DomainError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitFail;
  }
  std::cout << "word " << format_word(rep.word) << "\n";
  std::cout << "p " << rep.p << "\n";
  std::cout << "prefix " << format_subset(rep.prefix_set) << "\n";
  std::cout << "chain_value " << format_value(rep.chain_value) << "\n";
  std::cout << "nesting_value " << format_value(rep.nesting_value) << "\n";
  std::cout << (rep.holds ? "HOLDS" : "VIOLATED") << "\n";
  return rep.holds ? kExitPass : kExitFail;
}

// ----- random ----------------------------------------------------------

int cmd_random(const std::string& kind, unsigned seed, int n, int levels) {
  if (kind == "isotone") {
    std::cout << serialize_operator_instance(
        random_isotone_operator(seed, n));
    return kExitPass;
  }
  if (kind == "linkage") {
    std::cout << serialize_linkage_instance(
        random_monotone_linkage(seed, n, levels));
    return kExitPass;
  }
  if (kind == "nonisotone") {
    const NonIsotoneInstance inst = random_nonisotone_operator(seed, n);
    const Generation gen = generate_family(inst.op);
    std::cout << serialize_failure_instance(inst.op, inst.witness, gen.trace);
    return kExitPass;
  }
  throw ParseError("unknown random kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "antimatroid toolkit: operator-generated set systems, monotone "
      "linkage optimization, and the ordered (language) view"};
  app.require_subcommand(1);

  std::string path, what, sub, kind = "isotone";
  int k = 0, n = 4, levels = 2;
  unsigned seed = 1;
  bool exclude_empty = false, trace = false, oracle = false;

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "check axioms of a component");
  verify->add_option("path", path)->required();
  verify->add_option("what", what, "family|operator|linkage|language")
      ->required();
  verify->callback(
      [&] { action = [&] { return cmd_verify(load_instance(path), what); }; });

  auto* generate =
      app.add_subcommand("generate", "list the operator-generated family");
  generate->add_option("path", path)->required();
  generate->callback(
      [&] { action = [&] { return cmd_generate(load_instance(path)); }; });

  auto* optimize = app.add_subcommand(
      "optimize", "run the greedy chain construction over the linkage");
  optimize->add_option("path", path)->required();
  optimize->add_flag("--exclude-empty", exclude_empty,
                     "report the best non-empty set");
  optimize->add_flag("--trace", trace, "print the chain table");
  optimize->add_flag("--oracle", oracle,
                     "compare against the brute-force maximum");
  optimize->callback([&] {
    action = [&] {
      return cmd_optimize(load_instance(path), exclude_empty, trace, oracle);
    };
  });

  auto* truncate_cmd = app.add_subcommand(
      "truncate", "restrict the family to sets of size <= k");
  truncate_cmd->add_option("path", path)->required();
  truncate_cmd->add_option("-k", k, "size bound")->required();
  truncate_cmd->callback(
      [&] { action = [&] { return cmd_truncate(load_instance(path), k); }; });

  auto* close_cmd = app.add_subcommand("close", "close the family under union");
  close_cmd->add_option("path", path)->required();
  close_cmd->callback(
      [&] { action = [&] { return cmd_close(load_instance(path)); }; });

  auto* lang = app.add_subcommand("lang", "the ordered (language) view");
  lang->add_option("path", path)->required();
  lang->add_option("sub", sub, "words|check|minimax")->required();
  lang->add_option("-k", k, "word length for minimax");
  lang->callback([&] {
    action = [&] {
      const InstanceDocument doc = load_instance(path);
      if (sub == "words") return cmd_lang_words(doc);
      if (sub == "check") {
        if (!doc.language) throw ParseError("this command needs a language");
        return verify_language(*doc.language);
      }
      if (sub == "minimax") return cmd_lang_minimax(doc, k);
      throw ParseError("unknown lang subcommand: " + sub);
    };
  });

  auto* correspond =
      app.add_subcommand("correspond", "check the chain/minimax translation");
  correspond->add_option("path", path)->required();
  correspond->add_option("-k", k, "word length; 0 derives the rank");
  correspond->callback([&] {
    action = [&] { return cmd_correspond(load_instance(path), k); };
  });

  auto* random_cmd = app.add_subcommand("random", "emit a generated instance");
  random_cmd->add_option("--kind", kind, "isotone|linkage|nonisotone");
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("--n", n, "ground set size");
  random_cmd->add_option("--levels", levels, "linkage level count");
  random_cmd->callback(
      [&] { action = [&] { return cmd_random(kind, seed, n, levels); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    // A semantically invalid component inside a well-formed file.
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
