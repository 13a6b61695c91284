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

#include "am/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace am {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& text, std::size_t byte,
                          const std::string& message) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(message + " at line " + std::to_string(line) +
                       ", column " + std::to_string(column),
                   line, column);
}

[[noreturn]] void schema_error(const std::string& message) {
  throw ParseError("instance schema: " + message);
}

Subset parse_subset(const ordered_json& j, const GroundSet& ground,
                    const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  Subset s;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      schema_error(std::string(what) + " must hold integers");
    const int v = e.get<int>();
    if (!ground.contains(v))
      schema_error(std::string(what) + " element " + std::to_string(v) +
                   " is outside the ground set");
    s = s.with(v);
  }
  return s;
}

Family parse_family(const ordered_json& j, const GroundSet& ground) {
  if (!j.is_array()) schema_error("family must be an array of sets");
  std::vector<Subset> sets;
  for (const auto& s : j) sets.push_back(parse_subset(s, ground, "family set"));
  return Family(ground, std::move(sets));
}

GroundSet parse_ground(const ordered_json& j) {
  if (j.is_number_integer()) return GroundSet(j.get<int>());
  if (j.is_object()) {
    if (!j.contains("n") || !j.at("n").is_number_integer())
      schema_error("ground object requires an integer field \"n\"");
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return GroundSet(j.at("n").get<int>(), std::move(labels));
  }
  schema_error("ground must be an integer or an object");
}

Operator parse_operator(const ordered_json& j, const GroundSet& ground) {
  if (!j.is_object() || !j.contains("kind"))
    schema_error("operator requires a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "full") return Operator::full(ground);
  if (kind == "max_order") return Operator::max_order(ground);
  if (kind == "chain") return Operator::chain(ground);
  if (kind == "poset_min") {
    if (!j.contains("covers")) schema_error("poset_min requires \"covers\"");
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        schema_error("each cover must be a pair [a, b]");
      covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    }
    return Operator::poset_min(Poset(ground, std::move(covers)));
  }
  if (kind == "table") {
    if (!j.contains("entries")) schema_error("table requires \"entries\"");
    OperatorTable entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2)
        schema_error("each table entry must be a pair [set, value-set]");
      entries[parse_subset(e.at(0), ground, "table key")] =
          parse_subset(e.at(1), ground, "table value");
    }
    return Operator::table(ground, std::move(entries));
  }
  if (kind == "basis_of_family") {
    if (!j.contains("family"))
      schema_error("basis_of_family requires \"family\"");
    return Operator::basis_of_family(parse_family(j.at("family"), ground));
  }
  if (kind == "truncated") {
    if (!j.contains("cutoff") || !j.contains("inner"))
      schema_error("truncated requires \"cutoff\" and \"inner\"");
    return Operator::truncated(parse_operator(j.at("inner"), ground),
                               j.at("cutoff").get<int>());
  }
  schema_error("unknown operator kind \"" + kind + "\"");
}

Linkage parse_linkage(const ordered_json& j, const GroundSet& ground,
                      const std::optional<Operator>& op) {
  if (!j.is_object() || !j.contains("kind"))
    schema_error("linkage requires a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "weight_minus_size") {
    if (!j.contains("weights"))
      schema_error("weight_minus_size requires \"weights\"");
    return Linkage::weight_minus_size(
        ground, j.at("weights").get<std::vector<double>>());
  }
  if (kind == "single_linkage") {
    if (!j.contains("distances"))
      schema_error("single_linkage requires \"distances\"");
    std::optional<double> m;
    if (j.contains("empty_value")) m = j.at("empty_value").get<double>();
    return Linkage::single_linkage(
        ground, j.at("distances").get<std::vector<std::vector<double>>>(), m);
  }
  if (kind == "table") {
    if (!j.contains("entries")) schema_error("table requires \"entries\"");
    LinkageTable entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3)
        schema_error("each linkage entry must be [x, set, value]");
      entries[{e.at(0).get<int>(),
               parse_subset(e.at(1), ground, "linkage key set")}] =
          e.at(2).get<double>();
    }
    return Linkage::table(ground, std::move(entries));
  }
  if (kind == "failure") {
    if (!op)
      schema_error("a failure linkage requires an operator in the document");
    if (!j.contains("witness")) schema_error("failure requires \"witness\"");
    const auto& w = j.at("witness");
    IsotoneWitness witness{parse_subset(w.at("A"), ground, "witness A"),
                           parse_subset(w.at("B"), ground, "witness B"),
                           w.at("a").get<int>()};
    GenerationTrace trace(ground);
    Subset prev;
    if (j.contains("chain"))
      for (const auto& l : j.at("chain")) {
        const int letter = l.get<int>();
        if (!ground.contains(letter) || prev.contains(letter))
          schema_error("failure chain letters must form a simple word");
        trace.record(prev.with(letter), prev, letter);
        prev = prev.with(letter);
      }
    if (!(prev == witness.a_set))
      schema_error("failure chain must end at witness A");
    return failure_linkage(*op, witness, trace);
  }
  schema_error("unknown linkage kind \"" + kind + "\"");
}

SimpleLanguage parse_language(const ordered_json& j, const GroundSet& ground) {
  if (!j.is_array()) schema_error("language must be an array of words");
  std::vector<Word> words;
  for (const auto& w : j) {
    if (!w.is_array()) schema_error("each word must be an array of letters");
    words.emplace_back(w.get<std::vector<int>>());
  }
  return SimpleLanguage(ground, std::move(words));
}

ordered_json subset_json(Subset s) {
  ordered_json arr = ordered_json::array();
  for (int e : s) arr.push_back(e);
  return arr;
}

ordered_json family_json(const Family& fam) {
  ordered_json arr = ordered_json::array();
  for (Subset s : fam) arr.push_back(subset_json(s));
  return arr;
}

ordered_json operator_json(const Operator& op) {
  ordered_json j;
  switch (op.kind()) {
    case Operator::Kind::full:
      j["kind"] = "full";
      break;
    case Operator::Kind::max_order:
      j["kind"] = "max_order";
      break;
    case Operator::Kind::chain:
      j["kind"] = "chain";
      break;
    case Operator::Kind::poset_min: {
      j["kind"] = "poset_min";
      ordered_json covers = ordered_json::array();
      for (auto [a, b] : op.poset()->covers())
        covers.push_back(ordered_json::array({a, b}));
      j["covers"] = std::move(covers);
      break;
    }
    case Operator::Kind::table: {
      j["kind"] = "table";
      ordered_json entries = ordered_json::array();
      for (const auto& [k, v] : *op.table_entries())
        entries.push_back(ordered_json::array({subset_json(k), subset_json(v)}));
      j["entries"] = std::move(entries);
      break;
    }
    case Operator::Kind::basis_of_family:
      j["kind"] = "basis_of_family";
      j["family"] = family_json(*op.family());
      break;
    case Operator::Kind::truncated:
      j["kind"] = "truncated";
      j["cutoff"] = op.cutoff();
      j["inner"] = operator_json(*op.inner());
      break;
  }
  return j;
}

ordered_json linkage_json(const Linkage& pi) {
  ordered_json j;
  switch (pi.kind()) {
    case Linkage::Kind::weight_minus_size:
      j["kind"] = "weight_minus_size";
      j["weights"] = *pi.weights();
      break;
    case Linkage::Kind::single_linkage:
      j["kind"] = "single_linkage";
      j["distances"] = *pi.distances();
      j["empty_value"] = pi.empty_value();
      break;
    case Linkage::Kind::table: {
      j["kind"] = "table";
      ordered_json entries = ordered_json::array();
      for (const auto& [key, v] : *pi.table_entries())
        entries.push_back(
            ordered_json::array({key.first, subset_json(key.second), v}));
      j["entries"] = std::move(entries);
      break;
    }
    case Linkage::Kind::failure: {
      const FailureParams& fp = *pi.failure_params();
      j["kind"] = "failure";
      // letters a1..ak rebuild the chain; the final letter is the witness
      // element, recovered from the target set.
      ordered_json chain = ordered_json::array();
      for (std::size_t i = 0; i + 1 < fp.letters.size(); ++i)
        chain.push_back(fp.letters[i]);
      const Subset a_set = fp.chain_sets.back();
      j["witness"] = {{"A", subset_json(a_set)},
                      {"B", subset_json(fp.b_set)},
                      {"a", fp.letters.back()}};
      j["chain"] = std::move(chain);
      break;
    }
  }
  return j;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("ground")) schema_error("missing \"ground\"");

  GroundSet ground = parse_ground(doc.at("ground"));
  InstanceDocument inst{ground, {}, {}, {}, {}};
  if (doc.contains("operator"))
    inst.op = parse_operator(doc.at("operator"), ground);
  if (doc.contains("family"))
    inst.family = parse_family(doc.at("family"), ground);
  if (doc.contains("language"))
    inst.language = parse_language(doc.at("language"), ground);
  if (doc.contains("linkage"))
    inst.linkage = parse_linkage(doc.at("linkage"), ground, inst.op);
  if (!inst.op && !inst.family && !inst.language)
    schema_error("at least one of operator, family, language is required");
  return inst;
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_operator_instance(const Operator& op) {
  ordered_json j;
  j["ground"] = op.ground().size();
  j["operator"] = operator_json(op);
  return j.dump(2) + "\n";
}

std::string serialize_linkage_instance(const Linkage& pi) {
  ordered_json j;
  j["ground"] = pi.ground().size();
  // Paired with the full operator so the document stands on its own for
  // verification and unrestricted optimization.
  j["operator"] = {{"kind", "full"}};
  j["linkage"] = linkage_json(pi);
  return j.dump(2) + "\n";
}

std::string serialize_failure_instance(const Operator& op,
                                       const IsotoneWitness& witness,
                                       const GenerationTrace& trace) {
  ordered_json j;
  j["ground"] = op.ground().size();
  j["operator"] = operator_json(op);
  ordered_json chain = ordered_json::array();
  for (const auto& [set, letter] : trace.chain_to(witness.a_set))
    chain.push_back(letter);
  j["linkage"] = {{"kind", "failure"},
                  {"witness",
                   {{"A", subset_json(witness.a_set)},
                    {"B", subset_json(witness.b_set)},
                    {"a", witness.element}}},
                  {"chain", std::move(chain)}};
  return j.dump(2) + "\n";
}

}  // namespace am
