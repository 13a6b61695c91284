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

#ifndef AM_IO_HPP
#define AM_IO_HPP

#include <optional>
#include <string>

#include "am/correspondence.hpp"
#include "am/language.hpp"
#include "am/linkage.hpp"
#include "am/operators.hpp"

namespace am {

/// Malformed instance text; carries the 1-based line and column when the
/// failure is positional.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

/// One instance file: a ground set plus any of an operator, a linkage, an
/// explicit family, and an explicit language. A failure-kind linkage is
/// resolved against the operator in the same document.
struct InstanceDocument {
  GroundSet ground;
  std::optional<Operator> op;
  std::optional<Linkage> linkage;
  std::optional<Family> family;
  std::optional<SimpleLanguage> language;
};

/// Parses the JSON instance format. Throws ParseError for malformed text
/// or schema violations, DomainError for semantically invalid components.
InstanceDocument parse_instance(const std::string& text);

/// Reads and parses a file; file-system failures become ParseError.
InstanceDocument load_instance(const std::string& path);

/// Serializes operators, linkages, and families back to instance JSON
/// (used by the instance generators).
std::string serialize_operator_instance(const Operator& op);
std::string serialize_linkage_instance(const Linkage& pi);
std::string serialize_failure_instance(const Operator& op,
                                       const IsotoneWitness& witness,
                                       const GenerationTrace& trace);

}  // namespace am

#endif  // AM_IO_HPP
