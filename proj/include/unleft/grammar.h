// Copyright 2026 The Unleft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNLEFT_GRAMMAR_H_
#define UNLEFT_GRAMMAR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace unleft {

enum class Quantifier { kOne, kOptional, kZeroOrMore };

// A reference to another rule, e.g. `expression`, `L!`, `L~*`.
struct RuleReference {
  std::string rule_name;
  bool look_ahead = false;
  Quantifier quantifier = Quantifier::kOne;

  bool operator==(const RuleReference&) const = default;
};

enum class TerminalKind { kLiteral, kPattern, kEpsilon, kWildcard };

// A part that matches a single token directly. `text` holds the literal
// value or the regular expression; it is empty for epsilon and wildcard.
struct Terminal {
  TerminalKind kind = TerminalKind::kLiteral;
  std::string text;
  Quantifier quantifier = Quantifier::kOne;

  bool operator==(const Terminal&) const = default;
};

enum class GroupKind { kSequence, kChoice };

struct Part;

// A parenthesized group of parts. A choice holds its alternatives as
// children; an alternative of more than one part is a nested sequence.
struct Group {
  GroupKind kind = GroupKind::kSequence;
  std::vector<Part> children;
  Quantifier quantifier = Quantifier::kOne;

  bool operator==(const Group&) const;
};

struct Part {
  std::variant<RuleReference, Terminal, Group> value;

  bool operator==(const Part&) const = default;

  const RuleReference* AsReference() const {
    return std::get_if<RuleReference>(&value);
  }
  const Terminal* AsTerminal() const { return std::get_if<Terminal>(&value); }
  const Group* AsGroup() const { return std::get_if<Group>(&value); }

  Quantifier quantifier() const;
};

inline bool Group::operator==(const Group& other) const {
  return kind == other.kind && quantifier == other.quantifier &&
         children == other.children;
}

struct Definition {
  std::vector<Part> parts;

  bool operator==(const Definition&) const = default;
};

struct Rule {
  std::string name;
  std::vector<Definition> definitions;

  bool operator==(const Rule&) const = default;
};

// An ordered collection of rules. The start rule defaults to the first one.
struct Grammar {
  std::vector<Rule> rules;
  std::string start_rule;

  bool operator==(const Grammar&) const = default;

  const Rule* FindRule(std::string_view name) const;
  Rule* FindRule(std::string_view name);
  std::optional<std::size_t> IndexOf(std::string_view name) const;
  const Rule& StartRule() const;
};

// Identifies one definition of one rule.
struct DefinitionId {
  std::string rule_name;
  std::size_t definition_index = 0;

  auto operator<=>(const DefinitionId&) const = default;
};

// Convenience constructors, mostly for tests and the rewriter.
Part Ref(std::string name, bool look_ahead = false,
         Quantifier quantifier = Quantifier::kOne);
Part Lit(std::string text, Quantifier quantifier = Quantifier::kOne);
Part Pat(std::string regex, Quantifier quantifier = Quantifier::kOne);
Part Epsilon();
Part Wildcard(Quantifier quantifier = Quantifier::kOne);
Part Seq(std::vector<Part> children, Quantifier quantifier = Quantifier::kOne);
Part Choice(std::vector<Part> children,
            Quantifier quantifier = Quantifier::kOne);

// True if the definition contains a group at any depth.
bool ContainsGroup(const Definition& definition);

// Calls `fn` with every rule reference in `parts`, left to right, descending
// into groups.
template <typename Fn>
void ForEachReference(const std::vector<Part>& parts, Fn&& fn) {
  for (const Part& part : parts) {
    if (const auto* ref = part.AsReference()) {
      fn(*ref);
    } else if (const auto* group = part.AsGroup()) {
      ForEachReference(group->children, fn);
    }
  }
}

}  // namespace unleft

#endif  // UNLEFT_GRAMMAR_H_
