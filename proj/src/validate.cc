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

#include "unleft/validate.h"

#include <map>
#include <regex>

namespace unleft {
namespace {

class Checker {
 public:
  Checker(const Grammar& grammar, std::vector<ValidationFinding>& findings)
      : grammar_(grammar), findings_(findings) {}

  void CheckParts(const std::vector<Part>& parts) {
    for (const Part& part : parts) CheckPart(part);
  }

  void Add(FindingKind kind, std::string message) {
    findings_.push_back({kind, rule_, definition_, std::move(message)});
  }

  void SetLocation(std::string rule, std::optional<std::size_t> definition) {
    rule_ = std::move(rule);
    definition_ = definition;
  }

 private:
  void CheckPart(const Part& part) {
    if (const auto* ref = part.AsReference()) {
      if (grammar_.FindRule(ref->rule_name) == nullptr) {
        Add(FindingKind::kUnresolvedReference,
            "reference to undefined rule '" + ref->rule_name + "'");
      }
    } else if (const auto* terminal = part.AsTerminal()) {
      if (terminal->kind == TerminalKind::kEpsilon &&
          terminal->quantifier != Quantifier::kOne) {
        Add(FindingKind::kQuantifiedEpsilon, "epsilon cannot be quantified");
      }
      if (terminal->kind == TerminalKind::kPattern) {
        try {
          std::regex re(terminal->text);
        } catch (const std::regex_error& e) {
          Add(FindingKind::kInvalidPattern,
              "invalid pattern /" + terminal->text + "/: " + e.what());
        }
      }
    } else {
      const Group& group = *part.AsGroup();
      if (group.children.empty()) {
        Add(FindingKind::kEmptyGroup, "group has no parts");
      } else if (group.kind == GroupKind::kChoice &&
                 group.children.size() < 2) {
        Add(FindingKind::kSingleAlternativeChoice,
            "choice group needs at least two alternatives");
      }
      CheckParts(group.children);
    }
  }

  const Grammar& grammar_;
  std::vector<ValidationFinding>& findings_;
  std::string rule_;
  std::optional<std::size_t> definition_;
};

void LintParts(const std::vector<Part>& parts, const std::string& rule,
               std::size_t definition,
               std::vector<ValidationFinding>& findings) {
  for (const Part& part : parts) {
    if (const auto* ref = part.AsReference()) {
      if (ref->look_ahead && ref->quantifier != Quantifier::kOne) {
        findings.push_back({FindingKind::kLookAheadWithQuantifier, rule,
                            definition,
                            "look-ahead on quantified reference to '" +
                                ref->rule_name + "'"});
      }
    } else if (const auto* group = part.AsGroup()) {
      LintParts(group->children, rule, definition, findings);
    }
  }
}

}  // namespace

std::vector<ValidationFinding> Validate(const Grammar& grammar) {
  std::vector<ValidationFinding> findings;
  Checker checker(grammar, findings);

  std::map<std::string, int> seen;
  for (const Rule& rule : grammar.rules) {
    checker.SetLocation(rule.name, std::nullopt);
    if (++seen[rule.name] == 2) {
      checker.Add(FindingKind::kDuplicateRuleName,
                  "duplicate rule name '" + rule.name + "'");
    }
    if (rule.definitions.empty()) {
      checker.Add(FindingKind::kEmptyRule, "rule has no definitions");
    }
    for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
      checker.SetLocation(rule.name, i);
      if (rule.definitions[i].parts.empty()) {
        checker.Add(FindingKind::kEmptyDefinition, "definition has no parts");
      }
      checker.CheckParts(rule.definitions[i].parts);
    }
  }
  if (grammar.FindRule(grammar.start_rule) == nullptr) {
    checker.SetLocation(grammar.start_rule, std::nullopt);
    checker.Add(FindingKind::kMissingStartRule,
                grammar.start_rule.empty()
                    ? "grammar has no rules"
                    : "start rule '" + grammar.start_rule + "' is undefined");
  }
  return findings;
}

std::vector<ValidationFinding> LintGrammar(const Grammar& grammar) {
  std::vector<ValidationFinding> findings;
  for (const Rule& rule : grammar.rules) {
    for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
      LintParts(rule.definitions[i].parts, rule.name, i, findings);
    }
  }
  return findings;
}

std::string FormatFinding(const ValidationFinding& finding) {
  std::string where = finding.rule_name;
  if (finding.definition_index) {
    where += " (definition " + std::to_string(*finding.definition_index + 1) +
             ")";
  }
  return where + ": " + finding.message;
}

}  // namespace unleft
