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

#include "unleft/grammar.h"

#include <stdexcept>
#include <utility>

namespace unleft {

Quantifier Part::quantifier() const {
  return std::visit([](const auto& p) { return p.quantifier; }, value);
}

const Rule* Grammar::FindRule(std::string_view name) const {
  for (const Rule& rule : rules) {
    if (rule.name == name) return &rule;
  }
  return nullptr;
}

Rule* Grammar::FindRule(std::string_view name) {
  for (Rule& rule : rules) {
    if (rule.name == name) return &rule;
  }
  return nullptr;
}

std::optional<std::size_t> Grammar::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].name == name) return i;
  }
  return std::nullopt;
}

const Rule& Grammar::StartRule() const {
  const Rule* rule = FindRule(start_rule);
  if (rule == nullptr) {
    throw std::logic_error("start rule '" + start_rule + "' does not exist");
  }
  return *rule;
}

Part Ref(std::string name, bool look_ahead, Quantifier quantifier) {
  return Part{RuleReference{std::move(name), look_ahead, quantifier}};
}

Part Lit(std::string text, Quantifier quantifier) {
  return Part{Terminal{TerminalKind::kLiteral, std::move(text), quantifier}};
}

Part Pat(std::string regex, Quantifier quantifier) {
  return Part{Terminal{TerminalKind::kPattern, std::move(regex), quantifier}};
}

Part Epsilon() { return Part{Terminal{TerminalKind::kEpsilon, "", {}}}; }

Part Wildcard(Quantifier quantifier) {
  return Part{Terminal{TerminalKind::kWildcard, "", quantifier}};
}

Part Seq(std::vector<Part> children, Quantifier quantifier) {
  return Part{Group{GroupKind::kSequence, std::move(children), quantifier}};
}

Part Choice(std::vector<Part> children, Quantifier quantifier) {
  return Part{Group{GroupKind::kChoice, std::move(children), quantifier}};
}

bool ContainsGroup(const Definition& definition) {
  for (const Part& part : definition.parts) {
    if (part.AsGroup() != nullptr) return true;
  }
  return false;
}

}  // namespace unleft
