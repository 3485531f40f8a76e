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


#include "testing/grammar_generator.h"

#include <algorithm>
#include <functional>
#include <set>

namespace unleft::test_support {
namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[Uniform(rng, 0, static_cast<int>(items.size()) - 1)];
}

Quantifier RandomQuantifier(Rng& rng) {
  switch (Uniform(rng, 0, 5)) {
    case 0:
      return Quantifier::kOptional;
    case 1:
      return Quantifier::kZeroOrMore;
    default:
      return Quantifier::kOne;
  }
}

std::string RandomName(Rng& rng) {
  static const std::vector<std::string> kHeads = {"a", "B", "_x", "expr",
                                                  "Term", "r2", "list_"};
  static const std::vector<std::string> kTails = {"", "", "_", "~", "__",
                                                  "_~", "7"};
  return Pick(rng, kHeads) + Pick(rng, kTails);
}

std::string RandomLiteral(Rng& rng) {
  static const std::vector<std::string> kLiterals = {
      "a", "+", "(", ")", "::=", "|", ";", "\"", "\\", "a b", "\n", "\t",
      "//", "é", "ε", "!", "*", "?"};
  return Pick(rng, kLiterals);
}

std::string RandomPattern(Rng& rng) {
  static const std::vector<std::string> kPatterns = {
      "\\d+", "[a-z]+", "a|b", "x/y", "\\w*\\.", "[^\"]+", "\\\\"};
  return Pick(rng, kPatterns);
}

Part RandomSyntaxPart(Rng& rng, const std::vector<std::string>& names,
                      int depth) {
  const int kind = Uniform(rng, 0, depth > 1 ? 5 : 7);
  switch (kind) {
    case 0:
    case 1:
      return Ref(Pick(rng, names), Chance(rng, 0.3), RandomQuantifier(rng));
    case 2:
    case 3:
      return Lit(RandomLiteral(rng), RandomQuantifier(rng));
    case 4:
      return Pat(RandomPattern(rng), RandomQuantifier(rng));
    case 5:
      return Chance(rng, 0.5) ? Epsilon() : Wildcard(RandomQuantifier(rng));
    case 6: {
      std::vector<Part> children;
      const int count = Uniform(rng, 1, 3);
      for (int i = 0; i < count; ++i) {
        children.push_back(RandomSyntaxPart(rng, names, depth + 1));
      }
      return Seq(std::move(children), RandomQuantifier(rng));
    }
    default: {
      std::vector<Part> children;
      const int count = Uniform(rng, 2, 3);
      for (int i = 0; i < count; ++i) {
        children.push_back(RandomSyntaxPart(rng, names, depth + 1));
      }
      return Choice(std::move(children), RandomQuantifier(rng));
    }
  }
}

}  // namespace

Grammar RandomSyntaxGrammar(Rng& rng) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  const int rule_count = Uniform(rng, 1, 5);
  while (static_cast<int>(names.size()) < rule_count) {
    std::string name = RandomName(rng);
    if (seen.insert(name).second) names.push_back(std::move(name));
  }
  Grammar grammar;
  for (const std::string& name : names) {
    Rule rule{name, {}};
    const int definitions = Uniform(rng, 1, 4);
    for (int d = 0; d < definitions; ++d) {
      Definition definition;
      const int parts = Uniform(rng, 1, 4);
      for (int p = 0; p < parts; ++p) {
        definition.parts.push_back(RandomSyntaxPart(rng, names, 0));
      }
      rule.definitions.push_back(std::move(definition));
    }
    grammar.rules.push_back(std::move(rule));
  }
  grammar.start_rule = names.front();
  return grammar;
}

Grammar RandomLeftRecursiveGrammar(Rng& rng,
                                   const LeftRecursiveOptions& options) {
  const int rule_count = Uniform(rng, 1, options.max_rules);
  std::vector<std::string> names;
  for (int i = 0; i < rule_count; ++i) {
    names.push_back(std::string(1, static_cast<char>('A' + i)));
  }

  auto literal = [&](Quantifier quantifier) {
    return Lit(Pick(rng, options.alphabet), quantifier);
  };

  Grammar grammar;
  for (const std::string& name : names) {
    Rule rule{name, {}};
    const int definitions = Uniform(rng, 1, options.max_definitions);
    for (int d = 0; d < definitions; ++d) {
      Definition definition;
      if (options.epsilon && Chance(rng, 0.1)) {
        definition.parts.push_back(Epsilon());
        rule.definitions.push_back(std::move(definition));
        continue;
      }
      // A plain reference or literal keeps the definition non-nullable.
      bool anchored = false;
      if (Chance(rng, options.leading_reference)) {
        definition.parts.push_back(
            Ref(Pick(rng, names), Chance(rng, options.look_ahead)));
        anchored = true;
      }
      const int tail = Uniform(rng, anchored ? 0 : 1, options.max_tail_parts);
      for (int p = 0; p < tail; ++p) {
        const Quantifier quantifier = RandomQuantifier(rng);
        if (Chance(rng, options.group)) {
          definition.parts.push_back(
              Choice({literal(Quantifier::kOne), Ref(Pick(rng, names))},
                     quantifier));
        } else if (Chance(rng, 0.3)) {
          definition.parts.push_back(Ref(Pick(rng, names), false, quantifier));
        } else {
          definition.parts.push_back(literal(quantifier));
        }
        anchored = anchored || quantifier == Quantifier::kOne;
      }
      if (!anchored) definition.parts.push_back(literal(Quantifier::kOne));
      rule.definitions.push_back(std::move(definition));
    }
    grammar.rules.push_back(std::move(rule));
  }
  grammar.start_rule = names.front();
  return grammar;
}

std::optional<std::vector<std::string>> RandomSentence(const Grammar& grammar,
                                                       Rng& rng,
                                                       int max_expansions) {
  std::vector<std::string> out;
  int budget = max_expansions;

  std::function<bool(const Part&)> emit_part;
  auto emit_sequence = [&](const std::vector<Part>& parts) {
    for (const Part& part : parts) {
      if (!emit_part(part)) return false;
    }
    return true;
  };
  std::function<bool(const Part&)> emit_once = [&](const Part& part) {
    if (const auto* ref = part.AsReference()) {
      if (--budget < 0) return false;
      const Rule* rule = grammar.FindRule(ref->rule_name);
      if (rule == nullptr || rule->definitions.empty()) return false;
      return emit_sequence(Pick(rng, rule->definitions).parts);
    }
    if (const auto* terminal = part.AsTerminal()) {
      switch (terminal->kind) {
        case TerminalKind::kLiteral:
          out.push_back(terminal->text);
          return true;
        case TerminalKind::kWildcard:
          out.push_back("a");
          return true;
        case TerminalKind::kEpsilon:
          return true;
        case TerminalKind::kPattern:
          return false;
      }
    }
    const Group& group = *part.AsGroup();
    if (group.kind == GroupKind::kSequence) return emit_sequence(group.children);
    return emit_part(Pick(rng, group.children));
  };
  emit_part = [&](const Part& part) {
    switch (part.quantifier()) {
      case Quantifier::kOne:
        return emit_once(part);
      case Quantifier::kOptional:
        return Chance(rng, 0.5) ? emit_once(part) : true;
      case Quantifier::kZeroOrMore: {
        const int times = Uniform(rng, 0, 2);
        for (int i = 0; i < times; ++i) {
          if (!emit_once(part)) return false;
        }
        return true;
      }
    }
    return false;
  };

  if (!emit_part(Ref(grammar.start_rule))) return std::nullopt;
  return out;
}

Grammar InterleaveDefinitions(const Grammar& grammar, Rng& rng,
                              const std::vector<DefinitionId>& pinned) {
  const std::set<DefinitionId> pinned_set(pinned.begin(), pinned.end());
  Grammar result = grammar;
  for (Rule& rule : result.rules) {
    std::vector<Definition> first;
    std::vector<Definition> second;
    for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
      (pinned_set.contains({rule.name, i}) ? first : second)
          .push_back(rule.definitions[i]);
    }
    // Choose which slots the pinned definitions occupy, then fill in order.
    std::vector<bool> slots(rule.definitions.size(), false);
    std::fill(slots.begin(), slots.begin() + first.size(), true);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      rule.definitions[i] = slots[i] ? first[a++] : second[b++];
    }
  }
  return result;
}

}  // namespace unleft::test_support
