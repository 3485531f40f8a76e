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

#include "unleft/rewrite.h"

#include <algorithm>
#include <set>
#include <utility>

namespace unleft {

std::string ReducedRuleName(std::string_view name) {
  return std::string(name) + "_";
}

std::string RepeatedRuleName(std::string_view name) {
  return std::string(name) + "~";
}

std::string_view RewriteErrorKindName(RewriteErrorKind kind) {
  switch (kind) {
    case RewriteErrorKind::kUnaryDirectlyLeftRecursive:
      return "UnaryDirectlyLeftRecursive";
    case RewriteErrorKind::kDirectNoNonLeftRecursiveSiblings:
      return "DirectNoNonLeftRecursiveSiblings";
    case RewriteErrorKind::kUnaryIndirectlyLeftRecursive:
      return "UnaryIndirectlyLeftRecursive";
    case RewriteErrorKind::kImplicitNoNonLeftRecursiveSiblings:
      return "ImplicitNoNonLeftRecursiveSiblings";
    case RewriteErrorKind::kComplexLeftRecursiveDefinition:
      return "ComplexLeftRecursiveDefinition";
  }
  return "?";
}

std::string RewriteError::Message() const {
  std::string where = "rule '" + rule_name + "'";
  if (definition_index) {
    where = "definition " + std::to_string(*definition_index + 1) + " of " +
            where;
  }
  switch (kind) {
    case RewriteErrorKind::kUnaryDirectlyLeftRecursive:
      return "unary directly left recursive definition: " + where;
    case RewriteErrorKind::kDirectNoNonLeftRecursiveSiblings:
      return "directly left recursive definition with no sibling "
             "non-left recursive definitions: " + where;
    case RewriteErrorKind::kUnaryIndirectlyLeftRecursive:
      return "unary indirectly left recursive definition: " + where;
    case RewriteErrorKind::kImplicitNoNonLeftRecursiveSiblings:
      return "implicitly left recursive definition with no sibling "
             "non-left recursive definitions: " + where;
    case RewriteErrorKind::kComplexLeftRecursiveDefinition:
      return "complex left recursive definition cannot be rewritten: " +
             where;
  }
  return where;
}

namespace {

// A definition the rewriter can handle leads with a plain, unquantified
// reference to `target` and contains no groups.
bool IsSimpleLeadingReference(const Definition& definition,
                              std::string_view target) {
  if (definition.parts.empty() || ContainsGroup(definition)) return false;
  const RuleReference* ref = definition.parts.front().AsReference();
  return ref != nullptr && ref->rule_name == target &&
         ref->quantifier == Quantifier::kOne;
}

// `X_ tail X~*`, keeping the leading reference's look-ahead flag.
Definition RewriteLeading(const Definition& definition,
                          const std::string& reduced,
                          const std::string& repeated) {
  Definition out;
  const RuleReference& lead = *definition.parts.front().AsReference();
  out.parts.push_back(Ref(reduced, lead.look_ahead));
  out.parts.insert(out.parts.end(), definition.parts.begin() + 1,
                   definition.parts.end());
  out.parts.push_back(Ref(repeated, false, Quantifier::kZeroOrMore));
  return out;
}

Definition Tail(const Definition& definition) {
  return Definition{
      std::vector<Part>(definition.parts.begin() + 1, definition.parts.end())};
}

// The work to do for one cycle-closing definition: either directly left
// recursive (target == own rule) or the last definition of a cycle.
struct ClosingEvent {
  DefinitionId closing;
  std::string target;  // the rule pointed to, which gets X_ and X~
  std::optional<DefinitionId> entry;  // cycle entry, indirect only
};

class Rewriter {
 public:
  Rewriter(const Grammar& grammar, AnalysisReport report,
           std::vector<ClosingEvent> events)
      : grammar_(grammar), report_(std::move(report)), events_(std::move(events)) {}

  RewriteResult Run() {
    Partition();
    if (auto error = Check()) return *std::move(error);
    return Build();
  }

 private:
  struct TargetPlan {
    std::set<std::size_t> direct;   // directly left recursive definitions
    std::set<std::size_t> entries;  // cycle entries, kept as they are
    std::vector<DefinitionId> indirect;  // in discovery order
    std::string reduced;
    std::string repeated;
  };

  const Definition& Def(const DefinitionId& id) const {
    return grammar_.FindRule(id.rule_name)->definitions[id.definition_index];
  }

  RewriteError Error(RewriteErrorKind kind, std::string rule,
                     std::optional<std::size_t> index) const {
    return RewriteError{kind, std::move(rule), index, report_};
  }

  void Partition() {
    for (const ClosingEvent& event : events_) {
      if (!plans_.contains(event.target)) order_.push_back(event.target);
      TargetPlan& plan = plans_[event.target];
      if (!event.entry) {
        plan.direct.insert(event.closing.definition_index);
      } else {
        plan.indirect.push_back(event.closing);
        indirect_.insert(event.closing);
      }
    }
    // A definition that closes a cycle is rewritten, so it cannot also be
    // kept as an entry of another one.
    for (const ClosingEvent& event : events_) {
      if (event.entry && !indirect_.contains(*event.entry)) {
        plans_[event.target].entries.insert(event.entry->definition_index);
      }
    }
    // Any other definition that leads back to its own rule is left
    // recursive too, even when the traversal recorded no cycle for it.
    // Moving it into the reduced rule would recreate the recursion there.
    for (auto& [target, plan] : plans_) {
      const Rule& rule = *grammar_.FindRule(target);
      for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
        if (plan.direct.contains(i) || plan.entries.contains(i) ||
            indirect_.contains({target, i})) {
          continue;
        }
        if (LeadsBackTo(rule.definitions[i], target)) plan.entries.insert(i);
      }
    }
  }

  // True if `target` is reachable from `definition` along leading references.
  bool LeadsBackTo(const Definition& definition,
                   const std::string& target) const {
    std::set<std::string> seen;
    std::vector<std::string> pending = LeadingReferences(definition);
    while (!pending.empty()) {
      const std::string name = std::move(pending.back());
      pending.pop_back();
      if (name == target) return true;
      if (!seen.insert(name).second) continue;
      const Rule* rule = grammar_.FindRule(name);
      if (rule == nullptr) continue;
      for (const Definition& next : rule->definitions) {
        for (std::string& ref : LeadingReferences(next)) {
          pending.push_back(std::move(ref));
        }
      }
    }
    return false;
  }

  bool HasSiblings(const std::string& target) const {
    const TargetPlan& plan = plans_.at(target);
    const std::size_t count =
        grammar_.FindRule(target)->definitions.size();
    return plan.direct.size() + plan.entries.size() < count;
  }

  std::optional<RewriteError> Check() const {
    for (const ClosingEvent& event : events_) {
      const Definition& closing = Def(event.closing);
      const auto& id = event.closing;
      if (!event.entry) {
        if (!IsSimpleLeadingReference(closing, event.target)) {
          return Error(RewriteErrorKind::kComplexLeftRecursiveDefinition,
                       id.rule_name, id.definition_index);
        }
        if (closing.parts.size() == 1) {
          return Error(RewriteErrorKind::kUnaryDirectlyLeftRecursive,
                       id.rule_name, id.definition_index);
        }
        if (!HasSiblings(event.target)) {
          return Error(RewriteErrorKind::kDirectNoNonLeftRecursiveSiblings,
                       event.target, std::nullopt);
        }
      } else {
        if (!IsSimpleLeadingReference(closing, event.target)) {
          return Error(RewriteErrorKind::kComplexLeftRecursiveDefinition,
                       id.rule_name, id.definition_index);
        }
        if (ContainsGroup(Def(*event.entry))) {
          return Error(RewriteErrorKind::kComplexLeftRecursiveDefinition,
                       event.entry->rule_name, event.entry->definition_index);
        }
        if (closing.parts.size() == 1) {
          return Error(RewriteErrorKind::kUnaryIndirectlyLeftRecursive,
                       id.rule_name, id.definition_index);
        }
        if (!HasSiblings(event.target)) {
          return Error(RewriteErrorKind::kImplicitNoNonLeftRecursiveSiblings,
                       event.target, std::nullopt);
        }
      }
    }
    return std::nullopt;
  }

  std::string FreshName(std::string name, char suffix) {
    while (grammar_.FindRule(name) != nullptr || taken_.contains(name)) {
      name += suffix;
    }
    taken_.insert(name);
    return name;
  }

  RewriteOutcome Build() {
    RewriteOutcome outcome;
    for (const std::string& target : order_) {
      TargetPlan& plan = plans_[target];
      plan.reduced = FreshName(ReducedRuleName(target), '_');
      plan.repeated = FreshName(RepeatedRuleName(target), '~');
      outcome.provenance[plan.reduced] = {target, GeneratedRole::kReduced};
      outcome.provenance[plan.repeated] = {target, GeneratedRole::kRepeated};
    }

    // Indirectly left recursive definitions are rewritten in place first.
    std::map<DefinitionId, Definition> replaced;
    for (const ClosingEvent& event : events_) {
      if (!event.entry) continue;
      const TargetPlan& plan = plans_.at(event.target);
      replaced[event.closing] =
          RewriteLeading(Def(event.closing), plan.reduced, plan.repeated);
    }

    std::map<std::string, Rule> generated;
    for (const Rule& rule : grammar_.rules) {
      Rule out{rule.name, {}};
      auto plan_it = plans_.find(rule.name);
      if (plan_it == plans_.end()) {
        for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
          auto it = replaced.find({rule.name, i});
          out.definitions.push_back(it != replaced.end() ? it->second
                                                         : rule.definitions[i]);
        }
        outcome.grammar.rules.push_back(std::move(out));
        continue;
      }

      const TargetPlan& plan = plan_it->second;
      Rule reduced{plan.reduced, {}};
      Rule repeated{plan.repeated, {}};
      for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
        const Definition& definition = rule.definitions[i];
        if (plan.direct.contains(i)) {
          out.definitions.push_back(
              RewriteLeading(definition, plan.reduced, plan.repeated));
          repeated.definitions.push_back(Tail(definition));
        } else if (plan.entries.contains(i)) {
          out.definitions.push_back(definition);
        } else {
          auto it = replaced.find({rule.name, i});
          reduced.definitions.push_back(it != replaced.end() ? it->second
                                                             : definition);
        }
      }
      for (const DefinitionId& id : plan.indirect) {
        repeated.definitions.push_back(Tail(Def(id)));
      }
      out.definitions.push_back(Definition{{Ref(plan.reduced)}});
      outcome.grammar.rules.push_back(std::move(out));
      generated[plan.reduced] = std::move(reduced);
      generated[plan.repeated] = std::move(repeated);
    }

    for (const std::string& target : order_) {
      const TargetPlan& plan = plans_.at(target);
      outcome.grammar.rules.push_back(std::move(generated[plan.reduced]));
      outcome.grammar.rules.push_back(std::move(generated[plan.repeated]));
    }
    outcome.grammar.start_rule = grammar_.start_rule;
    return outcome;
  }

  const Grammar& grammar_;
  AnalysisReport report_;
  std::vector<ClosingEvent> events_;
  std::map<std::string, TargetPlan> plans_;
  std::vector<std::string> order_;
  std::set<DefinitionId> indirect_;
  std::set<std::string> taken_;
};

std::vector<ClosingEvent> EventsFor(const AnalysisReport& report) {
  std::map<DefinitionId, const LeftRecursiveCycle*> cycle_of;
  for (const LeftRecursiveCycle& cycle : report.cycles) {
    cycle_of.emplace(cycle.members.back(), &cycle);
  }
  std::vector<ClosingEvent> events;
  for (const DefinitionId& id : report.closing_order) {
    auto it = cycle_of.find(id);
    if (it == cycle_of.end()) {
      events.push_back({id, id.rule_name, std::nullopt});
    } else {
      const DefinitionId& entry = it->second->members.front();
      events.push_back({id, entry.rule_name, entry});
    }
  }
  return events;
}

}  // namespace

std::variant<DirectRewrite, RewriteError> RewriteDirect(const Rule& rule) {
  Grammar single{{rule}, rule.name};
  std::vector<ClosingEvent> events;
  for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
    if (ClassifyDefinition(rule.definitions[i], rule.name) ==
        RecursionKind::kDirectlyLeftRecursive) {
      events.push_back({{rule.name, i}, rule.name, std::nullopt});
    }
  }
  RewriteResult result = Rewriter(single, AnalysisReport{}, events).Run();
  if (auto* error = std::get_if<RewriteError>(&result)) return *error;
  auto& rules = std::get<RewriteOutcome>(result).grammar.rules;
  if (rules.size() != 3) {
    // No directly left recursive definitions: nothing to split out.
    return DirectRewrite{rule, Rule{ReducedRuleName(rule.name), {}},
                         Rule{RepeatedRuleName(rule.name), {}}};
  }
  return DirectRewrite{std::move(rules[0]), std::move(rules[1]),
                       std::move(rules[2])};
}

RewriteResult RewriteIndirect(const LeftRecursiveCycle& cycle,
                              const Grammar& grammar) {
  const DefinitionId& entry = cycle.members.front();
  std::vector<ClosingEvent> events{
      {cycle.members.back(), entry.rule_name, entry}};
  return Rewriter(grammar, AnalysisReport{}, std::move(events)).Run();
}

RewriteResult EliminateLeftRecursion(const Grammar& grammar) {
  AnalysisReport report = Analyze(grammar);
  std::vector<ClosingEvent> events = EventsFor(report);
  return Rewriter(grammar, std::move(report), std::move(events)).Run();
}

}  // namespace unleft
