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

#include "unleft/analysis.h"

#include <algorithm>

namespace unleft {

std::string_view RecursionKindName(RecursionKind kind) {
  switch (kind) {
    case RecursionKind::kNonRecursive: return "non-recursive";
    case RecursionKind::kRecursive: return "recursive";
    case RecursionKind::kLeftRecursive: return "left recursive";
    case RecursionKind::kDirectlyLeftRecursive:
      return "directly left recursive";
    case RecursionKind::kIndirectlyLeftRecursive:
      return "indirectly left recursive";
    case RecursionKind::kImplicitlyLeftRecursive:
      return "implicitly left recursive";
  }
  return "?";
}

bool IsLeftRecursive(RecursionKind kind) {
  return kind != RecursionKind::kNonRecursive &&
         kind != RecursionKind::kRecursive;
}

RecursionKind AnalysisReport::KindOf(const DefinitionId& id) const {
  auto it = kind_of.find(id);
  return it == kind_of.end() ? RecursionKind::kNonRecursive : it->second;
}

namespace {

// Collects the references reachable before a token is consumed. Returns true
// if the scanned parts can all be passed without consuming anything.
bool ScanLeading(const std::vector<Part>& parts,
                 std::vector<const RuleReference*>& out);

bool ScanLeadingPart(const Part& part,
                     std::vector<const RuleReference*>& out) {
  if (const auto* ref = part.AsReference()) {
    out.push_back(ref);
    return ref->quantifier != Quantifier::kOne;
  }
  if (const auto* terminal = part.AsTerminal()) {
    return terminal->kind == TerminalKind::kEpsilon ||
           terminal->quantifier != Quantifier::kOne;
  }
  const Group& group = *part.AsGroup();
  bool passable = false;
  if (group.kind == GroupKind::kSequence) {
    passable = ScanLeading(group.children, out);
  } else {
    for (const Part& child : group.children) {
      passable = ScanLeadingPart(child, out) || passable;
    }
  }
  return passable || group.quantifier != Quantifier::kOne;
}

bool ScanLeading(const std::vector<Part>& parts,
                 std::vector<const RuleReference*>& out) {
  for (const Part& part : parts) {
    if (!ScanLeadingPart(part, out)) return false;
  }
  return true;
}

std::vector<const RuleReference*> LeadingReferencePointers(
    const Definition& definition) {
  std::vector<const RuleReference*> out;
  ScanLeading(definition.parts, out);
  return out;
}

class Traversal {
 public:
  explicit Traversal(const Grammar& grammar) : grammar_(grammar) {}

  AnalysisReport Run() {
    VisitRule(grammar_.start_rule, /*leading=*/false);

    for (const DefinitionId& id : report_.reachable) {
      const Rule& rule = *grammar_.FindRule(id.rule_name);
      report_.kind_of[id] =
          ClassifyDefinition(rule.definitions[id.definition_index], rule.name);
    }
    for (const LeftRecursiveCycle& cycle : report_.cycles) {
      report_.kind_of[cycle.members.back()] =
          RecursionKind::kIndirectlyLeftRecursive;
    }
    for (const LeftRecursiveCycle& cycle : report_.cycles) {
      auto& kind = report_.kind_of[cycle.members.front()];
      if (kind != RecursionKind::kIndirectlyLeftRecursive) {
        kind = RecursionKind::kImplicitlyLeftRecursive;
      }
    }
    return std::move(report_);
  }

 private:
  struct Frame {
    DefinitionId id;
    bool entered_by_leading_reference;
  };

  void VisitRule(const std::string& name, bool leading) {
    for (std::size_t i = stack_.size(); i-- > 0;) {
      if (stack_[i].id.rule_name != name) continue;
      // The rule is already being visited: stop here, recording a cycle if
      // the way back consisted of leading references only.
      if (leading && std::all_of(stack_.begin() + i + 1, stack_.end(),
                                 [](const Frame& f) {
                                   return f.entered_by_leading_reference;
                                 })) {
        RecordCycle(i);
      }
      return;
    }
    if (!leading && explored_.contains(name)) return;

    const Rule* rule = grammar_.FindRule(name);
    for (std::size_t d = 0; d < rule->definitions.size(); ++d) {
      DefinitionId id{rule->name, d};
      if (removed_.contains(id)) continue;
      VisitDefinition(std::move(id), rule->definitions[d], leading);
    }
    explored_.insert(name);
  }

  void VisitDefinition(DefinitionId id, const Definition& definition,
                       bool leading) {
    report_.reachable.insert(id);
    stack_.push_back({id, leading});

    const auto leading_refs = LeadingReferencePointers(definition);
    ForEachReference(definition.parts, [&](const RuleReference& ref) {
      const bool is_leading =
          std::find(leading_refs.begin(), leading_refs.end(), &ref) !=
          leading_refs.end();
      VisitRule(ref.rule_name, is_leading);
    });

    stack_.pop_back();
    // Side branches have been followed; now take the definition out of the
    // graph so that no later path runs into the same cycle.
    if (closing_.contains(id)) removed_.insert(id);
  }

  void RecordCycle(std::size_t first) {
    const DefinitionId& last = stack_.back().id;
    if (closing_.contains(last)) return;
    closing_.insert(last);
    report_.closing_order.push_back(last);
    if (first + 1 == stack_.size()) {
      report_.direct.push_back(last);
      return;
    }
    LeftRecursiveCycle cycle;
    for (std::size_t i = first; i < stack_.size(); ++i) {
      cycle.members.push_back(stack_[i].id);
    }
    report_.cycles.push_back(std::move(cycle));
  }

  const Grammar& grammar_;
  AnalysisReport report_;
  std::vector<Frame> stack_;
  std::set<DefinitionId> removed_;
  std::set<DefinitionId> closing_;
  std::set<std::string, std::less<>> explored_;
};

}  // namespace

std::vector<std::string> LeadingReferences(const Definition& definition) {
  std::vector<std::string> names;
  for (const RuleReference* ref : LeadingReferencePointers(definition)) {
    names.push_back(ref->rule_name);
  }
  return names;
}

RecursionKind ClassifyDefinition(const Definition& definition,
                                 std::string_view owning_rule) {
  const auto leading = LeadingReferences(definition);
  if (!leading.empty()) {
    return std::find(leading.begin(), leading.end(), owning_rule) !=
                   leading.end()
               ? RecursionKind::kDirectlyLeftRecursive
               : RecursionKind::kLeftRecursive;
  }
  bool any = false;
  ForEachReference(definition.parts, [&](const RuleReference&) { any = true; });
  return any ? RecursionKind::kRecursive : RecursionKind::kNonRecursive;
}

AnalysisReport Analyze(const Grammar& grammar) {
  return Traversal(grammar).Run();
}

bool HasLeftRecursion(const AnalysisReport& report) {
  return std::any_of(report.kind_of.begin(), report.kind_of.end(),
                     [](const auto& entry) {
                       return entry.second ==
                                  RecursionKind::kDirectlyLeftRecursive ||
                              entry.second ==
                                  RecursionKind::kIndirectlyLeftRecursive;
                     });
}

bool HasLeftRecursion(const Grammar& grammar) {
  return HasLeftRecursion(Analyze(grammar));
}

}  // namespace unleft
