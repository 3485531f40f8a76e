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

// Recursion analysis over the definition graph.
//
// A definition is recursive if it references any rule and left recursive if
// it can reach a rule reference before consuming a token. A left recursive
// cycle is a chain of left recursive definitions, each leading with a
// reference to the rule of the next, the last pointing back to the first.
// The first definition of a cycle that the traversal meets is implicitly
// left recursive, the last one (the one that closes it) is indirectly left
// recursive. A cycle of one is direct left recursion.

#ifndef UNLEFT_ANALYSIS_H_
#define UNLEFT_ANALYSIS_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unleft/grammar.h"

namespace unleft {

enum class RecursionKind {
  kNonRecursive,
  kRecursive,
  kLeftRecursive,
  kDirectlyLeftRecursive,
  kIndirectlyLeftRecursive,
  kImplicitlyLeftRecursive,
};

std::string_view RecursionKindName(RecursionKind kind);

// True for every kind at or above kLeftRecursive.
bool IsLeftRecursive(RecursionKind kind);

struct LeftRecursiveCycle {
  // members.front() is implicitly, members.back() indirectly left recursive.
  std::vector<DefinitionId> members;

  bool operator==(const LeftRecursiveCycle&) const = default;
};

struct AnalysisReport {
  std::map<DefinitionId, RecursionKind> kind_of;  // reachable definitions only
  std::vector<LeftRecursiveCycle> cycles;         // in discovery order
  std::set<DefinitionId> reachable;
  // Directly left recursive definitions in discovery order.
  std::vector<DefinitionId> direct;
  // Directly left recursive definitions and cycle-closing (indirectly left
  // recursive) definitions, interleaved in the order they were found.
  std::vector<DefinitionId> closing_order;

  RecursionKind KindOf(const DefinitionId& id) const;
};

// Rule names referenced before any token can be consumed, in left-to-right
// order. Optional and repeated parts do not stop the scan; every branch of a
// choice is scanned.
std::vector<std::string> LeadingReferences(const Definition& definition);

// The cycle-independent kinds: NonRecursive, Recursive, LeftRecursive or
// DirectlyLeftRecursive.
RecursionKind ClassifyDefinition(const Definition& definition,
                                 std::string_view owning_rule);

// Depth-first traversal from the start rule. Requires Validate() to be empty.
AnalysisReport Analyze(const Grammar& grammar);

bool HasLeftRecursion(const AnalysisReport& report);
bool HasLeftRecursion(const Grammar& grammar);

}  // namespace unleft

#endif  // UNLEFT_ANALYSIS_H_
