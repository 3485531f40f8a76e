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

// Selective left recursion elimination.
//
// Only directly and indirectly left recursive definitions are rewritten;
// every other definition is left as it is and no rule is dropped. For a rule
// R with left recursive definitions `R t1 | ... | a1 | ...` the rewrite is
//
//   R  ::= R_ t1 R~* | ... | R_ ;
//   R_ ::= a1 | ... ;               the reduced rule
//   R~ ::= t1 | ... ;               the repeated rule
//
// A look-ahead modifier on the leading `R` carries over to `R_`. An
// indirectly left recursive definition `D ::= P t` closing a cycle through
// rule P becomes `D ::= P_ t P~*`, P keeps its cycle entry definitions and
// gains a `P_` definition, and the intermediate rules are untouched. No
// epsilon parts are generated.

#ifndef UNLEFT_REWRITE_H_
#define UNLEFT_REWRITE_H_

#include <map>
#include <optional>
#include <vector>
#include <string>
#include <string_view>
#include <variant>

#include "unleft/analysis.h"
#include "unleft/grammar.h"

namespace unleft {

std::string ReducedRuleName(std::string_view name);
std::string RepeatedRuleName(std::string_view name);

enum class RewriteErrorKind {
  kUnaryDirectlyLeftRecursive,
  kDirectNoNonLeftRecursiveSiblings,
  kUnaryIndirectlyLeftRecursive,
  kImplicitNoNonLeftRecursiveSiblings,
  kComplexLeftRecursiveDefinition,
};

// "UnaryDirectlyLeftRecursive" and so on.
std::string_view RewriteErrorKindName(RewriteErrorKind kind);

struct RewriteError {
  RewriteErrorKind kind;
  std::string rule_name;
  // Set for the variants that pinpoint a definition.
  std::optional<std::size_t> definition_index;
  AnalysisReport report;

  std::string Message() const;
};

enum class GeneratedRole { kReduced, kRepeated };

struct GeneratedRule {
  std::string original_rule;
  GeneratedRole role;

  bool operator==(const GeneratedRule&) const = default;
};

// Generated rule name -> where it came from. Also used to abridge trees.
using Provenance = std::map<std::string, GeneratedRule>;

struct RewriteOutcome {
  Grammar grammar;
  Provenance provenance;
};

using RewriteResult = std::variant<RewriteOutcome, RewriteError>;

// Rewrites the directly left recursive definitions of one rule. Returns the
// rewritten rule followed by the reduced and repeated rules.
struct DirectRewrite {
  Rule rewritten;
  Rule reduced;
  Rule repeated;
};
std::variant<DirectRewrite, RewriteError> RewriteDirect(const Rule& rule);

// Applies the indirect rewrite for one cycle found by Analyze() and returns
// the resulting grammar.
RewriteResult RewriteIndirect(const LeftRecursiveCycle& cycle,
                              const Grammar& grammar);

// Analyzes the grammar and rewrites everything the traversal found. Requires
// Validate() to be empty. Fails on the first special case, with no partial
// output.
RewriteResult EliminateLeftRecursion(const Grammar& grammar);

}  // namespace unleft

#endif  // UNLEFT_REWRITE_H_
