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

#include <algorithm>

#include "gtest/gtest.h"
#include "unleft/grammar_text.h"

namespace unleft {
namespace {

std::vector<FindingKind> Kinds(const std::vector<ValidationFinding>& findings) {
  std::vector<FindingKind> kinds;
  for (const auto& finding : findings) kinds.push_back(finding.kind);
  return kinds;
}

bool Has(const std::vector<ValidationFinding>& findings, FindingKind kind) {
  return std::any_of(findings.begin(), findings.end(),
                     [kind](const auto& f) { return f.kind == kind; });
}

TEST(ValidateTest, AcceptsWellFormedGrammar) {
  const Grammar grammar = ParseGrammarText(R"bnf(
    expression ::= expression operator expression | "(" expression ")" | term ;
    operator   ::= "+" | "-" ;
    term       ::= /\d+/ ;
  )bnf");
  EXPECT_TRUE(Validate(grammar).empty());
}

TEST(ValidateTest, ReportsUnresolvedReference) {
  const auto findings = Validate(ParseGrammarText("A ::= \"a\" | B ;"));
  ASSERT_EQ(Kinds(findings),
            std::vector<FindingKind>{FindingKind::kUnresolvedReference});
  EXPECT_EQ(findings[0].rule_name, "A");
  EXPECT_EQ(findings[0].definition_index, 1u);
  EXPECT_EQ(FormatFinding(findings[0]).rfind("A (definition 2): ", 0), 0u);
}

TEST(ValidateTest, ReportsUnresolvedReferenceInsideGroup) {
  EXPECT_TRUE(Has(Validate(ParseGrammarText("A ::= ( \"a\" | B ) ;")),
                  FindingKind::kUnresolvedReference));
}

TEST(ValidateTest, ReportsEmptyDefinitionAndRule) {
  EXPECT_TRUE(Has(Validate(ParseGrammarText("A ::= \"a\" | ;")),
                  FindingKind::kEmptyDefinition));
  Grammar empty_rule;
  empty_rule.rules.push_back({"A", {}});
  empty_rule.start_rule = "A";
  EXPECT_TRUE(Has(Validate(empty_rule), FindingKind::kEmptyRule));
}

TEST(ValidateTest, ReportsStructuralProblemsInBuiltGrammars) {
  Grammar grammar;
  grammar.rules.push_back(
      {"A",
       {Definition{{Seq({})}}, Definition{{Choice({Lit("a")})}},
        Definition{{Part{Terminal{TerminalKind::kEpsilon, "",
                                  Quantifier::kZeroOrMore}}}},
        Definition{{Pat("(")}}}});
  grammar.rules.push_back({"A", {Definition{{Lit("a")}}}});
  grammar.start_rule = "S";
  const auto findings = Validate(grammar);
  EXPECT_TRUE(Has(findings, FindingKind::kEmptyGroup));
  EXPECT_TRUE(Has(findings, FindingKind::kSingleAlternativeChoice));
  EXPECT_TRUE(Has(findings, FindingKind::kQuantifiedEpsilon));
  EXPECT_TRUE(Has(findings, FindingKind::kInvalidPattern));
  EXPECT_TRUE(Has(findings, FindingKind::kDuplicateRuleName));
  EXPECT_TRUE(Has(findings, FindingKind::kMissingStartRule));
}

TEST(ValidateTest, LookAheadWithQuantifierIsOnlyAWarning) {
  const Grammar grammar = ParseGrammarText("A ::= B!* \"a\" ; B ::= \"b\" ;");
  EXPECT_TRUE(Validate(grammar).empty());
  EXPECT_EQ(Kinds(LintGrammar(grammar)),
            std::vector<FindingKind>{FindingKind::kLookAheadWithQuantifier});
}

}  // namespace
}  // namespace unleft
