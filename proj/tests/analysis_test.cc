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

#include "gtest/gtest.h"
#include "testing/testdata.h"
#include "unleft/grammar_text.h"

namespace unleft {
namespace {

using test_support::LoadGrammar;

Definition Def(std::string_view text) {
  return ParseGrammarText("x ::= " + std::string(text) + " ;")
      .rules[0]
      .definitions[0];
}

TEST(LeadingReferencesTest, StopsAtFirstConsumingPart) {
  EXPECT_EQ(LeadingReferences(Def("A B")), std::vector<std::string>{"A"});
  EXPECT_EQ(LeadingReferences(Def("\"a\" A")), std::vector<std::string>{});
  EXPECT_EQ(LeadingReferences(Def("A? B* C D")),
            (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(LeadingReferences(Def("\"a\"? ε A")),
            std::vector<std::string>{"A"});
  EXPECT_EQ(LeadingReferences(Def(". A")), std::vector<std::string>{});
  EXPECT_EQ(LeadingReferences(Def("/x/* A")), std::vector<std::string>{"A"});
}

TEST(LeadingReferencesTest, ScansEveryBranchOfAChoice) {
  EXPECT_EQ(LeadingReferences(Def("( A | \"a\" B ) C")),
            std::vector<std::string>{"A"});
  EXPECT_EQ(LeadingReferences(Def("( A? | \"a\" ) C")),
            (std::vector<std::string>{"A", "C"}));
  EXPECT_EQ(LeadingReferences(Def("( \"a\" B )* C")),
            std::vector<std::string>{"C"});
}

TEST(ClassifyDefinitionTest, CycleIndependentKinds) {
  EXPECT_EQ(ClassifyDefinition(Def("\"a\" \"b\""), "x"),
            RecursionKind::kNonRecursive);
  EXPECT_EQ(ClassifyDefinition(Def("\"a\" B"), "x"),
            RecursionKind::kRecursive);
  EXPECT_EQ(ClassifyDefinition(Def("B \"a\""), "x"),
            RecursionKind::kLeftRecursive);
  EXPECT_EQ(ClassifyDefinition(Def("x! \"c\""), "x"),
            RecursionKind::kDirectlyLeftRecursive);
  EXPECT_EQ(ClassifyDefinition(Def("B? x"), "x"),
            RecursionKind::kDirectlyLeftRecursive);
}

TEST(AnalyzeTest, DirectLeftRecursion) {
  const Grammar grammar = LoadGrammar("direct_lookahead.bnf");
  const AnalysisReport report = Analyze(grammar);
  EXPECT_EQ(report.KindOf({"L", 0}), RecursionKind::kDirectlyLeftRecursive);
  EXPECT_EQ(report.KindOf({"L", 1}), RecursionKind::kNonRecursive);
  EXPECT_EQ(report.KindOf({"L", 2}), RecursionKind::kDirectlyLeftRecursive);
  EXPECT_EQ(report.KindOf({"L", 3}), RecursionKind::kNonRecursive);
  EXPECT_EQ(report.direct,
            (std::vector<DefinitionId>{{"L", 0}, {"L", 2}}));
  EXPECT_TRUE(report.cycles.empty());
  EXPECT_TRUE(HasLeftRecursion(report));
}

TEST(AnalyzeTest, IndirectLeftRecursionOfDepthOne) {
  const AnalysisReport report =
      Analyze(LoadGrammar("expression_indirect.bnf"));
  ASSERT_EQ(report.cycles.size(), 1u);
  EXPECT_EQ(report.cycles[0].members,
            (std::vector<DefinitionId>{{"expression", 0},
                                       {"compoundExpression", 0}}));
  EXPECT_EQ(report.KindOf({"expression", 0}),
            RecursionKind::kImplicitlyLeftRecursive);
  EXPECT_EQ(report.KindOf({"compoundExpression", 0}),
            RecursionKind::kIndirectlyLeftRecursive);
  EXPECT_EQ(report.KindOf({"expression", 1}), RecursionKind::kRecursive);
  EXPECT_EQ(report.KindOf({"expression", 2}), RecursionKind::kLeftRecursive);
  EXPECT_EQ(report.KindOf({"operator", 0}), RecursionKind::kNonRecursive);
}

TEST(AnalyzeTest, IndirectLeftRecursionOfDepthTwo) {
  const AnalysisReport report = Analyze(LoadGrammar("expression_depth2.bnf"));
  ASSERT_EQ(report.cycles.size(), 1u);
  EXPECT_EQ(report.cycles[0].members,
            (std::vector<DefinitionId>{{"expression", 0},
                                       {"intermediateExpression", 0},
                                       {"compoundExpression", 0}}));
  EXPECT_EQ(report.KindOf({"intermediateExpression", 0}),
            RecursionKind::kLeftRecursive);
}

// The graph example: A/B is not a cycle because A leads with a terminal; C/D
// is, with C's first definition the implicit one.
TEST(AnalyzeTest, RulesWithLeftRecursion) {
  const AnalysisReport report = Analyze(LoadGrammar("left_recursion_graph.bnf"));
  ASSERT_EQ(report.cycles.size(), 1u);
  EXPECT_EQ(report.cycles[0].members,
            (std::vector<DefinitionId>{{"C", 0}, {"D", 0}}));
  EXPECT_EQ(report.KindOf({"S", 0}), RecursionKind::kLeftRecursive);
  EXPECT_EQ(report.KindOf({"A", 0}), RecursionKind::kRecursive);
  EXPECT_EQ(report.KindOf({"B", 0}), RecursionKind::kLeftRecursive);
  EXPECT_EQ(report.KindOf({"B", 1}), RecursionKind::kRecursive);
  EXPECT_EQ(report.KindOf({"C", 0}), RecursionKind::kImplicitlyLeftRecursive);
  EXPECT_EQ(report.KindOf({"D", 0}), RecursionKind::kIndirectlyLeftRecursive);
  EXPECT_EQ(report.reachable.size(), 8u);
}

TEST(AnalyzeTest, UnreachableLeftRecursionIsIgnored) {
  const Grammar grammar =
      ParseGrammarText("S ::= \"a\" ; X ::= X \"b\" | \"c\" ;");
  const AnalysisReport report = Analyze(grammar);
  EXPECT_FALSE(HasLeftRecursion(report));
  EXPECT_FALSE(report.reachable.contains({"X", 0}));
  EXPECT_EQ(report.KindOf({"S", 0}), RecursionKind::kNonRecursive);
}

TEST(AnalyzeTest, NoLeftRecursion) {
  EXPECT_FALSE(HasLeftRecursion(LoadGrammar("abc_with_lookahead.bnf")));
  EXPECT_FALSE(
      HasLeftRecursion(LoadGrammar("expression_indirect.rewritten.bnf")));
}

TEST(AnalyzeTest, UnaryCycles) {
  const AnalysisReport direct = Analyze(LoadGrammar("unary_direct.bnf"));
  EXPECT_EQ(direct.KindOf({"C", 0}), RecursionKind::kDirectlyLeftRecursive);

  const AnalysisReport indirect = Analyze(LoadGrammar("unary_indirect.bnf"));
  ASSERT_EQ(indirect.cycles.size(), 1u);
  EXPECT_EQ(indirect.cycles[0].members,
            (std::vector<DefinitionId>{{"C", 0}, {"D", 0}}));
}

TEST(AnalyzeTest, LeftRecursionThroughOptionalPrefix) {
  const AnalysisReport report =
      Analyze(ParseGrammarText("A ::= \"x\"? A \"y\" | \"z\" ;"));
  EXPECT_EQ(report.KindOf({"A", 0}), RecursionKind::kDirectlyLeftRecursive);
}

TEST(AnalyzeTest, KindNamesAreDistinct) {
  EXPECT_EQ(RecursionKindName(RecursionKind::kImplicitlyLeftRecursive),
            "implicitly left recursive");
  EXPECT_TRUE(IsLeftRecursive(RecursionKind::kLeftRecursive));
  EXPECT_FALSE(IsLeftRecursive(RecursionKind::kRecursive));
}

}  // namespace
}  // namespace unleft
