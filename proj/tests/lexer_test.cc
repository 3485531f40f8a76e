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


#include "unleft/lexer.h"

#include <random>

#include "gtest/gtest.h"

namespace unleft {
namespace {

std::vector<std::string> Values(const std::vector<Token>& tokens) {
  std::vector<std::string> values;
  for (const Token& token : tokens) values.push_back(token.value);
  return values;
}

TEST(LexerTest, DefaultLexiconSplitsExpressions) {
  const auto tokens = Tokenize("(12+3) / x_1", DefaultLexicon());
  EXPECT_EQ(Values(tokens), (std::vector<std::string>{"(", "12", "+", "3", ")",
                                                      "/", "x_1"}));
  EXPECT_EQ(tokens[1].index, 1u);
  EXPECT_EQ(tokens[1].char_offset, 1u);
  EXPECT_EQ(tokens[5].char_offset, 7u);
}

TEST(LexerTest, EmptyAndBlankInputGiveNoTokens) {
  EXPECT_TRUE(Tokenize("", DefaultLexicon()).empty());
  EXPECT_TRUE(Tokenize(" \n\t ", DefaultLexicon()).empty());
}

TEST(LexerTest, LongestMatchWinsThenEarlierClass) {
  const Lexicon lexicon({{"keyword", "if", false},
                         {"name", "[a-z]+", false},
                         {"space", " +", true}});
  EXPECT_EQ(Values(Tokenize("if iffy", lexicon)),
            (std::vector<std::string>{"if", "iffy"}));
}

TEST(LexerTest, UnmatchedCharacterThrowsWithOffset) {
  const Lexicon lexicon({{"a", "a+", false}, {"space", " ", true}});
  try {
    Tokenize("aa a b", lexicon);
    FAIL();
  } catch (const TokenizeError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(LexerTest, ZeroLengthMatchesDoNotLoop) {
  const Lexicon lexicon({{"maybe", "a*", false}});
  EXPECT_THROW(Tokenize("b", lexicon), TokenizeError);
}

TEST(LexerTest, ReadsLexiconJson) {
  const Lexicon lexicon = Lexicon::FromJson(
      R"([{"name": "n", "pattern": "\\d+"}, {"pattern": "\\s+", "skip": true}])");
  ASSERT_EQ(lexicon.classes().size(), 2u);
  EXPECT_TRUE(lexicon.classes()[1].skip);
  EXPECT_EQ(Values(Tokenize("1 22", lexicon)),
            (std::vector<std::string>{"1", "22"}));
}

TEST(LexerTest, RejectsBadLexicons) {
  EXPECT_THROW(Lexicon::FromJson("{}"), std::invalid_argument);
  EXPECT_THROW(Lexicon::FromJson(R"([{"name": "x"}])"), std::invalid_argument);
  EXPECT_THROW(Lexicon({{"bad", "(", false}}), std::invalid_argument);
}

TEST(LexerTest, MakeTokensNumbersTokens) {
  const auto tokens = MakeTokens({"ab", "c"});
  EXPECT_EQ(tokens[1].index, 1u);
  EXPECT_EQ(tokens[1].char_offset, 3u);
}

// Token values sit at their offsets and everything between them is skipped
// whitespace; tokenizing twice gives the same result.
TEST(LexerTest, RandomTextReconstructs) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "ab1 2+(\t)\n_";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(0, 30);
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    for (int n = length(rng); n > 0; --n) text += alphabet[pick(rng)];
    const auto tokens = Tokenize(text, DefaultLexicon());
    ASSERT_EQ(tokens, Tokenize(text, DefaultLexicon()));
    std::size_t pos = 0;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const Token& token = tokens[t];
      ASSERT_EQ(token.index, t);
      ASSERT_GE(token.char_offset, pos);
      for (std::size_t k = pos; k < token.char_offset; ++k) {
        ASSERT_TRUE(std::isspace(static_cast<unsigned char>(text[k])));
      }
      ASSERT_EQ(text.substr(token.char_offset, token.value.size()),
                token.value);
      pos = token.char_offset + token.value.size();
    }
    for (std::size_t k = pos; k < text.size(); ++k) {
      ASSERT_TRUE(std::isspace(static_cast<unsigned char>(text[k])));
    }
  }
}

}  // namespace
}  // namespace unleft
