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

#ifndef UNLEFT_LEXER_H_
#define UNLEFT_LEXER_H_

#include <cstddef>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unleft {

struct Token {
  std::string value;
  std::size_t index = 0;        // position in the token sequence
  std::size_t char_offset = 0;  // byte offset in the source text

  bool operator==(const Token&) const = default;
};

struct TokenClass {
  std::string name;
  std::string pattern;
  bool skip = false;
};

// Ordered token classes. At each position the longest match wins; ties go to
// the earlier class.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<TokenClass> classes);

  const std::vector<TokenClass>& classes() const { return classes_; }

  // Reads `[{"name": ..., "pattern": ..., "skip": bool}, ...]`.
  static Lexicon FromJson(std::string_view json_text);

 private:
  friend std::vector<Token> Tokenize(std::string_view, const Lexicon&);

  std::vector<TokenClass> classes_;
  std::vector<std::regex> compiled_;
};

class TokenizeError : public std::runtime_error {
 public:
  explicit TokenizeError(std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Numbers, words, single punctuation characters; whitespace is skipped.
Lexicon DefaultLexicon();

// Throws TokenizeError at the first position no class matches.
std::vector<Token> Tokenize(std::string_view text, const Lexicon& lexicon);

// Builds tokens directly from values, offsets counted as if joined by
// single spaces.
std::vector<Token> MakeTokens(const std::vector<std::string>& values);

}  // namespace unleft

#endif  // UNLEFT_LEXER_H_
