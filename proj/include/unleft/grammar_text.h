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

// Reading and writing the textual extended-BNF format:
//
//   expression ::= expression_ operator expression expression~*
//                | "(" expression ")"
//                ;
//
// Literals are double quoted, patterns are written /.../, `ε` (or
// `\epsilon`) is the empty part and `.` matches any token. The postfix
// modifiers are `!` (look-ahead, rule references only), `?` and `*`.
// Parentheses group parts; a `|` inside them makes a choice. `//` starts a
// comment that runs to the end of the line.

#ifndef UNLEFT_GRAMMAR_TEXT_H_
#define UNLEFT_GRAMMAR_TEXT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "unleft/grammar.h"

namespace unleft {

class GrammarSyntaxError : public std::runtime_error {
 public:
  GrammarSyntaxError(std::size_t line, std::size_t column,
                     const std::string& message);

  // 1-based.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// Throws GrammarSyntaxError on malformed input or a duplicate rule name.
Grammar ParseGrammarText(std::string_view text);

// One rule per line, `name ::= def | def ;`. Epsilon is written `ε`.
std::string RenderGrammarText(const Grammar& grammar);
std::string RenderRule(const Rule& rule);
std::string RenderDefinition(const Definition& definition);
std::string RenderPart(const Part& part);

}  // namespace unleft

#endif  // UNLEFT_GRAMMAR_TEXT_H_
