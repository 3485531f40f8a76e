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

// A deterministic backtracking top-down parser.
//
// A rule executes the first of its definitions whose parts all execute in
// sequence; a failed definition gives back every token it consumed. Rule
// execution is committed: once a definition has executed, later failures do
// not make the rule try its remaining definitions, except through a
// look-ahead reference `R!`, which tries R's definitions in turn until the
// rest of the enclosing definition executes as well.
//
// `?` tries a part once and carries on either way, `*` repeats it greedily
// and never gives repetitions back, ε consumes nothing and `.` takes any
// token. Literals compare the token value, patterns must match all of it.

#ifndef UNLEFT_ENGINE_H_
#define UNLEFT_ENGINE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unleft/grammar.h"
#include "unleft/lexer.h"
#include "unleft/parse_tree.h"

namespace unleft {

struct ParseOptions {
  // Rule invocations allowed at one token position before giving up. This is
  // what unrewritten left recursion runs into.
  std::size_t max_depth = 1024;
};

struct ParseSuccess {
  ParseNode tree;
};

struct ParseFailure {
  std::size_t furthest_token_index = 0;
  std::vector<std::string> expected;  // parts that failed there
};

struct DepthExceeded {
  std::string rule_name;
};

using ParseResult = std::variant<ParseSuccess, ParseFailure, DepthExceeded>;

// Requires Validate(grammar) to be empty.
ParseResult Parse(const Grammar& grammar, const std::vector<Token>& tokens,
                  const ParseOptions& options = {});

// Tokenize then Parse. Throws TokenizeError for unlexable input.
ParseResult ParseText(const Grammar& grammar, std::string_view text,
                      const Lexicon& lexicon, const ParseOptions& options = {});

inline bool Succeeded(const ParseResult& result) {
  return std::holds_alternative<ParseSuccess>(result);
}

}  // namespace unleft

#endif  // UNLEFT_ENGINE_H_
