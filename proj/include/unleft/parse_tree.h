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

#ifndef UNLEFT_PARSE_TREE_H_
#define UNLEFT_PARSE_TREE_H_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "unleft/lexer.h"

namespace unleft {

struct ParseNode;

struct RuleNode {
  std::string rule_name;
  std::size_t definition_index = 0;
  std::vector<ParseNode> children;

  bool operator==(const RuleNode&) const;
};

struct TerminalNode {
  Token token;

  bool operator==(const TerminalNode&) const = default;
};

struct EpsilonNode {
  bool operator==(const EpsilonNode&) const = default;
};

struct ParseNode {
  std::variant<RuleNode, TerminalNode, EpsilonNode> value;

  bool operator==(const ParseNode&) const = default;

  const RuleNode* AsRule() const { return std::get_if<RuleNode>(&value); }
  RuleNode* AsRule() { return std::get_if<RuleNode>(&value); }
  const TerminalNode* AsTerminal() const {
    return std::get_if<TerminalNode>(&value);
  }
};

inline bool RuleNode::operator==(const RuleNode& other) const {
  return rule_name == other.rule_name &&
         definition_index == other.definition_index &&
         children == other.children;
}

// Tokens of the terminal nodes, left to right.
std::vector<Token> Frontier(const ParseNode& node);

}  // namespace unleft

#endif  // UNLEFT_PARSE_TREE_H_
