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

#include "unleft/tree.h"

#include <sstream>
#include <utility>
#include <vector>

#include "unleft/json_io.h"

namespace unleft {

AbridgementMap InferAbridgementMap(const Grammar& grammar) {
  AbridgementMap map;
  for (const Rule& rule : grammar.rules) {
    const std::string& name = rule.name;
    if (name.size() < 2) continue;
    const std::string stem = name.substr(0, name.size() - 1);
    if (grammar.FindRule(stem) == nullptr) continue;
    if (name.back() == '_') map[name] = {stem, GeneratedRole::kReduced};
    if (name.back() == '~') map[name] = {stem, GeneratedRole::kRepeated};
  }
  return map;
}

namespace {

struct Abridged {
  ParseNode node;
  bool renamed;
};

const GeneratedRule* Lookup(const AbridgementMap& map, const std::string& name) {
  auto it = map.find(name);
  return it == map.end() ? nullptr : &it->second;
}

// Returns the replacement nodes for `node`: itself abridged, or its spliced
// children when it is a repeated-rule node and `splice` is set.
std::vector<Abridged> AbridgeNode(const ParseNode& node,
                                  const AbridgementMap& map, bool splice) {
  const RuleNode* rule = node.AsRule();
  if (rule == nullptr) return {{node, false}};

  std::vector<Abridged> children;
  for (const ParseNode& child : rule->children) {
    for (Abridged& a : AbridgeNode(child, map, /*splice=*/true)) {
      children.push_back(std::move(a));
    }
  }

  const GeneratedRule* generated = Lookup(map, rule->rule_name);
  if (splice && generated != nullptr &&
      generated->role == GeneratedRole::kRepeated) {
    return children;
  }

  Abridged out{ParseNode{RuleNode{rule->rule_name, rule->definition_index, {}}},
               false};
  if (generated != nullptr && generated->role == GeneratedRole::kReduced) {
    out.node.AsRule()->rule_name = generated->original_rule;
    out.renamed = true;
  }
  while (children.size() == 1) {
    const RuleNode* only = children.front().node.AsRule();
    if (only == nullptr || only->rule_name != out.node.AsRule()->rule_name ||
        !(out.renamed || children.front().renamed)) {
      break;
    }
    Abridged inner = std::move(children.front());
    inner.renamed = true;
    children.clear();
    for (ParseNode& grandchild : inner.node.AsRule()->children) {
      children.push_back({std::move(grandchild), false});
    }
    out.node.AsRule()->definition_index = inner.node.AsRule()->definition_index;
    out.renamed = true;
  }
  for (Abridged& child : children) {
    out.node.AsRule()->children.push_back(std::move(child.node));
  }
  return {std::move(out)};
}

void WriteAscii(const ParseNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (const auto* rule = node.AsRule()) {
    out << rule->rule_name << '\n';
    for (const ParseNode& child : rule->children) {
      WriteAscii(child, depth + 1, out);
    }
  } else if (const auto* terminal = node.AsTerminal()) {
    out << '"' << terminal->token.value << "\"\n";
  } else {
    out << "\xCE\xB5\n";
  }
}

std::string DotEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::size_t WriteDot(const ParseNode& node, std::size_t& next_id,
                     std::ostringstream& out) {
  const std::size_t id = next_id++;
  if (const auto* rule = node.AsRule()) {
    out << "  n" << id << " [label=\"" << DotEscape(rule->rule_name)
        << "\"];\n";
    for (const ParseNode& child : rule->children) {
      const std::size_t child_id = WriteDot(child, next_id, out);
      out << "  n" << id << " -> n" << child_id << ";\n";
    }
  } else if (const auto* terminal = node.AsTerminal()) {
    out << "  n" << id << " [label=\"\\\"" << DotEscape(terminal->token.value)
        << "\\\"\" shape=box];\n";
  } else {
    out << "  n" << id << " [label=\"\xCE\xB5\" shape=plaintext];\n";
  }
  return id;
}

}  // namespace

ParseNode Abridge(const ParseNode& tree, const AbridgementMap& map) {
  return std::move(AbridgeNode(tree, map, /*splice=*/false).front().node);
}

std::string RenderAscii(const ParseNode& tree) {
  std::ostringstream out;
  WriteAscii(tree, 0, out);
  return out.str();
}

std::string RenderDot(const ParseNode& tree) {
  std::ostringstream out;
  out << "digraph parse_tree {\n  node [shape=ellipse];\n";
  std::size_t next_id = 0;
  WriteDot(tree, next_id, out);
  out << "}\n";
  return out.str();
}

std::string RenderTreeJson(const ParseNode& tree, int indent) {
  return TreeToJson(tree).dump(indent);
}

ParseNode ParseTreeJson(std::string_view json_text) {
  return TreeFromJson(nlohmann::json::parse(json_text));
}

}  // namespace unleft
