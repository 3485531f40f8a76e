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

#ifndef UNLEFT_TREE_H_
#define UNLEFT_TREE_H_

#include <string>
#include <string_view>

#include "unleft/grammar.h"
#include "unleft/parse_tree.h"
#include "unleft/rewrite.h"

namespace unleft {

using AbridgementMap = Provenance;

// Guesses the map from names alone: `X_` is the reduced and `X~` the
// repeated rule of X whenever X is also a rule of the grammar.
AbridgementMap InferAbridgementMap(const Grammar& grammar);

// Splices repeated-rule nodes into their parents and renames reduced-rule
// nodes after their original rule. A renamed node whose only child has the
// same name collapses into that child. The frontier is unchanged.
ParseNode Abridge(const ParseNode& tree, const AbridgementMap& map);

// Indented outline, one node per line; terminals quoted, epsilon as `ε`.
std::string RenderAscii(const ParseNode& tree);

// Graphviz digraph with one node per parse node.
std::string RenderDot(const ParseNode& tree);

// {"rule", "definition", "children"} / {"token", "index", "offset"} /
// {"epsilon": true}
std::string RenderTreeJson(const ParseNode& tree, int indent = -1);
ParseNode ParseTreeJson(std::string_view json_text);

}  // namespace unleft

#endif  // UNLEFT_TREE_H_
