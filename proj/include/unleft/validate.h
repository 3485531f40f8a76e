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

#ifndef UNLEFT_VALIDATE_H_
#define UNLEFT_VALIDATE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unleft/grammar.h"

namespace unleft {

enum class FindingKind {
  kUnresolvedReference,
  kDuplicateRuleName,
  kEmptyRule,
  kEmptyDefinition,
  kEmptyGroup,
  kSingleAlternativeChoice,
  kQuantifiedEpsilon,
  kInvalidPattern,
  kMissingStartRule,
  // Warnings, reported by LintGrammar only.
  kLookAheadWithQuantifier,
};

struct ValidationFinding {
  FindingKind kind;
  std::string rule_name;
  std::optional<std::size_t> definition_index;
  std::string message;
};

// Structural errors. Empty iff the grammar can be analyzed, rewritten and
// parsed.
std::vector<ValidationFinding> Validate(const Grammar& grammar);

// Legal but questionable constructs.
std::vector<ValidationFinding> LintGrammar(const Grammar& grammar);

std::string FormatFinding(const ValidationFinding& finding);

}  // namespace unleft

#endif  // UNLEFT_VALIDATE_H_
