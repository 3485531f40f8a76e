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

// JSON forms shared by the CLI and the HTTP service.

#ifndef UNLEFT_JSON_IO_H_
#define UNLEFT_JSON_IO_H_

#include "json.hpp"
#include "unleft/analysis.h"
#include "unleft/engine.h"
#include "unleft/grammar.h"
#include "unleft/rewrite.h"

namespace unleft {

nlohmann::json TreeToJson(const ParseNode& node);
ParseNode TreeFromJson(const nlohmann::json& json);

// {"definitions": [{"rule", "definition", "kind", "text"}...],
//  "cycles": [[{"rule", "definition"}...]...], "leftRecursive": bool}
nlohmann::json ReportToJson(const AnalysisReport& report,
                            const Grammar& grammar);

nlohmann::json ProvenanceToJson(const Provenance& provenance);
Provenance ProvenanceFromJson(const nlohmann::json& json);

// {"error": "<variant>", "message", "rule", "definition"?}
nlohmann::json RewriteErrorToJson(const RewriteError& error);

// {"status": "success", "tree"} / {"status": "failure",
// "furthestTokenIndex", "expected"} / {"status": "depthExceeded", "rule"}
nlohmann::json ParseResultToJson(const ParseResult& result);

}  // namespace unleft

#endif  // UNLEFT_JSON_IO_H_
