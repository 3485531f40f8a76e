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

#include "unleft/json_io.h"

#include <stdexcept>

#include "unleft/grammar_text.h"

namespace unleft {

using nlohmann::json;

json TreeToJson(const ParseNode& node) {
  if (const auto* rule = node.AsRule()) {
    json children = json::array();
    for (const ParseNode& child : rule->children) {
      children.push_back(TreeToJson(child));
    }
    return {{"rule", rule->rule_name},
            {"definition", rule->definition_index},
            {"children", std::move(children)}};
  }
  if (const auto* terminal = node.AsTerminal()) {
    return {{"token", terminal->token.value},
            {"index", terminal->token.index},
            {"offset", terminal->token.char_offset}};
  }
  return {{"epsilon", true}};
}

ParseNode TreeFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tree node must be an object");
  if (j.contains("rule")) {
    RuleNode rule{j.at("rule").get<std::string>(),
                  j.value("definition", std::size_t{0}), {}};
    for (const json& child : j.value("children", json::array())) {
      rule.children.push_back(TreeFromJson(child));
    }
    return ParseNode{std::move(rule)};
  }
  if (j.contains("token")) {
    return ParseNode{TerminalNode{Token{j.at("token").get<std::string>(),
                                        j.value("index", std::size_t{0}),
                                        j.value("offset", std::size_t{0})}}};
  }
  if (j.value("epsilon", false)) return ParseNode{EpsilonNode{}};
  throw std::invalid_argument("unrecognized tree node");
}

namespace {

json IdToJson(const DefinitionId& id) {
  return {{"rule", id.rule_name}, {"definition", id.definition_index}};
}

}  // namespace

json ReportToJson(const AnalysisReport& report, const Grammar& grammar) {
  json definitions = json::array();
  for (const Rule& rule : grammar.rules) {
    for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
      const DefinitionId id{rule.name, i};
      json entry = IdToJson(id);
      entry["text"] = RenderDefinition(rule.definitions[i]);
      entry["reachable"] = report.reachable.contains(id);
      auto it = report.kind_of.find(id);
      entry["kind"] = it == report.kind_of.end()
                          ? json(nullptr)
                          : json(std::string(RecursionKindName(it->second)));
      definitions.push_back(std::move(entry));
    }
  }
  json cycles = json::array();
  for (const LeftRecursiveCycle& cycle : report.cycles) {
    json members = json::array();
    for (const DefinitionId& id : cycle.members) members.push_back(IdToJson(id));
    cycles.push_back(std::move(members));
  }
  return {{"definitions", std::move(definitions)},
          {"cycles", std::move(cycles)},
          {"leftRecursive", HasLeftRecursion(report)}};
}

json ProvenanceToJson(const Provenance& provenance) {
  json out = json::object();
  for (const auto& [name, origin] : provenance) {
    out[name] = {{"rule", origin.original_rule},
                 {"role", origin.role == GeneratedRole::kReduced ? "reduced"
                                                                 : "repeated"}};
  }
  return out;
}

Provenance ProvenanceFromJson(const json& j) {
  Provenance provenance;
  for (const auto& [name, origin] : j.items()) {
    const std::string role = origin.at("role").get<std::string>();
    if (role != "reduced" && role != "repeated") {
      throw std::invalid_argument("unknown provenance role '" + role + "'");
    }
    provenance[name] = {origin.at("rule").get<std::string>(),
                        role == "reduced" ? GeneratedRole::kReduced
                                          : GeneratedRole::kRepeated};
  }
  return provenance;
}

json RewriteErrorToJson(const RewriteError& error) {
  json out = {{"error", std::string(RewriteErrorKindName(error.kind))},
              {"message", error.Message()},
              {"rule", error.rule_name}};
  if (error.definition_index) out["definition"] = *error.definition_index;
  return out;
}

json ParseResultToJson(const ParseResult& result) {
  if (const auto* success = std::get_if<ParseSuccess>(&result)) {
    return {{"status", "success"}, {"tree", TreeToJson(success->tree)}};
  }
  if (const auto* failure = std::get_if<ParseFailure>(&result)) {
    return {{"status", "failure"},
            {"furthestTokenIndex", failure->furthest_token_index},
            {"expected", failure->expected}};
  }
  return {{"status", "depthExceeded"},
          {"rule", std::get<DepthExceeded>(result).rule_name}};
}

}  // namespace unleft
