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

#include "unleft/service.h"

#include <functional>
#include <stdexcept>
#include <utility>

#include "httplib.h"
#include "unleft/analysis.h"
#include "unleft/engine.h"
#include "unleft/grammar_text.h"
#include "unleft/json_io.h"
#include "unleft/lexer.h"
#include "unleft/rewrite.h"
#include "unleft/tree.h"
#include "unleft/validate.h"

namespace unleft {

using nlohmann::json;

namespace {

// Thrown for anything that should become a 400.
struct BadRequest {
  json body;
};

BadRequest Bad(std::string kind, std::string message) {
  return BadRequest{{{"error", std::move(kind)}, {"message", std::move(message)}}};
}

json ParseBody(std::string_view body) {
  json request = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded() || !request.is_object()) {
    throw Bad("MalformedRequest", "request body must be a JSON object");
  }
  return request;
}

std::string RequireString(const json& request, const char* field) {
  if (!request.contains(field) || !request.at(field).is_string()) {
    throw Bad("MalformedRequest",
              std::string("missing string field \"") + field + "\"");
  }
  return request.at(field).get<std::string>();
}

Grammar LoadGrammar(const json& request) {
  Grammar grammar;
  try {
    grammar = ParseGrammarText(RequireString(request, "grammar"));
  } catch (const GrammarSyntaxError& e) {
    BadRequest bad = Bad("GrammarSyntaxError", e.detail());
    bad.body["line"] = e.line();
    bad.body["column"] = e.column();
    throw bad;
  }
  if (request.contains("start")) {
    if (!request.at("start").is_string()) {
      throw Bad("MalformedRequest", "\"start\" must be a string");
    }
    grammar.start_rule = request.at("start").get<std::string>();
  }
  const auto findings = Validate(grammar);
  if (!findings.empty()) {
    BadRequest bad = Bad("InvalidGrammar", FormatFinding(findings.front()));
    json all = json::array();
    for (const auto& finding : findings) all.push_back(FormatFinding(finding));
    bad.body["findings"] = std::move(all);
    throw bad;
  }
  return grammar;
}

ServiceResponse Guarded(std::string_view body,
                        const std::function<ServiceResponse(const json&)>& fn) {
  try {
    return fn(ParseBody(body));
  } catch (const BadRequest& bad) {
    return {400, bad.body};
  } catch (const json::exception& e) {
    return {400, Bad("MalformedRequest", e.what()).body};
  } catch (const std::invalid_argument& e) {
    return {400, Bad("MalformedRequest", e.what()).body};
  }
}

}  // namespace

ServiceResponse HandleAnalyze(std::string_view request_body) {
  return Guarded(request_body, [](const json& request) {
    const Grammar grammar = LoadGrammar(request);
    return ServiceResponse{200, ReportToJson(Analyze(grammar), grammar)};
  });
}

ServiceResponse HandleRewrite(std::string_view request_body) {
  return Guarded(request_body, [](const json& request) {
    const Grammar grammar = LoadGrammar(request);
    const RewriteResult result = EliminateLeftRecursion(grammar);
    if (const auto* error = std::get_if<RewriteError>(&result)) {
      return ServiceResponse{200, RewriteErrorToJson(*error)};
    }
    const auto& outcome = std::get<RewriteOutcome>(result);
    return ServiceResponse{
        200,
        {{"grammar", RenderGrammarText(outcome.grammar)},
         {"provenance", ProvenanceToJson(outcome.provenance)}}};
  });
}

ServiceResponse HandleParse(std::string_view request_body) {
  return Guarded(request_body, [](const json& request) {
    const Grammar grammar = LoadGrammar(request);
    const std::string input = RequireString(request, "input");

    Lexicon lexicon = DefaultLexicon();
    if (request.contains("lexicon") && !request.at("lexicon").is_null()) {
      lexicon = Lexicon::FromJson(request.at("lexicon").dump());
    }
    ParseOptions options;
    if (request.contains("maxDepth")) {
      const json& depth = request.at("maxDepth");
      if (!depth.is_number_unsigned() || depth.get<std::size_t>() == 0) {
        throw Bad("MalformedRequest", "\"maxDepth\" must be a positive integer");
      }
      options.max_depth = depth.get<std::size_t>();
    }

    std::vector<Token> tokens;
    try {
      tokens = Tokenize(input, lexicon);
    } catch (const TokenizeError& e) {
      BadRequest bad = Bad("TokenizeError", e.what());
      bad.body["offset"] = e.offset();
      throw bad;
    }

    ParseResult result = Parse(grammar, tokens, options);
    if (auto* success = std::get_if<ParseSuccess>(&result);
        success != nullptr && request.value("abridged", false)) {
      const AbridgementMap map =
          request.contains("provenance")
              ? ProvenanceFromJson(request.at("provenance"))
              : InferAbridgementMap(grammar);
      success->tree = Abridge(success->tree, map);
    }
    return ServiceResponse{200, ParseResultToJson(result)};
  });
}

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {
  auto route = [this](const char* path,
                      ServiceResponse (*handler)(std::string_view)) {
    impl_->server.Post(path, [handler](const httplib::Request& req,
                                       httplib::Response& res) {
      const ServiceResponse response = handler(req.body);
      res.status = response.status;
      res.set_content(response.body.dump(), "application/json");
      res.set_header("Access-Control-Allow-Origin", "*");
    });
  };
  route("/analyze", &HandleAnalyze);
  route("/rewrite", &HandleRewrite);
  route("/parse", &HandleParse);
  impl_->server.Options(R"(/.*)", [](const httplib::Request&,
                                     httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpService::~HttpService() = default;

bool HttpService::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpService::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpService::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpService::Stop() { impl_->server.stop(); }

void HttpService::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace unleft
