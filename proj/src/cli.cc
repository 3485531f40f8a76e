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

#include "unleft/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "unleft/analysis.h"
#include "unleft/engine.h"
#include "unleft/grammar_text.h"
#include "unleft/json_io.h"
#include "unleft/lexer.h"
#include "unleft/rewrite.h"
#include "unleft/service.h"
#include "unleft/tree.h"
#include "unleft/validate.h"

namespace unleft {
namespace {

struct CliConfig {
  std::string grammar_path;
  std::string start_rule;
  std::string lexicon_path;
  std::string output_format = "ascii";
  bool abridged = false;
  bool rewrite_first = false;
  std::size_t max_depth = ParseOptions{}.max_depth;
  bool json = false;
  bool provenance = false;
  std::string input;
  std::string input_file;
  bool has_input = false;
  std::string host = "127.0.0.1";
  int port = 0;
};

// Reported on stderr with exit code 2.
struct InputError {
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream contents;
  contents << file.rdbuf();
  return contents.str();
}

Grammar LoadGrammar(const CliConfig& config) {
  Grammar grammar;
  try {
    grammar = ParseGrammarText(ReadFile(config.grammar_path));
  } catch (const GrammarSyntaxError& e) {
    throw InputError{config.grammar_path + ":" + e.what()};
  }
  if (!config.start_rule.empty()) grammar.start_rule = config.start_rule;
  const auto findings = Validate(grammar);
  if (!findings.empty()) {
    std::string message = config.grammar_path + ": invalid grammar";
    for (const auto& finding : findings) {
      message += "\n  " + FormatFinding(finding);
    }
    throw InputError{message};
  }
  return grammar;
}

std::string Describe(const DefinitionId& id, const Grammar& grammar) {
  const Rule& rule = *grammar.FindRule(id.rule_name);
  return id.rule_name + "#" + std::to_string(id.definition_index + 1) + " (" +
         RenderDefinition(rule.definitions[id.definition_index]) + ")";
}

int Analyze(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Grammar grammar = LoadGrammar(config);
  for (const auto& warning : LintGrammar(grammar)) {
    err << "warning: " << FormatFinding(warning) << '\n';
  }
  const AnalysisReport report = unleft::Analyze(grammar);
  const bool left_recursive = HasLeftRecursion(report);

  if (config.json) {
    out << ReportToJson(report, grammar).dump(2) << '\n';
  } else {
    for (const Rule& rule : grammar.rules) {
      for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
        const DefinitionId id{rule.name, i};
        out << Describe(id, grammar) << ": ";
        if (report.reachable.contains(id)) {
          out << RecursionKindName(report.KindOf(id)) << '\n';
        } else {
          out << "unreachable\n";
        }
      }
    }
    for (const LeftRecursiveCycle& cycle : report.cycles) {
      out << "cycle:";
      for (std::size_t i = 0; i < cycle.members.size(); ++i) {
        out << (i == 0 ? " " : " -> ") << Describe(cycle.members[i], grammar);
      }
      out << '\n';
    }
    out << (left_recursive ? "left recursion found" : "no left recursion")
        << '\n';
  }
  return left_recursive ? kExitLeftRecursionOrParseFailure : kExitOk;
}

int Rewrite(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Grammar grammar = LoadGrammar(config);
  const RewriteResult result = EliminateLeftRecursion(grammar);
  if (const auto* error = std::get_if<RewriteError>(&result)) {
    err << "error: " << error->Message() << " ["
        << RewriteErrorKindName(error->kind) << "]\n";
    return kExitRewriteError;
  }
  const auto& outcome = std::get<RewriteOutcome>(result);
  out << RenderGrammarText(outcome.grammar);
  if (config.provenance) {
    for (const auto& [name, origin] : outcome.provenance) {
      out << "// " << name << ": "
          << (origin.role == GeneratedRole::kReduced ? "reduced" : "repeated")
          << " rule of " << origin.original_rule << '\n';
    }
  }
  return kExitOk;
}

int ParseInput(const CliConfig& config, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Grammar grammar = LoadGrammar(config);
  AbridgementMap map;
  if (config.rewrite_first) {
    RewriteResult result = EliminateLeftRecursion(grammar);
    if (const auto* error = std::get_if<RewriteError>(&result)) {
      err << "error: " << error->Message() << '\n';
      return kExitRewriteError;
    }
    auto& outcome = std::get<RewriteOutcome>(result);
    grammar = std::move(outcome.grammar);
    map = std::move(outcome.provenance);
  } else {
    map = InferAbridgementMap(grammar);
  }

  Lexicon lexicon = DefaultLexicon();
  if (!config.lexicon_path.empty()) {
    try {
      lexicon = Lexicon::FromJson(ReadFile(config.lexicon_path));
    } catch (const std::exception& e) {
      throw InputError{config.lexicon_path + ": " + e.what()};
    }
  }

  std::string text;
  if (config.has_input) {
    text = config.input;
  } else if (!config.input_file.empty()) {
    text = ReadFile(config.input_file);
  } else {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  std::vector<Token> tokens;
  try {
    tokens = Tokenize(text, lexicon);
  } catch (const TokenizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLeftRecursionOrParseFailure;
  }

  const ParseResult result = Parse(grammar, tokens, {config.max_depth});
  if (const auto* depth = std::get_if<DepthExceeded>(&result)) {
    err << "error: maximum depth exceeded in rule '" << depth->rule_name
        << "' (left recursion? try rewriting the grammar first)\n";
    if (config.output_format == "json") {
      out << ParseResultToJson(result).dump(2) << '\n';
    }
    return kExitDepthExceeded;
  }
  if (const auto* failure = std::get_if<ParseFailure>(&result)) {
    err << "error: no parse; furthest token " << failure->furthest_token_index;
    if (failure->furthest_token_index < tokens.size()) {
      err << " ('" << tokens[failure->furthest_token_index].value << "')";
    }
    if (!failure->expected.empty()) {
      err << ", expected one of:";
      for (const std::string& e : failure->expected) err << ' ' << e;
    }
    err << '\n';
    if (config.output_format == "json") {
      out << ParseResultToJson(result).dump(2) << '\n';
    }
    return kExitLeftRecursionOrParseFailure;
  }

  ParseNode tree = std::get<ParseSuccess>(result).tree;
  if (config.abridged) tree = Abridge(tree, map);
  if (config.output_format == "dot") {
    out << RenderDot(tree);
  } else if (config.output_format == "json") {
    out << ParseResultToJson(ParseSuccess{tree}).dump(2) << '\n';
  } else {
    out << RenderAscii(tree);
  }
  return kExitOk;
}

int Serve(const CliConfig& config, std::ostream& out, std::ostream& err) {
  int port = config.port;
  if (port == 0) {
    port = kDefaultPort;
    if (const char* env = std::getenv("UNLEFT_PORT")) {
      try {
        port = std::stoi(env);
      } catch (const std::exception&) {
        port = 0;
      }
      if (port < 1 || port > 65535) {
        throw InputError{"UNLEFT_PORT is not a port number"};
      }
    }
  }
  HttpService service;
  out << "listening on http://" << config.host << ":" << port << std::endl;
  if (!service.Listen(config.host, port)) {
    err << "error: cannot listen on " << config.host << ":" << port << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect and eliminate left recursion in extended-BNF grammars"};
  app.require_subcommand(1);
  CliConfig config;

  auto add_grammar = [&config](CLI::App* cmd) {
    cmd->add_option("grammar", config.grammar_path, "Grammar file")
        ->required();
    cmd->add_option("--start", config.start_rule,
                    "Start rule (default: the first rule)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Report left recursion");
  add_grammar(analyze);
  analyze->add_flag("--json", config.json, "Print the report as JSON");

  CLI::App* rewrite =
      app.add_subcommand("rewrite", "Eliminate left recursion");
  add_grammar(rewrite);
  rewrite->add_flag("--provenance", config.provenance,
                    "Append comments naming each generated rule's origin");

  CLI::App* parse = app.add_subcommand("parse", "Parse input with a grammar");
  add_grammar(parse);
  parse->add_option("--input", config.input, "Input text");
  parse->add_option("--input-file", config.input_file, "Read input from file");
  parse->add_option("--lexicon", config.lexicon_path, "Lexicon JSON file");
  parse->add_option("--format", config.output_format, "Tree output format")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));
  parse->add_flag("--abridged", config.abridged,
                  "Splice repeated and rename reduced rule nodes");
  parse->add_flag("--rewrite", config.rewrite_first,
                  "Eliminate left recursion before parsing");
  parse->add_option("--max-depth", config.max_depth,
                    "Rule invocations allowed at one token position")
      ->check(CLI::PositiveNumber);

  CLI::App* serve = app.add_subcommand("serve", "Run the local JSON service");
  serve->add_option("--port", config.port,
                    "Port (default: $UNLEFT_PORT or 7465)")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--host", config.host, "Address to bind");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  config.has_input = parse->count("--input") > 0;

  try {
    if (analyze->parsed()) return Analyze(config, out, err);
    if (rewrite->parsed()) return Rewrite(config, out, err);
    if (parse->parsed()) return ParseInput(config, in, out, err);
    return Serve(config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitBadInput;
  }
}

}  // namespace unleft
