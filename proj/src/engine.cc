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

#include "unleft/engine.h"

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <utility>

#include "unleft/grammar_text.h"

namespace unleft {

std::vector<Token> Frontier(const ParseNode& node) {
  std::vector<Token> tokens;
  auto walk = [&](const ParseNode& n, auto& self) -> void {
    if (const auto* terminal = n.AsTerminal()) {
      tokens.push_back(terminal->token);
    } else if (const auto* rule = n.AsRule()) {
      for (const ParseNode& child : rule->children) self(child, self);
    }
  };
  walk(node, walk);
  return tokens;
}

namespace {

// Non-owning callable taking the token position reached so far. Only ever
// bound to lambdas that outlive the call.
class Continuation {
 public:
  template <typename F>
  Continuation(const F& fn)  // NOLINT(google-explicit-constructor)
      : object_(&fn), call_([](const void* object, std::size_t pos) {
          return (*static_cast<const F*>(object))(pos);
        }) {}
  Continuation(const Continuation&) = default;

  bool operator()(std::size_t pos) const { return call_(object_, pos); }

 private:
  const void* object_;
  bool (*call_)(const void*, std::size_t);
};

struct DepthSignal {
  std::string rule_name;
};

struct Executed {
  std::vector<ParseNode> nodes;
  std::size_t end;
};

class Engine {
 public:
  Engine(const Grammar& grammar, const std::vector<Token>& tokens,
         const ParseOptions& options)
      : grammar_(grammar), tokens_(tokens), options_(options) {}

  ParseResult Run() {
    std::optional<Executed> result;
    try {
      result = ExecuteRule(grammar_.StartRule(), 0);
    } catch (const DepthSignal& signal) {
      return DepthExceeded{signal.rule_name};
    }
    if (result && result->end == tokens_.size()) {
      return ParseSuccess{std::move(result->nodes.front())};
    }
    if (result) NoteFailure(result->end, "end of input");
    return ParseFailure{furthest_, {expected_.begin(), expected_.end()}};
  }

 private:
  // A plain rule invocation commits to its first executing definition, so
  // its result depends only on the rule and the position and is memoized.
  std::optional<Executed> ExecuteRule(const Rule& rule, std::size_t pos) {
    const auto key = std::make_pair(&rule, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Executed> result;
    {
      DepthGuard guard(*this, rule.name, pos);
      for (std::size_t d = 0; d < rule.definitions.size() && !result; ++d) {
        result = ExecuteDefinition(rule, d, pos);
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  std::optional<Executed> ExecuteDefinition(const Rule& rule, std::size_t index,
                                            std::size_t pos) {
    std::vector<ParseNode> children;
    std::size_t end = pos;
    auto accept = [&end](std::size_t p) {
      end = p;
      return true;
    };
    if (!ExecuteParts(rule.definitions[index].parts, 0, pos, children,
                      accept)) {
      return std::nullopt;
    }
    std::vector<ParseNode> node;
    node.push_back(ParseNode{RuleNode{rule.name, index, std::move(children)}});
    return Executed{std::move(node), end};
  }

  bool ExecuteParts(const std::vector<Part>& parts, std::size_t i,
                    std::size_t pos, std::vector<ParseNode>& out,
                    Continuation next) {
    if (i == parts.size()) return next(pos);
    auto rest = [&](std::size_t p) {
      return ExecuteParts(parts, i + 1, p, out, next);
    };
    return ExecutePart(parts[i], pos, out, rest);
  }

  bool ExecutePart(const Part& part, std::size_t pos,
                   std::vector<ParseNode>& out, Continuation next) {
    if (const auto* ref = part.AsReference()) {
      const Rule& rule = *grammar_.FindRule(ref->rule_name);
      if (ref->look_ahead) return LookAhead(rule, ref->quantifier, pos, out, next);
      return Quantified(ref->quantifier, pos, out, next,
                        [&](std::size_t p) { return ExecuteRule(rule, p); });
    }
    if (const auto* terminal = part.AsTerminal()) {
      if (terminal->kind == TerminalKind::kEpsilon) {
        out.push_back(ParseNode{EpsilonNode{}});
        if (next(pos)) return true;
        out.pop_back();
        return false;
      }
      return Quantified(terminal->quantifier, pos, out, next,
                        [&](std::size_t p) { return MatchTerminal(*terminal, p); });
    }
    const Group& group = *part.AsGroup();
    return Quantified(group.quantifier, pos, out, next,
                      [&](std::size_t p) { return ExecuteGroup(group, p); });
  }

  // Runs a deterministic single-shot matcher under a quantifier.
  template <typename Matcher>
  bool Quantified(Quantifier quantifier, std::size_t pos,
                  std::vector<ParseNode>& out, Continuation next,
                  Matcher&& match) {
    const std::size_t mark = out.size();
    std::size_t end = pos;
    if (quantifier == Quantifier::kOne) {
      auto executed = match(pos);
      if (!executed) return false;
      end = executed->end;
      Append(out, std::move(*executed));
    } else if (quantifier == Quantifier::kOptional) {
      if (auto executed = match(pos)) {
        end = executed->end;
        Append(out, std::move(*executed));
      }
    } else {
      while (auto executed = match(end)) {
        if (executed->end == end) break;  // no progress, stop repeating
        end = executed->end;
        Append(out, std::move(*executed));
      }
    }
    if (next(end)) return true;
    out.resize(mark);
    return false;
  }

  // `R!`: each executing definition of R is offered to the continuation in
  // turn. With `?` the empty alternative comes last; with `*` every
  // repetition backtracks the same way.
  bool LookAhead(const Rule& rule, Quantifier quantifier, std::size_t pos,
                 std::vector<ParseNode>& out, Continuation next) {
    const std::size_t mark = out.size();
    DepthGuard guard(*this, rule.name, pos);
    for (std::size_t d = 0; d < rule.definitions.size(); ++d) {
      auto executed = ExecuteDefinition(rule, d, pos);
      if (!executed) continue;
      if (quantifier == Quantifier::kZeroOrMore && executed->end == pos) {
        continue;
      }
      const std::size_t end = executed->end;
      Append(out, std::move(*executed));
      const bool done =
          quantifier == Quantifier::kZeroOrMore
              ? LookAhead(rule, quantifier, end, out, next)
              : next(end);
      if (done) return true;
      out.resize(mark);
    }
    if (quantifier != Quantifier::kOne) return next(pos);
    return false;
  }

  std::optional<Executed> ExecuteGroup(const Group& group, std::size_t pos) {
    std::vector<ParseNode> nodes;
    std::size_t end = pos;
    auto accept = [&end](std::size_t p) {
      end = p;
      return true;
    };
    if (group.kind == GroupKind::kSequence) {
      if (!ExecuteParts(group.children, 0, pos, nodes, accept)) {
        return std::nullopt;
      }
      return Executed{std::move(nodes), end};
    }
    for (const Part& child : group.children) {
      if (ExecutePart(child, pos, nodes, accept)) {
        return Executed{std::move(nodes), end};
      }
      nodes.clear();
    }
    return std::nullopt;
  }

  std::optional<Executed> MatchTerminal(const Terminal& terminal,
                                        std::size_t pos) {
    bool matched = false;
    if (pos < tokens_.size()) {
      const std::string& value = tokens_[pos].value;
      switch (terminal.kind) {
        case TerminalKind::kLiteral:
          matched = value == terminal.text;
          break;
        case TerminalKind::kPattern:
          matched = std::regex_match(value, Pattern(terminal.text));
          break;
        case TerminalKind::kWildcard:
          matched = true;
          break;
        case TerminalKind::kEpsilon:
          break;
      }
    }
    if (!matched) {
      Terminal plain = terminal;
      plain.quantifier = Quantifier::kOne;
      NoteFailure(pos, RenderPart(Part{plain}));
      return std::nullopt;
    }
    std::vector<ParseNode> node;
    node.push_back(ParseNode{TerminalNode{tokens_[pos]}});
    return Executed{std::move(node), pos + 1};
  }

  const std::regex& Pattern(const std::string& text) {
    auto it = patterns_.find(text);
    if (it == patterns_.end()) it = patterns_.emplace(text, std::regex(text)).first;
    return it->second;
  }

  void NoteFailure(std::size_t pos, std::string expected) {
    if (pos > furthest_) {
      furthest_ = pos;
      expected_.clear();
    }
    if (pos == furthest_) expected_.insert(std::move(expected));
  }

  static void Append(std::vector<ParseNode>& out, Executed&& executed) {
    for (ParseNode& node : executed.nodes) out.push_back(std::move(node));
  }

  // Counts nested rule invocations that have not consumed a token.
  class DepthGuard {
   public:
    DepthGuard(Engine& engine, const std::string& rule, std::size_t pos)
        : engine_(engine) {
      auto& stack = engine_.invocations_;
      const std::size_t run =
          !stack.empty() && stack.back().first == pos ? stack.back().second + 1
                                                      : 1;
      if (run > engine_.options_.max_depth) throw DepthSignal{rule};
      stack.emplace_back(pos, run);
    }
    ~DepthGuard() { engine_.invocations_.pop_back(); }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Engine& engine_;
  };

  const Grammar& grammar_;
  const std::vector<Token>& tokens_;
  const ParseOptions& options_;
  std::map<std::string, std::regex> patterns_;
  std::map<std::pair<const Rule*, std::size_t>, std::optional<Executed>> memo_;
  std::vector<std::pair<std::size_t, std::size_t>> invocations_;
  std::size_t furthest_ = 0;
  std::set<std::string> expected_;
};

}  // namespace

ParseResult Parse(const Grammar& grammar, const std::vector<Token>& tokens,
                  const ParseOptions& options) {
  return Engine(grammar, tokens, options).Run();
}

ParseResult ParseText(const Grammar& grammar, std::string_view text,
                      const Lexicon& lexicon, const ParseOptions& options) {
  return Parse(grammar, Tokenize(text, lexicon), options);
}

}  // namespace unleft
