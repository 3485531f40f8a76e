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

#include "unleft/grammar_text.h"

#include <set>
#include <sstream>
#include <utility>

namespace unleft {

GrammarSyntaxError::GrammarSyntaxError(std::size_t line, std::size_t column,
                                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

constexpr std::string_view kEpsilonUtf8 = "\xCE\xB5";
constexpr std::string_view kEpsilonEscape = "\\epsilon";

enum class Sym {
  kName,
  kDefines,
  kBar,
  kSemicolon,
  kOpen,
  kClose,
  kBang,
  kQuestion,
  kStar,
  kLiteral,
  kPattern,
  kEpsilon,
  kWildcard,
  kEnd,
};

std::string_view SymName(Sym sym) {
  switch (sym) {
    case Sym::kName: return "rule name";
    case Sym::kDefines: return "'::='";
    case Sym::kBar: return "'|'";
    case Sym::kSemicolon: return "';'";
    case Sym::kOpen: return "'('";
    case Sym::kClose: return "')'";
    case Sym::kBang: return "'!'";
    case Sym::kQuestion: return "'?'";
    case Sym::kStar: return "'*'";
    case Sym::kLiteral: return "literal";
    case Sym::kPattern: return "pattern";
    case Sym::kEpsilon: return "epsilon";
    case Sym::kWildcard: return "'.'";
    case Sym::kEnd: return "end of input";
  }
  return "?";
}

bool IsNameStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '~';
}

struct Lexeme {
  Sym sym;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  Lexeme Next() {
    SkipBlanks();
    Lexeme lex{Sym::kEnd, "", line_, column_};
    if (pos_ >= text_.size()) return lex;

    const char c = text_[pos_];
    if (IsNameStart(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsNameChar(text_[end])) ++end;
      lex.sym = Sym::kName;
      lex.text = std::string(text_.substr(pos_, end - pos_));
      Advance(end - pos_);
      return lex;
    }
    if (text_.substr(pos_).starts_with("::=")) {
      lex.sym = Sym::kDefines;
      Advance(3);
      return lex;
    }
    if (text_.substr(pos_).starts_with(kEpsilonUtf8)) {
      lex.sym = Sym::kEpsilon;
      Advance(kEpsilonUtf8.size());
      return lex;
    }
    if (text_.substr(pos_).starts_with(kEpsilonEscape) &&
        (pos_ + kEpsilonEscape.size() >= text_.size() ||
         !IsNameChar(text_[pos_ + kEpsilonEscape.size()]))) {
      lex.sym = Sym::kEpsilon;
      Advance(kEpsilonEscape.size());
      return lex;
    }
    switch (c) {
      case '|': lex.sym = Sym::kBar; break;
      case ';': lex.sym = Sym::kSemicolon; break;
      case '(': lex.sym = Sym::kOpen; break;
      case ')': lex.sym = Sym::kClose; break;
      case '!': lex.sym = Sym::kBang; break;
      case '?': lex.sym = Sym::kQuestion; break;
      case '*': lex.sym = Sym::kStar; break;
      case '.': lex.sym = Sym::kWildcard; break;
      case '"':
        lex.sym = Sym::kLiteral;
        lex.text = ScanLiteral();
        return lex;
      case '/':
        lex.sym = Sym::kPattern;
        lex.text = ScanPattern();
        return lex;
      default:
        Fail(line_, column_, "unexpected character '" + std::string(1, c) + "'");
    }
    Advance(1);
    return lex;
  }

  [[noreturn]] static void Fail(std::size_t line, std::size_t column,
                                const std::string& message) {
    throw GrammarSyntaxError(line, column, message);
  }

 private:
  void Advance(std::size_t count) {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i, ++pos_) {
      const auto byte = static_cast<unsigned char>(text_[pos_]);
      if (byte == '\n') {
        ++line_;
        column_ = 1;
      } else if ((byte & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void SkipBlanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance(1);
      } else if (text_.substr(pos_).starts_with("//")) {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else {
        break;
      }
    }
  }

  std::string ScanLiteral() {
    const std::size_t line = line_, column = column_;
    Advance(1);
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        Fail(line, column, "unterminated literal");
      }
      const char c = text_[pos_];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) Fail(line, column, "unterminated literal");
        const char escaped = text_[pos_ + 1];
        switch (escaped) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case '"':
          case '\\': value += escaped; break;
          default:
            Fail(line_, column_,
                 "unknown escape '\\" + std::string(1, escaped) + "'");
        }
        Advance(2);
        continue;
      }
      value += c;
      Advance(1);
    }
    Advance(1);
    if (value.empty()) Fail(line, column, "empty literal");
    return value;
  }

  std::string ScanPattern() {
    const std::size_t line = line_, column = column_;
    Advance(1);
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        Fail(line, column, "unterminated pattern");
      }
      const char c = text_[pos_];
      if (c == '/') break;
      if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '\n') {
        if (text_[pos_ + 1] != '/') value += '\\';
        value += text_[pos_ + 1];
        Advance(2);
        continue;
      }
      value += c;
      Advance(1);
    }
    Advance(1);
    if (value.empty()) Fail(line, column, "empty pattern");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : scanner_(text) { Shift(); }

  Grammar ReadGrammar() {
    Grammar grammar;
    std::set<std::string, std::less<>> names;
    while (current_.sym != Sym::kEnd) {
      const Lexeme name = Expect(Sym::kName);
      if (!names.insert(name.text).second) {
        Scanner::Fail(name.line, name.column,
                      "duplicate rule name '" + name.text + "'");
      }
      Expect(Sym::kDefines);
      Rule rule{name.text, {}};
      for (auto& alternative : ReadAlternatives(true)) {
        rule.definitions.push_back(Definition{std::move(alternative)});
      }
      Expect(Sym::kSemicolon);
      grammar.rules.push_back(std::move(rule));
    }
    if (!grammar.rules.empty()) grammar.start_rule = grammar.rules[0].name;
    return grammar;
  }

 private:
  void Shift() { current_ = scanner_.Next(); }

  Lexeme Expect(Sym sym) {
    if (current_.sym != sym) {
      Unexpected(std::string(SymName(sym)));
    }
    Lexeme lex = std::move(current_);
    Shift();
    return lex;
  }

  [[noreturn]] void Unexpected(const std::string& expected) {
    Scanner::Fail(current_.line, current_.column,
                  "expected " + expected + " but found " +
                      std::string(SymName(current_.sym)));
  }

  // Rule-level definitions may be empty so that validation can report them.
  std::vector<std::vector<Part>> ReadAlternatives(bool allow_empty = false) {
    std::vector<std::vector<Part>> alternatives;
    alternatives.push_back(ReadSequence(allow_empty));
    while (current_.sym == Sym::kBar) {
      Shift();
      alternatives.push_back(ReadSequence(allow_empty));
    }
    return alternatives;
  }

  static bool StartsPart(Sym sym) {
    return sym == Sym::kName || sym == Sym::kLiteral || sym == Sym::kPattern ||
           sym == Sym::kEpsilon || sym == Sym::kWildcard || sym == Sym::kOpen;
  }

  std::vector<Part> ReadSequence(bool allow_empty) {
    if (!allow_empty && !StartsPart(current_.sym)) Unexpected("a part");
    std::vector<Part> parts;
    while (StartsPart(current_.sym)) parts.push_back(ReadPart());
    return parts;
  }

  Part ReadPart() {
    const Lexeme start = current_;
    Part part;
    switch (start.sym) {
      case Sym::kName:
        part = Ref(start.text);
        Shift();
        break;
      case Sym::kLiteral:
        part = Lit(start.text);
        Shift();
        break;
      case Sym::kPattern:
        part = Pat(start.text);
        Shift();
        break;
      case Sym::kEpsilon:
        part = Epsilon();
        Shift();
        break;
      case Sym::kWildcard:
        part = Wildcard();
        Shift();
        break;
      case Sym::kOpen: {
        Shift();
        auto alternatives = ReadAlternatives();
        Expect(Sym::kClose);
        if (alternatives.size() == 1) {
          part = Seq(std::move(alternatives[0]));
        } else {
          std::vector<Part> children;
          for (auto& alternative : alternatives) {
            if (alternative.size() == 1) {
              children.push_back(std::move(alternative[0]));
            } else {
              children.push_back(Seq(std::move(alternative)));
            }
          }
          part = Choice(std::move(children));
        }
        break;
      }
      default:
        Unexpected("a part");
    }

    if (current_.sym == Sym::kBang) {
      auto* ref = std::get_if<RuleReference>(&part.value);
      if (ref == nullptr) {
        Scanner::Fail(current_.line, current_.column,
                      "look-ahead modifier '!' is only allowed on rule "
                      "references");
      }
      ref->look_ahead = true;
      Shift();
    }
    if (current_.sym == Sym::kQuestion || current_.sym == Sym::kStar) {
      const Quantifier quantifier = current_.sym == Sym::kQuestion
                                        ? Quantifier::kOptional
                                        : Quantifier::kZeroOrMore;
      if (start.sym == Sym::kEpsilon) {
        Scanner::Fail(current_.line, current_.column,
                      "epsilon cannot be quantified");
      }
      std::visit([&](auto& p) { p.quantifier = quantifier; }, part.value);
      Shift();
    }
    return part;
  }

  Scanner scanner_;
  Lexeme current_{Sym::kEnd, "", 1, 1};
};

std::string_view QuantifierSuffix(Quantifier quantifier) {
  switch (quantifier) {
    case Quantifier::kOne: return "";
    case Quantifier::kOptional: return "?";
    case Quantifier::kZeroOrMore: return "*";
  }
  return "";
}

std::string EscapeLiteral(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapePattern(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size()) {
      out += text[i];
      out += text[++i];
    } else if (text[i] == '/') {
      out += "\\/";
    } else {
      out += text[i];
    }
  }
  return out;
}

std::string JoinParts(const std::vector<Part>& parts) {
  std::string out;
  for (const Part& part : parts) {
    if (!out.empty()) out += ' ';
    out += RenderPart(part);
  }
  return out;
}

}  // namespace

Grammar ParseGrammarText(std::string_view text) {
  return Reader(text).ReadGrammar();
}

std::string RenderPart(const Part& part) {
  if (const auto* ref = part.AsReference()) {
    return ref->rule_name + (ref->look_ahead ? "!" : "") +
           std::string(QuantifierSuffix(ref->quantifier));
  }
  if (const auto* terminal = part.AsTerminal()) {
    std::string body;
    switch (terminal->kind) {
      case TerminalKind::kLiteral:
        body = "\"" + EscapeLiteral(terminal->text) + "\"";
        break;
      case TerminalKind::kPattern:
        body = "/" + EscapePattern(terminal->text) + "/";
        break;
      case TerminalKind::kEpsilon:
        body = std::string(kEpsilonUtf8);
        break;
      case TerminalKind::kWildcard:
        body = ".";
        break;
    }
    return body + std::string(QuantifierSuffix(terminal->quantifier));
  }
  const Group& group = *part.AsGroup();
  std::string body;
  if (group.kind == GroupKind::kSequence) {
    body = JoinParts(group.children);
  } else {
    for (const Part& child : group.children) {
      if (!body.empty()) body += " | ";
      const Group* nested = child.AsGroup();
      // A bare multi-part alternative reads back as a sequence child.
      if (nested != nullptr && nested->kind == GroupKind::kSequence &&
          nested->quantifier == Quantifier::kOne &&
          nested->children.size() > 1) {
        body += JoinParts(nested->children);
      } else {
        body += RenderPart(child);
      }
    }
  }
  return "( " + body + " )" + std::string(QuantifierSuffix(group.quantifier));
}

std::string RenderDefinition(const Definition& definition) {
  return JoinParts(definition.parts);
}

std::string RenderRule(const Rule& rule) {
  std::string out = rule.name + " ::=";
  for (std::size_t i = 0; i < rule.definitions.size(); ++i) {
    out += i == 0 ? " " : " | ";
    out += RenderDefinition(rule.definitions[i]);
  }
  return out + " ;";
}

std::string RenderGrammarText(const Grammar& grammar) {
  std::ostringstream out;
  for (const Rule& rule : grammar.rules) out << RenderRule(rule) << '\n';
  return out.str();
}

}  // namespace unleft
