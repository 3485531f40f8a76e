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

#include "unleft/lexer.h"

#include <utility>

#include "json.hpp"

namespace unleft {

Lexicon::Lexicon(std::vector<TokenClass> classes)
    : classes_(std::move(classes)) {
  compiled_.reserve(classes_.size());
  for (const TokenClass& token_class : classes_) {
    try {
      compiled_.emplace_back(token_class.pattern);
    } catch (const std::regex_error& e) {
      throw std::invalid_argument("token class '" + token_class.name +
                                  "' has an invalid pattern: " + e.what());
    }
  }
}

Lexicon Lexicon::FromJson(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array()) {
    throw std::invalid_argument("lexicon must be a JSON array");
  }
  std::vector<TokenClass> classes;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("pattern")) {
      throw std::invalid_argument("lexicon entries need a \"pattern\"");
    }
    classes.push_back({entry.value("name", ""),
                       entry.at("pattern").get<std::string>(),
                       entry.value("skip", false)});
  }
  return Lexicon(std::move(classes));
}

TokenizeError::TokenizeError(std::size_t offset)
    : std::runtime_error("unrecognized character at offset " +
                         std::to_string(offset)),
      offset_(offset) {}

Lexicon DefaultLexicon() {
  return Lexicon({
      {"number", R"(\d+)", false},
      {"word", R"([A-Za-z_]\w*)", false},
      {"punctuation", R"([^\w\s])", false},
      {"whitespace", R"(\s+)", true},
  });
}

std::vector<Token> Tokenize(std::string_view text, const Lexicon& lexicon) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_length = 0;
    std::size_t best_class = 0;
    for (std::size_t i = 0; i < lexicon.compiled_.size(); ++i) {
      std::match_results<std::string_view::const_iterator> match;
      if (std::regex_search(text.begin() + pos, text.end(), match,
                            lexicon.compiled_[i],
                            std::regex_constants::match_continuous) &&
          static_cast<std::size_t>(match.length(0)) > best_length) {
        best_length = static_cast<std::size_t>(match.length(0));
        best_class = i;
      }
    }
    if (best_length == 0) throw TokenizeError(pos);
    if (!lexicon.classes_[best_class].skip) {
      tokens.push_back(
          {std::string(text.substr(pos, best_length)), tokens.size(), pos});
    }
    pos += best_length;
  }
  return tokens;
}

std::vector<Token> MakeTokens(const std::vector<std::string>& values) {
  std::vector<Token> tokens;
  std::size_t offset = 0;
  for (const std::string& value : values) {
    tokens.push_back({value, tokens.size(), offset});
    offset += value.size() + 1;
  }
  return tokens;
}

}  // namespace unleft
