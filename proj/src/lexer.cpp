/* Copyright 2026 The setcat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "setcat/lexer.hpp"

#include <cctype>
#include <map>

namespace setcat {

std::vector<Token> tokenize(const std::string& input) {
  static const std::map<std::string, Tok> keywords = {
      {"in", Tok::KwIn},       {"set", Tok::KwSet},   {"atom", Tok::KwAtom},
      {"all", Tok::KwAll},     {"ex", Tok::KwEx},     {"union", Tok::KwUnion},
      {"sep", Tok::KwSep},     {"funcs", Tok::KwFuncs}, {"succ", Tok::KwSucc},
      {"omega", Tok::KwOmega}, {"atoms", Tok::KwAtoms}, {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
  };

  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t pos, std::string text = "") {
    out.push_back({kind, std::move(text), pos});
  };

  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t pos = i;
    switch (c) {
      case '{': push(Tok::LBrace, pos); ++i; continue;
      case '}': push(Tok::RBrace, pos); ++i; continue;
      case ',': push(Tok::Comma, pos); ++i; continue;
      case '<': push(Tok::LAngle, pos); ++i; continue;
      case '>': push(Tok::RAngle, pos); ++i; continue;
      case '=': push(Tok::Equals, pos); ++i; continue;
      case '.': push(Tok::Dot, pos); ++i; continue;
      case '~': push(Tok::Tilde, pos); ++i; continue;
      case '(': push(Tok::LParen, pos); ++i; continue;
      case ')': push(Tok::RParen, pos); ++i; continue;
      case '#': push(Tok::Hash, pos); ++i; continue;
      case '/':
        if (i + 1 < input.size() && input[i + 1] == '\\') {
          push(Tok::AndOp, pos);
          i += 2;
          continue;
        }
        throw ParseError("stray '/'", pos);
      case '\\':
        if (i + 1 < input.size() && input[i + 1] == '/') {
          push(Tok::OrOp, pos);
          i += 2;
          continue;
        }
        throw ParseError("stray '\\'", pos);
      case '-':
        if (i + 1 < input.size() && input[i + 1] == '>') {
          push(Tok::Arrow, pos);
          i += 2;
          continue;
        }
        throw ParseError("stray '-'", pos);
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i])))
        text.push_back(input[i++]);
      push(Tok::Number, pos, std::move(text));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (i < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
        text.push_back(input[i++]);
      auto kw = keywords.find(text);
      if (kw != keywords.end())
        push(kw->second, pos, std::move(text));
      else
        push(Tok::Ident, pos, std::move(text));
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  push(Tok::End, input.size());
  return out;
}

}  // namespace setcat
