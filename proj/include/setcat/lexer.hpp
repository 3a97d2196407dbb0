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

#ifndef SETCAT_LEXER_HPP_
#define SETCAT_LEXER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "setcat/errors.hpp"

namespace setcat {

enum class Tok {
  LBrace,
  RBrace,
  Comma,
  LAngle,
  RAngle,
  Equals,
  Dot,
  Tilde,
  AndOp,   // conjunction connective
  OrOp,    // disjunction connective
  Arrow,   // implication connective
  LParen,
  RParen,
  Hash,
  Ident,
  Number,
  KwIn,
  KwSet,
  KwAtom,
  KwAll,
  KwEx,
  KwUnion,
  KwSep,
  KwFuncs,
  KwSucc,
  KwOmega,
  KwAtoms,
  KwTrue,
  KwFalse,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 0-based character offset
};

// Throws ParseError on any character outside the language.
std::vector<Token> tokenize(const std::string& input);

}  // namespace setcat

#endif  // SETCAT_LEXER_HPP_
