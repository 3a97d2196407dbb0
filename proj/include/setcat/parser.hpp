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

#ifndef SETCAT_PARSER_HPP_
#define SETCAT_PARSER_HPP_

#include <string>

#include "setcat/ast.hpp"
#include "setcat/errors.hpp"

namespace setcat {

// Recursive-descent parsers over the whole input; both throw ParseError with
// the offending position.  Connective precedence is ~ over /\ over \/ over
// ->, with -> associating to the right.  Quantifiers always carry an `in`
// bound; there is no unbounded form.
TermPtr parse_term(const std::string& input);
FormulaPtr parse_formula(const std::string& input);

// Inverses of the parsers up to parenthesization: parsing the printed text
// reproduces the tree.
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

}  // namespace setcat

#endif  // SETCAT_PARSER_HPP_
