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

#ifndef SETCAT_AST_HPP_
#define SETCAT_AST_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace setcat {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Terms of the surface language.  Quantifier-free values plus the bounded
// comprehension form; Sep binds its variable inside the body formula.
struct Term {
  struct Var {
    std::string name;
  };
  struct AtomLit {
    std::string id;
  };
  struct SetLit {
    std::vector<TermPtr> elems;
  };
  struct PairLit {
    TermPtr first, second;
  };
  struct UnionOf {
    TermPtr arg;
  };
  struct Sep {
    std::string var;
    TermPtr bound;
    FormulaPtr body;
  };
  struct FuncSpace {
    TermPtr dom, cod;
  };
  struct SuccOf {
    TermPtr arg;
  };
  struct OmegaApprox {
    std::size_t steps;
  };
  struct AtomsSet {};

  using Node = std::variant<Var, AtomLit, SetLit, PairLit, UnionOf, Sep, FuncSpace,
                            SuccOf, OmegaApprox, AtomsSet>;
  Node node;
};

// Bounded formulas.  Every quantifier carries a bound term, so the grammar
// itself enforces the bounded fragment; there is no unbounded form to build.
struct Formula {
  struct Truth {};
  struct Falsity {};
  struct Eq {
    TermPtr lhs, rhs;
  };
  struct Mem {
    TermPtr lhs, rhs;
  };
  struct IsSet {
    TermPtr arg;
  };
  struct IsAtom {
    TermPtr arg;
  };
  struct Not {
    FormulaPtr arg;
  };
  struct And {
    FormulaPtr lhs, rhs;
  };
  struct Or {
    FormulaPtr lhs, rhs;
  };
  struct Implies {
    FormulaPtr lhs, rhs;
  };
  struct AllIn {
    std::string var;
    TermPtr bound;
    FormulaPtr body;
  };
  struct ExIn {
    std::string var;
    TermPtr bound;
    FormulaPtr body;
  };

  using Node = std::variant<Truth, Falsity, Eq, Mem, IsSet, IsAtom, Not, And, Or,
                            Implies, AllIn, ExIn>;
  Node node;
};

inline TermPtr make_term(Term::Node node) {
  return std::make_shared<Term>(Term{std::move(node)});
}

inline FormulaPtr make_formula(Formula::Node node) {
  return std::make_shared<Formula>(Formula{std::move(node)});
}

}  // namespace setcat

#endif  // SETCAT_AST_HPP_
