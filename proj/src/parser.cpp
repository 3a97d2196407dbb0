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

#include "setcat/parser.hpp"

#include <vector>

#include "setcat/lexer.hpp"

namespace setcat {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& input) : tokens_(tokenize(input)) {}

  TermPtr run_term() {
    TermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  FormulaPtr run_formula() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool eat(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (!at(kind)) throw ParseError("expected " + what, peek().pos);
    return advance();
  }

  TermPtr term() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::LBrace: {
        advance();
        std::vector<TermPtr> elems;
        if (!at(Tok::RBrace)) {
          elems.push_back(term());
          while (eat(Tok::Comma)) elems.push_back(term());
        }
        expect(Tok::RBrace, "'}'");
        return make_term(Term::SetLit{std::move(elems)});
      }
      case Tok::Hash: {
        advance();
        const Token& id = expect(Tok::Ident, "atom identifier after '#'");
        return make_term(Term::AtomLit{id.text});
      }
      case Tok::LAngle: {
        advance();
        TermPtr first = term();
        expect(Tok::Comma, "',' in pair");
        TermPtr second = term();
        expect(Tok::RAngle, "'>'");
        return make_term(Term::PairLit{std::move(first), std::move(second)});
      }
      case Tok::KwUnion: {
        advance();
        expect(Tok::LParen, "'(' after union");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return make_term(Term::UnionOf{std::move(arg)});
      }
      case Tok::KwFuncs: {
        advance();
        expect(Tok::LParen, "'(' after funcs");
        TermPtr dom = term();
        expect(Tok::Comma, "',' between function-set arguments");
        TermPtr cod = term();
        expect(Tok::RParen, "')'");
        return make_term(Term::FuncSpace{std::move(dom), std::move(cod)});
      }
      case Tok::KwSucc: {
        advance();
        expect(Tok::LParen, "'(' after succ");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return make_term(Term::SuccOf{std::move(arg)});
      }
      case Tok::KwOmega: {
        advance();
        expect(Tok::LParen, "'(' after omega");
        const Token& n = expect(Tok::Number, "a natural number");
        expect(Tok::RParen, "')'");
        return make_term(Term::OmegaApprox{std::stoul(n.text)});
      }
      case Tok::KwAtoms:
        advance();
        return make_term(Term::AtomsSet{});
      case Tok::KwSep: {
        advance();
        const Token& var = expect(Tok::Ident, "a variable after sep");
        expect(Tok::KwIn, "'in' after the separation variable");
        TermPtr bound = term();
        expect(Tok::Dot, "'.' before the separation body");
        FormulaPtr body = formula();
        return make_term(Term::Sep{var.text, std::move(bound), std::move(body)});
      }
      case Tok::Ident: {
        advance();
        return make_term(Term::Var{tok.text});
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  FormulaPtr formula() { return implies(); }

  FormulaPtr implies() {
    FormulaPtr lhs = disjunction();
    if (eat(Tok::Arrow)) {
      FormulaPtr rhs = implies();  // right-associative
      return make_formula(Formula::Implies{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (eat(Tok::OrOp)) {
      FormulaPtr rhs = conjunction();
      lhs = make_formula(Formula::Or{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = negation();
    while (eat(Tok::AndOp)) {
      FormulaPtr rhs = negation();
      lhs = make_formula(Formula::And{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  FormulaPtr negation() {
    if (eat(Tok::Tilde))
      return make_formula(Formula::Not{negation()});
    return atomic();
  }

  FormulaPtr atomic() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::KwTrue:
        advance();
        return make_formula(Formula::Truth{});
      case Tok::KwFalse:
        advance();
        return make_formula(Formula::Falsity{});
      case Tok::LParen: {
        advance();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::KwSet: {
        advance();
        expect(Tok::LParen, "'(' after set");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return make_formula(Formula::IsSet{std::move(arg)});
      }
      case Tok::KwAtom: {
        advance();
        expect(Tok::LParen, "'(' after atom");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return make_formula(Formula::IsAtom{std::move(arg)});
      }
      case Tok::KwAll:
      case Tok::KwEx: {
        bool universal = tok.kind == Tok::KwAll;
        advance();
        const Token& var = expect(Tok::Ident, "a variable after the quantifier");
        expect(Tok::KwIn, "'in' with a bound after the quantified variable");
        TermPtr bound = term();
        expect(Tok::Dot, "'.' before the quantifier body");
        FormulaPtr body = formula();
        if (universal)
          return make_formula(Formula::AllIn{var.text, std::move(bound), std::move(body)});
        return make_formula(Formula::ExIn{var.text, std::move(bound), std::move(body)});
      }
      default: {
        // a comparison between two terms
        TermPtr lhs = term();
        if (eat(Tok::Equals)) {
          TermPtr rhs = term();
          return make_formula(Formula::Eq{std::move(lhs), std::move(rhs)});
        }
        if (eat(Tok::KwIn)) {
          TermPtr rhs = term();
          return make_formula(Formula::Mem{std::move(lhs), std::move(rhs)});
        }
        throw ParseError("expected '=' or 'in' after a term", peek().pos);
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& input) { return Parser(input).run_term(); }

FormulaPtr parse_formula(const std::string& input) { return Parser(input).run_formula(); }

std::string print_term(const Term& t) {
  struct Visitor {
    std::string operator()(const Term::Var& n) const { return n.name; }
    std::string operator()(const Term::AtomLit& n) const { return "#" + n.id; }
    std::string operator()(const Term::SetLit& n) const {
      std::string out = "{";
      for (std::size_t i = 0; i < n.elems.size(); ++i) {
        if (i) out += ",";
        out += print_term(*n.elems[i]);
      }
      return out + "}";
    }
    std::string operator()(const Term::PairLit& n) const {
      return "<" + print_term(*n.first) + "," + print_term(*n.second) + ">";
    }
    std::string operator()(const Term::UnionOf& n) const {
      return "union(" + print_term(*n.arg) + ")";
    }
    std::string operator()(const Term::Sep& n) const {
      return "sep " + n.var + " in " + print_term(*n.bound) + " . " +
             print_formula(*n.body);
    }
    std::string operator()(const Term::FuncSpace& n) const {
      return "funcs(" + print_term(*n.dom) + "," + print_term(*n.cod) + ")";
    }
    std::string operator()(const Term::SuccOf& n) const {
      return "succ(" + print_term(*n.arg) + ")";
    }
    std::string operator()(const Term::OmegaApprox& n) const {
      return "omega(" + std::to_string(n.steps) + ")";
    }
    std::string operator()(const Term::AtomsSet&) const { return "atoms"; }
  };
  return std::visit(Visitor{}, t.node);
}

std::string print_formula(const Formula& f) {
  struct Visitor {
    static std::string wrap(const Formula& g) {
      // parenthesize anything that could swallow a following connective
      bool atomic = std::holds_alternative<Formula::Truth>(g.node) ||
                    std::holds_alternative<Formula::Falsity>(g.node) ||
                    std::holds_alternative<Formula::Eq>(g.node) ||
                    std::holds_alternative<Formula::Mem>(g.node) ||
                    std::holds_alternative<Formula::IsSet>(g.node) ||
                    std::holds_alternative<Formula::IsAtom>(g.node);
      return atomic ? print_formula(g) : "(" + print_formula(g) + ")";
    }
    std::string operator()(const Formula::Truth&) const { return "true"; }
    std::string operator()(const Formula::Falsity&) const { return "false"; }
    std::string operator()(const Formula::Eq& n) const {
      return print_term(*n.lhs) + " = " + print_term(*n.rhs);
    }
    std::string operator()(const Formula::Mem& n) const {
      return print_term(*n.lhs) + " in " + print_term(*n.rhs);
    }
    std::string operator()(const Formula::IsSet& n) const {
      return "set(" + print_term(*n.arg) + ")";
    }
    std::string operator()(const Formula::IsAtom& n) const {
      return "atom(" + print_term(*n.arg) + ")";
    }
    std::string operator()(const Formula::Not& n) const { return "~" + wrap(*n.arg); }
    std::string operator()(const Formula::And& n) const {
      return wrap(*n.lhs) + " /\\ " + wrap(*n.rhs);
    }
    std::string operator()(const Formula::Or& n) const {
      return wrap(*n.lhs) + " \\/ " + wrap(*n.rhs);
    }
    std::string operator()(const Formula::Implies& n) const {
      return wrap(*n.lhs) + " -> " + wrap(*n.rhs);
    }
    std::string operator()(const Formula::AllIn& n) const {
      return "all " + n.var + " in " + print_term(*n.bound) + " . " +
             print_formula(*n.body);
    }
    std::string operator()(const Formula::ExIn& n) const {
      return "ex " + n.var + " in " + print_term(*n.bound) + " . " +
             print_formula(*n.body);
    }
  };
  return std::visit(Visitor{}, f.node);
}

}  // namespace setcat
