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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setcat/czf.hpp"
#include "setcat/lexer.hpp"
#include "setcat/parser.hpp"
#include "setcat/pullback.hpp"
#include "setcat/vset.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeCap = 3;

setcat::VSlice read_slice(const std::string& path, const setcat::AtomTable& table) {
  std::ifstream in(path);
  if (!in) throw setcat::InputError("cannot open slice file '" + path + "'");
  setcat::VSlice slice;
  slice.table = table;
  std::string line;
  setcat::Env env;
  while (std::getline(in, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string text = line.substr(begin, end - begin + 1);
    slice.objects.push_back(
        setcat::eval_term(*setcat::parse_term(text), env, table));
  }
  if (slice.objects.empty()) throw setcat::InputError("slice file is empty");
  return slice;
}

int report_exit(const setcat::CheckReport& report) {
  std::cout << report.to_text();
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_repl(const setcat::AtomTable& table) {
  setcat::Env env;
  std::string line;
  std::cout << "setcat repl; 'let x = <term>', 'check <formula>', a term, or 'quit'\n";
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string text = line.substr(begin, end - begin + 1);
    if (text == "quit" || text == "exit") break;
    try {
      std::vector<setcat::Token> toks = setcat::tokenize(text);
      if (toks.size() >= 3 && toks[0].kind == setcat::Tok::Ident &&
          toks[0].text == "let" && toks[1].kind == setcat::Tok::Ident &&
          toks[2].kind == setcat::Tok::Equals) {
        std::string rhs = text.substr(toks[2].pos + 1);
        setcat::VSet value = setcat::eval_term(*setcat::parse_term(rhs), env, table);
        env.bind(toks[1].text, value);
        std::cout << setcat::canonical_text(value, table) << "\n";
        continue;
      }
      if (!toks.empty() && toks[0].kind == setcat::Tok::Ident &&
          toks[0].text == "check") {
        std::string rhs = text.substr(toks[0].pos + 5);
        bool value = setcat::eval_formula(*setcat::parse_formula(rhs), env, table);
        std::cout << (value ? "true" : "false") << "\n";
        continue;
      }
      setcat::VSet value = setcat::eval_term(*setcat::parse_term(text), env, table);
      std::cout << setcat::canonical_text(value, table) << "\n";
    } catch (const setcat::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite iterative sets, setoid families and their categories"};
  app.require_subcommand(1);

  std::string atoms_spec;
  std::string expr;
  std::string slice_path;
  std::string preset = "discrete2";
  std::size_t rank = 2, breadth = 2, depth = 1, omega_steps = 3;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term, print canonical form");
  eval_cmd->add_option("expr", expr, "term to evaluate")->required();
  eval_cmd->add_option("--atoms", atoms_spec, "atom classes, e.g. \"a b | c\"");

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate a closed formula");
  check_cmd->add_option("formula", expr, "formula to decide")->required();
  check_cmd->add_option("--atoms", atoms_spec, "atom classes");

  CLI::App* axioms_cmd = app.add_subcommand("axioms", "run the axiom suite");
  axioms_cmd->add_option("--rank", rank, "rank bound");
  axioms_cmd->add_option("--breadth", breadth, "breadth bound");
  axioms_cmd->add_option("--atoms", atoms_spec, "atom classes");
  axioms_cmd->add_option("--omega", omega_steps, "infinity approximation steps");

  CLI::App* category_cmd =
      app.add_subcommand("category", "build the category of sets over a slice and check it");
  category_cmd->add_option("--slice", slice_path, "file of terms, one per line")
      ->required();
  category_cmd->add_option("--atoms", atoms_spec, "atom classes");

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "check the isomorphism of the two categories over a slice");
  iso_cmd->add_option("--slice", slice_path, "file of terms, one per line")->required();
  iso_cmd->add_option("--atoms", atoms_spec, "atom classes");

  CLI::App* pullbacks_cmd =
      app.add_subcommand("pullbacks", "verify chosen pullbacks over a staged universe");
  pullbacks_cmd->add_option("--preset", preset, "base family preset")
      ->check(CLI::IsMember(setcat::preset_names()));
  pullbacks_cmd->add_option("--depth", depth, "stage depth bound");

  CLI::App* repl_cmd = app.add_subcommand("repl", "interactive loop");
  repl_cmd->add_option("--atoms", atoms_spec, "atom classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    setcat::AtomTable table = setcat::AtomTable::parse(atoms_spec);
    setcat::Env env;

    if (eval_cmd->parsed()) {
      setcat::VSet value = setcat::eval_term(*setcat::parse_term(expr), env, table);
      std::cout << setcat::canonical_text(value, table) << "\n";
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      bool value = setcat::eval_formula(*setcat::parse_formula(expr), env, table);
      std::cout << (value ? "true" : "false") << "\n";
      return value ? kExitOk : kExitCheckFailed;
    }
    if (axioms_cmd->parsed()) {
      setcat::AxiomSuiteConfig config;
      config.rank = rank;
      config.breadth = breadth;
      config.atoms = table;
      config.omega_steps = omega_steps;
      return report_exit(setcat::run_axiom_suite(config));
    }
    if (category_cmd->parsed()) {
      setcat::VSlice slice = read_slice(slice_path, table);
      setcat::VCategory vc = setcat::internal_set_category(slice);
      return report_exit(setcat::check_category(vc.cat));
    }
    if (iso_cmd->parsed()) {
      setcat::VSlice slice = read_slice(slice_path, table);
      return report_exit(setcat::check_main_iso(slice));
    }
    if (pullbacks_cmd->parsed()) {
      setcat::StagedUniverse su(setcat::base_preset(preset), depth);
      setcat::FamilyCategory fc = setcat::family_category(su.omega());
      return report_exit(setcat::pullback_suite(su, fc));
    }
    if (repl_cmd->parsed()) return run_repl(table);
  } catch (const setcat::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const setcat::StageOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const setcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
