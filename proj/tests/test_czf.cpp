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

#include "setcat/czf.hpp"

#include "doctest.h"
#include "setcat/parser.hpp"
#include "test_support.hpp"

using namespace setcat;
using setcat::testing::TreeGen;

namespace {

const AtomTable kNoAtoms;

VSet empty() { return VSet(); }
VSet v(const std::string& text, const AtomTable& t = kNoAtoms) {
  Env env;
  return eval_term(*parse_term(text), env, t);
}

bool eq(const VSet& a, const VSet& b, const AtomTable& t = kNoAtoms) {
  return vset_equal(a, b, t);
}

}  // namespace

TEST_CASE("pairing, union, successor") {
  CHECK(eq(pair_set(empty(), empty()), v("{{}}")));
  CHECK(eq(union_set(v("{{{}},{{{}}}}")), v("{{},{{}}}")));
  CHECK(eq(succ_set(empty()), v("{{},{{}}}")));
  CHECK_THROWS_AS(union_set(VSet::atom("a", AtomTable::parse("a"))), NotASetError);

  // union ignores atom members (they have no elements)
  AtomTable t = AtomTable::parse("a");
  VSet mixed = VSet::sup({VSet::atom("a", t), v("{{}}", t)});
  CHECK(eq(union_set(mixed), v("{{}}", t), t));
}

TEST_CASE("kuratowski pairs round-trip and degenerate") {
  VSet a = empty();
  VSet b = v("{{}}");
  auto [x, y] = kproj(kpair(a, b));
  CHECK(eq(x, a));
  CHECK(eq(y, b));

  CHECK(eq(kpair(a, a), v("{{{}}}")));  // {{x}} when the sides collapse
  auto [x2, y2] = kproj(v("{{{}}}"));
  CHECK(eq(x2, empty()));
  CHECK(eq(y2, empty()));

  CHECK_THROWS_AS(kproj(empty()), NotAPairError);
  CHECK_THROWS_AS(kproj(v("{{},{{}}}")), NotAPairError);  // not of pair shape
  CHECK_THROWS_AS(kproj(v("{{{},{{}}}}")), NotAPairError);  // lone doubleton
}

TEST_CASE("kuratowski equality is componentwise (brute force, rank <= 2)") {
  std::vector<VSet> pool = enumerate_vsets(2, 2, kNoAtoms);
  REQUIRE(pool.size() == 4);  // {}, {{}}, {{{}}}, {{},{{}}}
  for (const VSet& x : pool)
    for (const VSet& y : pool)
      for (const VSet& x2 : pool)
        for (const VSet& y2 : pool) {
          bool pairs_equal = eq(kpair(x, y), kpair(x2, y2));
          CHECK(pairs_equal == (eq(x, x2) && eq(y, y2)));
        }
}

TEST_CASE("kproj on arbitrary trees: decode or reject, never misdecode") {
  TreeGen gen(13, AtomTable::parse("a b"));
  const AtomTable& t = gen.table();
  std::size_t decoded = 0;
  for (int i = 0; i < 400; ++i) {
    VSet z = gen.tree(3, 3);
    try {
      auto [x, y] = kproj(z, t);
      CHECK(vset_equal(kpair(x, y), z, t));
      ++decoded;
    } catch (const NotAPairError&) {
    }
  }
  // pairs built honestly always decode
  for (int i = 0; i < 100; ++i) {
    VSet x = gen.tree(2, 2);
    VSet y = gen.tree(2, 2);
    auto [px, py] = kproj(kpair(x, y), t);
    CHECK(vset_equal(px, x, t));
    CHECK(vset_equal(py, y, t));
  }
  CHECK(decoded > 0);  // the generator does hit pair-shaped trees
}

TEST_CASE("separation") {
  Env env;
  AtomTable t = AtomTable::parse("a");
  VSet u = v("{{},{{}},#a}", t);
  CHECK(eq(separation(u, "x", *parse_formula("true"), env, t), u, t));
  CHECK(eq(separation(u, "x", *parse_formula("false"), env, t), empty(), t));
  CHECK(eq(separation(u, "x", *parse_formula("atom(x)"), env, t), v("{#a}", t), t));
  CHECK_THROWS_AS(separation(VSet::atom("a", t), "x", *parse_formula("true"), env, t),
                  NotASetError);
}

TEST_CASE("separation respects set equality of its argument") {
  TreeGen gen(5, AtomTable::parse("a b"));
  const AtomTable& t = gen.table();
  Env env;
  FormulaPtr phi = parse_formula("ex y in x . set(y)");
  for (int i = 0; i < 40; ++i) {
    VSet u = gen.tree(3, 3);
    if (u.is_atom()) continue;
    VSet u2 = gen.shuffled(u);
    CHECK(vset_equal(separation(u, "x", *phi, env, t),
                     separation(u2, "x", *phi, env, t), t));
  }
}

TEST_CASE("formula evaluation") {
  Env env;
  AtomTable t = AtomTable::parse("a");
  CHECK(eval_formula(*parse_formula("all x in {{}} . x = {}"), env, t));
  CHECK(!eval_formula(*parse_formula("ex y in {} . true"), env, t));
  CHECK(eval_formula(*parse_formula("atom(#a)"), env, t));
  CHECK(!eval_formula(*parse_formula("set(#a)"), env, t));
  CHECK(eval_formula(*parse_formula("all x in #a . false"), env, t));  // empty range
  CHECK_THROWS_AS(eval_formula(*parse_formula("z = {}"), env, t), UnboundVariableError);
}

TEST_CASE("formula truth is stable under rebinding to an equal set") {
  TreeGen gen(17, kNoAtoms);
  Env env;
  FormulaPtr phi = parse_formula("all y in x . (ex z in x . y in z) \\/ y = {}");
  for (int i = 0; i < 30; ++i) {
    VSet a = gen.tree(3, 2);
    VSet b = gen.shuffled(a);
    CHECK(eval_formula(*phi, env.with("x", a), kNoAtoms) ==
          eval_formula(*phi, env.with("x", b), kNoAtoms));
  }
}

TEST_CASE("total functional relations") {
  VSet u = v("{{}}");
  VSet w = v("{{},{{}}}");
  VSet id_graph = VSet::sup({kpair(empty(), empty())});
  CHECK(is_total_functional(id_graph, u, u));
  CHECK(!is_total_functional(empty(), u, u));  // totality fails
  // double-valued: <0,0> and <0,{0}>
  VSet doubled = VSet::sup({kpair(empty(), empty()), kpair(empty(), v("{{}}"))});
  CHECK(!is_total_functional(doubled, u, w));
  CHECK(is_total_functional(empty(), empty(), w));  // empty graph from empty set
  // a member that is not a pair
  CHECK(!is_total_functional(v("{{}}"), empty(), w));
  CHECK_THROWS_AS(is_total_functional(empty(), empty(), VSet::atom("a", AtomTable::parse("a")),
                                      AtomTable::parse("a")),
                  NotASetError);
}

TEST_CASE("member position setoids") {
  CHECK(member_setoid(empty()).size() == 0);
  FinSetoid doubled = member_setoid(v("{{},{}}"));
  CHECK(doubled.size() == 2);
  CHECK(doubled.eq(0, 1));
  FinSetoid split = member_setoid(v("{{},{{}}}"));
  CHECK(split.size() == 2);
  CHECK(!split.eq(0, 1));
  CHECK_THROWS_AS(member_setoid(VSet::atom("a", AtomTable::parse("a")),
                                AtomTable::parse("a")),
                  NotASetError);
}

TEST_CASE("function graphs and the function set") {
  VSet u = v("{{}}");
  VSet w = v("{{},{{}}}");
  VSet ident = function_graph(u, u, ExtFun::identity(member_setoid(u)));
  CHECK(eq(ident, VSet::sup({kpair(empty(), empty())})));

  CHECK(eq(function_set(empty(), w), v("{{}}")));  // just the empty graph
  // two functions from a singleton into a two-element set
  VSet fs = function_set(u, w);
  std::size_t classes = member_setoid(fs).class_count();
  CHECK(classes == 2);

  // every graph in the function set is total functional, and conversely at
  // this scale (full check in the acceptance suite)
  for (const VSet& z : fs.children()) CHECK(is_total_functional(z, u, w));

  for (const ExtFun& h : enumerate_extfuns(member_setoid(u), member_setoid(w)))
    CHECK(is_total_functional(function_graph(u, w, h), u, w));
}

TEST_CASE("function-set position bijection on small pairs") {
  for (const char* a : {"{}", "{{}}", "{{},{{}}}"})
    for (const char* b : {"{}", "{{}}", "{{},{{}}}"}) {
      CheckReport report = check_funcset_bijection(v(a), v(b));
      INFO(a << " -> " << b << "\n" << report.to_text());
      CHECK(report.all_passed());
    }
}

TEST_CASE("subset collection witness and image collection") {
  VSet a = v("{{}}");
  CHECK(eq(subset_collection_set(a, empty()), v("{{}}")));
  VSet c = subset_collection_set(a, v("{{},{{}}}"));
  CHECK(member_setoid(c).class_count() == 4);  // all subsets of a 2-element set

  VSet imaged = collect_image(v("{{},{{}}}"), [](const VSet& x) { return succ_set(x); });
  CHECK(eq(imaged, VSet::sup({succ_set(empty()), succ_set(v("{{}}"))})));
}

TEST_CASE("atoms set and the bounded infinity approximation") {
  AtomTable t = AtomTable::parse("a b | c");
  VSet atoms = atoms_set(t);
  CHECK(member_setoid(atoms, t).class_count() == 2);
  CHECK(vset_member(VSet::atom("b", t), atoms, t));
  CHECK(!vset_member(empty(), atoms, t));

  VSet om = omega_approx(3);
  CHECK(vset_member(empty(), om));
  VSet stage = empty();
  for (int i = 0; i < 2; ++i) {
    CHECK(vset_member(succ_set(stage), om));
    stage = succ_set(stage);
  }
  // ranks grow strictly, so all stages are distinct
  CHECK(member_setoid(om).class_count() == 4);
}

TEST_CASE("arrow codes") {
  VSet u = v("{{}}");
  VSet ident = function_graph(u, u, ExtFun::identity(member_setoid(u)));
  VSet code = kpair(kpair(u, u), ident);
  CHECK(is_arrow_set(code));
  CHECK(!is_arrow_set(empty()));
  CHECK(!is_arrow_set(v("{{},{{}}}")));

  CHECK(eq(compose_graphs(ident, ident), ident));
  VSet composed = compose_arrow_sets(code, code);
  CHECK(eq(composed, code));
  VSet other = kpair(kpair(v("{{},{{}}}"), u), v("{<{},{}>,<{{}},{}>}"));
  CHECK_THROWS_AS(compose_arrow_sets(code, other), NotComposableError);
}

TEST_CASE("internal category of sets over tiny slices") {
  VSlice just_empty{{empty()}, kNoAtoms};
  VCategory vc = internal_set_category(just_empty);
  CHECK(vc.cat.objects.size() == 1);
  CHECK(vc.cat.arrows.size() == 1);  // only the empty graph
  CHECK(check_category(vc.cat).all_passed());

  VSlice singleton{{v("{{}}")}, kNoAtoms};
  VCategory vc2 = internal_set_category(singleton);
  CHECK(vc2.cat.arrows.size() == 1);  // only the identity graph
  CHECK(check_category(vc2.cat).all_passed());

  VSlice richer{{empty(), v("{{}}"), v("{{},{{}}}")}, kNoAtoms};
  CHECK(check_category(internal_set_category(richer).cat).all_passed());

  VSlice with_atom{{VSet::atom("a", AtomTable::parse("a"))}, AtomTable::parse("a")};
  CHECK_THROWS_AS(internal_set_category(with_atom), NotASetError);
}

TEST_CASE("member family transports pick least equal positions") {
  VSlice slice{{v("{{},{{}}}"), VSet::sup({v("{{}}"), empty()})}, kNoAtoms};
  SetoidFamily fam = member_family(slice);  // construction validates the laws
  REQUIRE(fam.index().eq(0, 1));
  const ExtFun& t01 = fam.transport(0, 1);
  // position 0 of {0,{0}} holds 0, which sits at position 1 of {{0},0}
  CHECK(t01(0) == 1);
  CHECK(t01(1) == 0);
  CHECK(ext_equal(fam.transport(0, 0), ExtFun::identity(fam.fiber(0))));
}

TEST_CASE("member family transports agree with any other witness choice") {
  TreeGen gen(23, kNoAtoms);
  for (int round = 0; round < 20; ++round) {
    VSet u = gen.tree(3, 3);
    if (u.is_atom() || u.children().empty()) continue;
    VSet w = gen.shuffled(u);
    VSlice slice{{u, w}, kNoAtoms};
    SetoidFamily fam = member_family(slice);
    const ExtFun& least = fam.transport(0, 1);
    // a greedy variant picking the greatest matching position instead
    std::vector<Elem> alt(u.children().size());
    for (Elem x = 0; x < u.children().size(); ++x)
      for (Elem y = 0; y < w.children().size(); ++y)
        if (vset_equal(u.children()[x], w.children()[y], kNoAtoms)) alt[x] = y;
    CHECK(ext_equal(least, ExtFun(fam.fiber(0), fam.fiber(1), alt)));
  }
}

TEST_CASE("the two categories over a slice are isomorphic") {
  VSlice slice{{empty(), v("{{}}"), v("{{},{{}}}")}, kNoAtoms};
  CheckReport report = check_main_iso(slice);
  INFO(report.to_text());
  CHECK(report.all_passed());

  // arrow class counts agree between the two constructions
  FamilyCategory fc = family_category(member_family(slice));
  VCategory vc = internal_set_category(slice);
  CHECK(fc.cat.arrows.class_count() == vc.cat.arrows.class_count());
}

TEST_CASE("isomorphism on a slice with equal-but-distinct objects and atoms") {
  AtomTable t = AtomTable::parse("a b | c");
  VSlice slice{{empty(), v("{#a}", t), v("{#b}", t), v("{#a,#b}", t)}, t};
  // {#a}, {#b} and {#a,#b} are all equal since a and b share a class
  REQUIRE(vset_equal(slice.objects[1], slice.objects[3], t));
  CheckReport report = check_main_iso(slice);
  INFO(report.to_text());
  CHECK(report.all_passed());
}

TEST_CASE("axiom suite passes without atoms") {
  AxiomSuiteConfig config;
  config.rank = 2;
  config.breadth = 2;
  CheckReport report = run_axiom_suite(config);
  INFO(report.to_text());
  CHECK(report.all_passed());
}

TEST_CASE("equated atoms collapse to one class in the atoms set") {
  AtomTable t = AtomTable::parse("a b");
  CHECK(member_setoid(atoms_set(t), t).class_count() == 1);
}

TEST_CASE("axiom suite passes and localizes injected faults") {
  AxiomSuiteConfig config;
  config.rank = 2;
  config.breadth = 2;
  config.atoms = AtomTable::parse("a b | c");
  CheckReport clean = run_axiom_suite(config);
  INFO(clean.to_text());
  CHECK(clean.all_passed());

  // a membership mutant that lets atoms have elements must break C2
  config.member_hook = [](const VSet& u, const VSet& v2, const AtomTable& t) {
    if (v2.is_atom()) return true;
    return vset_member(u, v2, t);
  };
  CheckReport broken = run_axiom_suite(config);
  CHECK(!broken.all_passed());
  const CheckEntry* c2 = broken.find("C2 (only sets have elements)");
  REQUIRE(c2 != nullptr);
  CHECK(!c2->passed);
  CHECK(!c2->witness.empty());
}

TEST_CASE("set operations respect set equality") {
  TreeGen gen(77, kNoAtoms);
  for (int round = 0; round < 25; ++round) {
    VSet a = gen.tree(2, 2);
    VSet b = gen.shuffled(a);
    VSet c = gen.tree(2, 2);
    CHECK(eq(pair_set(a, c), pair_set(b, c)));
    CHECK(eq(succ_set(a), succ_set(b)));
    if (a.is_sup()) {
      CHECK(eq(union_set(a), union_set(b)));
      CHECK(eq(function_set(a, VSet::sup({empty()})),
               function_set(b, VSet::sup({empty()}))));
      CHECK(eq(collect_image(a, [](const VSet& x) { return succ_set(x); }),
               collect_image(b, [](const VSet& x) { return succ_set(x); })));
    }
  }
}
