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

#include "setcat/category.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace setcat;
using setcat::testing::FamilyGen;

namespace {

FamilyCategory terminal_category() {
  return family_category(
      SetoidFamily::constant(FinSetoid::discrete(1), FinSetoid::discrete(1)));
}

// index {0, 1} discrete, fiber sizes 1 and 2
FamilyCategory two_fiber_category() {
  FinSetoid one = FinSetoid::discrete(1);
  FinSetoid two = FinSetoid::discrete(2);
  SetoidFamily fam = SetoidFamily::make(
      FinSetoid::discrete(2), {one, two},
      [&](Elem x, Elem) { return ExtFun::identity(x == 0 ? one : two); });
  return family_category(fam);
}

// the arrow-equality condition evaluated directly off the defining square
bool square_commutes(const FamilyCategory& fc, Elem i, Elem j) {
  const CatArrow& a1 = fc.arrows[i];
  const CatArrow& a2 = fc.arrows[j];
  const FinSetoid& idx = fc.family.index();
  if (!idx.eq(a1.src, a2.src) || !idx.eq(a1.dst, a2.dst)) return false;
  const ExtFun& down = fc.family.transport(a1.src, a2.src);
  const ExtFun& right = fc.family.transport(a1.dst, a2.dst);
  for (Elem t = 0; t < fc.family.fiber(a1.src).size(); ++t)
    if (!fc.family.fiber(a2.dst).eq(right(a1.map(t)), a2.map(down(t))))
      return false;
  return true;
}

}  // namespace

TEST_CASE("the one-object one-arrow category passes every axiom") {
  FamilyCategory fc = terminal_category();
  CHECK(fc.cat.arrows.size() == 1);
  CheckReport report = check_category(fc.cat);
  CHECK(report.all_passed());
  CHECK(report.entries.size() == 10);
}

TEST_CASE("arrow carrier size: all extensional maps between all fiber pairs") {
  FamilyCategory fc = two_fiber_category();
  // brute-force count over the four ordered fiber pairs
  std::size_t expected = 0;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      expected += enumerate_extfuns(fc.family.fiber(x), fc.family.fiber(y)).size();
  CHECK(fc.cat.arrows.size() == expected);
  CHECK(expected == 8);  // 1 + 2 + 1 + 4
}

TEST_CASE("category of a family passes the axioms, also with fat classes") {
  FamilyGen gen(2026);
  for (int round = 0; round < 8; ++round) {
    FamilyCategory fc = family_category(gen.random_family(3, 3));
    CheckReport report = check_category(fc.cat);
    INFO(report.to_text());
    CHECK(report.all_passed());
  }
}

TEST_CASE("a composition mutant breaks a localized axiom") {
  FamilyCategory fc = two_fiber_category();
  REQUIRE(check_category(fc.cat).all_passed());

  FinCategory mutant = fc.cat;
  mutant.cmp = ExtFun::constant(mutant.pairs, mutant.arrows, mutant.id(0));
  CheckReport report = check_category(mutant);
  CHECK(!report.all_passed());
  bool neutral_broken = false;
  for (const char* name :
       {"axiom 3 (dom of composite)", "axiom 4 (cod of composite)",
        "axiom 7 (identity is left neutral)", "axiom 8 (identity is right neutral)"})
    if (const CheckEntry* e = report.find(name); e && !e->passed) neutral_broken = true;
  CHECK(neutral_broken);
}

TEST_CASE("arrow equality agrees with the defining square") {
  FamilyGen gen(7);
  for (int round = 0; round < 6; ++round) {
    FamilyCategory fc = family_category(gen.random_family(3, 3));
    for (Elem i = 0; i < fc.cat.arrows.size(); ++i) {
      CHECK(fc.arrow_eq(i, i));  // reflexivity
      for (Elem j = 0; j < fc.cat.arrows.size(); ++j)
        CHECK(fc.arrow_eq(i, j) == square_commutes(fc, i, j));
    }
  }
}

TEST_CASE("composition predicate: identities and mismatched endpoints") {
  FamilyCategory fc = two_fiber_category();
  Elem id0 = fc.cat.id(0);
  Elem id1 = fc.cat.id(1);
  CHECK(comp_pred(fc.cat, id0, id0, id0));
  CHECK(!comp_pred(fc.cat, id0, id1, id0));  // dom(f) != cod(g): nothing composes
}

TEST_CASE("composition predicate matches the transport characterization") {
  // a category with nontrivially related objects, so transports matter
  FinSetoid fused = FinSetoid::codiscrete(2);
  FinSetoid two = FinSetoid::discrete(2);
  SetoidFamily fam = SetoidFamily::make(fused, {two, two}, [&](Elem x, Elem y) {
    // swap between the two related indices, identity on the diagonal
    if (x != y) return ExtFun(two, two, {1, 0});
    return ExtFun::identity(two);
  });
  FamilyCategory fc = family_category(fam);

  for (Elem f = 0; f < fc.cat.arrows.size(); ++f)
    for (Elem g = 0; g < fc.cat.arrows.size(); ++g)
      for (Elem h = 0; h < fc.cat.arrows.size(); ++h) {
        const CatArrow& af = fc.arrows[f];
        const CatArrow& ag = fc.arrows[g];
        bool expected = false;
        if (fam.index().eq(ag.dst, af.src)) {
          const ExtFun& hop = fam.transport(ag.dst, af.src);
          std::vector<Elem> raw(ag.map.dom().size());
          for (Elem t = 0; t < raw.size(); ++t) raw[t] = af.map(hop(ag.map(t)));
          Elem composite = fc.arrow_index(ag.src, af.dst, raw);
          expected = fc.arrow_eq(composite, h);
        }
        CHECK(comp_pred(fc.cat, f, g, h) == expected);
      }
}

TEST_CASE("functor checking: identity passes, a collapsed arrow map fails") {
  FamilyCategory fc = two_fiber_category();
  FunctorData identity_functor{fc.cat, fc.cat, ExtFun::identity(fc.cat.objects),
                               ExtFun::identity(fc.cat.arrows),
                               ExtFun::identity(fc.cat.pairs)};
  CHECK(check_functor(identity_functor).all_passed());

  FunctorData mutant = identity_functor;
  mutant.on_arrows = ExtFun::constant(fc.cat.arrows, fc.cat.arrows, fc.cat.id(0));
  CheckReport report = check_functor(mutant);
  CHECK(!report.all_passed());
  const CheckEntry* dom_eq = report.find("functor equation (dom)");
  REQUIRE(dom_eq != nullptr);
  CHECK(!dom_eq->passed);
}

TEST_CASE("functor checking rejects a mutant of each component") {
  FamilyCategory fc = two_fiber_category();
  FunctorData base{fc.cat, fc.cat, ExtFun::identity(fc.cat.objects),
                   ExtFun::identity(fc.cat.arrows), ExtFun::identity(fc.cat.pairs)};

  FunctorData bad_objects = base;
  bad_objects.on_objects = ExtFun::constant(fc.cat.objects, fc.cat.objects, 0);
  CHECK(!check_functor(bad_objects).all_passed());

  FunctorData bad_arrows = base;
  bad_arrows.on_arrows =
      ExtFun::constant(fc.cat.arrows, fc.cat.arrows, fc.cat.id(1));
  CHECK(!check_functor(bad_arrows).all_passed());

  FunctorData bad_pairs = base;
  bad_pairs.on_pairs = ExtFun::constant(fc.cat.pairs, fc.cat.pairs, 0);
  CheckReport report = check_functor(bad_pairs);
  CHECK(!report.all_passed());
  // the pair mutant leaves the object and arrow equations intact
  CHECK(report.find("functor equation (id)")->passed);
  CHECK(report.find("functor equation (dom)")->passed);
}

TEST_CASE("element predicates need a designated terminal") {
  FamilyCategory fc = two_fiber_category();
  CHECK_THROWS_AS(is_onto(fc.cat, 0), MissingTerminalError);
  CHECK_THROWS_AS(is_element(fc.cat, 0), MissingTerminalError);

  fc.cat.terminal = 0;  // the singleton fiber
  CHECK(is_element(fc.cat, fc.cat.id(0)));
  Elem id1 = fc.cat.id(1);
  CHECK(!is_element(fc.cat, id1));
}

TEST_CASE("mono and onto match injectivity and surjectivity of the fiber map") {
  FamilyCategory fc = two_fiber_category();
  fc.cat.terminal = 0;
  for (Elem i = 0; i < fc.cat.arrows.size(); ++i) {
    const CatArrow& a = fc.arrows[i];
    const FinSetoid& dom_fiber = fc.family.fiber(a.src);
    const FinSetoid& cod_fiber = fc.family.fiber(a.dst);
    bool injective = true;
    for (Elem t = 0; t < dom_fiber.size(); ++t)
      for (Elem t2 = 0; t2 < dom_fiber.size(); ++t2)
        if (cod_fiber.eq(a.map(t), a.map(t2)) && !dom_fiber.eq(t, t2))
          injective = false;
    bool surjective = true;
    for (Elem s = 0; s < cod_fiber.size(); ++s) {
      bool hit = false;
      for (Elem t = 0; t < dom_fiber.size(); ++t)
        if (cod_fiber.eq(a.map(t), s)) hit = true;
      if (!hit) surjective = false;
    }
    CHECK(is_mono(fc.cat, i) == injective);
    CHECK(is_onto(fc.cat, i) == surjective);
  }
}

TEST_CASE("generator report: singleton fiber is terminal, larger is not") {
  FamilyCategory fc = two_fiber_category();
  CheckReport good = check_generator(fc.cat, 0);
  INFO(good.to_text());
  CHECK(good.all_passed());

  CheckReport bad = check_generator(fc.cat, 1);  // 2-element discrete fiber
  const CheckEntry* unique = bad.find("terminal: arrow unique up to equality");
  REQUIRE(unique != nullptr);
  CHECK(!unique->passed);
}

TEST_CASE("generator property on random families with a forced terminal") {
  FamilyGen gen(31);
  for (int round = 0; round < 6; ++round) {
    SetoidFamily base = gen.random_family(2, 3);
    // extend the index with a fresh discrete point carrying a one-point fiber
    std::size_t n = base.index().size();
    std::vector<std::size_t> ids(n + 1);
    for (Elem x = 0; x < n; ++x) ids[x] = base.index().class_id(x);
    ids[n] = base.index().class_count();
    FinSetoid idx = FinSetoid::from_classes(ids);
    std::vector<FinSetoid> fibers;
    for (Elem x = 0; x < n; ++x) fibers.push_back(base.fiber(x));
    fibers.push_back(FinSetoid::discrete(1));
    SetoidFamily fam = SetoidFamily::make(idx, fibers, [&](Elem x, Elem y) {
      if (x == n || y == n) return ExtFun::identity(fibers[n]);
      return base.transport(x, y);
    });
    FamilyCategory fc = family_category(fam);
    CheckReport report = check_generator(fc.cat, n);
    INFO(report.to_text());
    CHECK(report.all_passed());
  }
}
