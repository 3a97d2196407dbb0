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

#ifndef SETCAT_CATEGORY_HPP_
#define SETCAT_CATEGORY_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "setcat/report.hpp"
#include "setcat/setoid.hpp"

namespace setcat {

// A small category in essentially algebraic form: three setoids (objects,
// arrows, composable pairs) and six operations between them.  Nothing about
// the construction forces the category axioms; check_category decides them.
struct FinCategory {
  FinSetoid objects;  // C0
  FinSetoid arrows;   // C1
  FinSetoid pairs;    // C2

  ExtFun id;        // C0 -> C1
  ExtFun dom, cod;  // C1 -> C0
  ExtFun cmp;       // C2 -> C1
  ExtFun fst, snd;  // C2 -> C1

  // Optional designated terminal object, required by the element-based
  // predicates (is_element, is_onto, check_generator uses its argument).
  std::optional<Elem> terminal;
};

// Checks the ten category axioms by exhaustive quantification and reports
// each with a pass flag and a witness on failure.  Throws InputError if the
// six operations do not even have the right signatures.
CheckReport check_category(const FinCategory& c);

// The composition predicate: true iff some composable pair u has
// fst(u) = g, snd(u) = f and cmp(u) = h (all in arrow equality); reads as
// "f after g yields h".  Decided by search over the full C2 carrier.
bool comp_pred(const FinCategory& c, Elem f, Elem g, Elem h);

// A functor as three component maps.  check_functor decides the six
// commutation equations pointwise.
struct FunctorData {
  FinCategory source, target;
  ExtFun on_objects;  // F0
  ExtFun on_arrows;   // F1
  ExtFun on_pairs;    // F2
};

CheckReport check_functor(const FunctorData& fd);

// Composition oracle over a category assumed valid: one representative
// composable pair per (fst-class, snd-class) bucket.  compose(f, g) is the
// composite of f after g, or nullopt when no pair element witnesses it.
class Composer {
 public:
  explicit Composer(const FinCategory& c);
  std::optional<Elem> compose(Elem f, Elem g) const;

 private:
  const FinCategory* cat_;
  std::unordered_map<std::uint64_t, Elem> bucket_;
};

// Arrow predicates, decided by exhaustive search.  is_element and is_onto
// need c.terminal and throw MissingTerminalError without it.  The overloads
// taking a Composer reuse a prebuilt composition index.
bool is_element(const FinCategory& c, Elem arrow);
bool is_mono(const FinCategory& c, Elem arrow);
bool is_onto(const FinCategory& c, Elem arrow);
bool is_mono(const FinCategory& c, const Composer& comp, Elem arrow);
bool is_onto(const FinCategory& c, const Composer& comp, Elem arrow);

// Verifies that `candidate` is a terminal object (an arrow into it exists
// from every object and is unique up to arrow equality) and that every
// arrow which is both mono and onto has a search-found two-sided inverse.
CheckReport check_generator(const FinCategory& c, Elem candidate);

// One arrow of a category built from a family: a source and target index
// element and an extensional map between their fibers.
struct CatArrow {
  Elem src = 0;
  Elem dst = 0;
  ExtFun map;
};

// The category of setoids a family gives rise to, together with the carrier
// bookkeeping the category form erases.  Arrow equality identifies
// (x,y,f) with (u,v,g) when x = u and y = v in the index and the square of f,
// g and the two canonical transports commutes.
class FamilyCategory {
 public:
  FinCategory cat;
  SetoidFamily family;
  std::vector<CatArrow> arrows;                   // per C1 carrier element
  std::vector<std::pair<Elem, Elem>> composable;  // per C2 carrier element

  // Carrier index of the arrow with this exact source, target and raw map.
  // Throws InputError if absent.
  Elem arrow_index(Elem src, Elem dst, const std::vector<Elem>& raw) const;

  bool arrow_eq(Elem a, Elem b) const { return cat.arrows.eq(a, b); }

  std::unordered_map<std::string, Elem> arrow_lookup;  // internal: keyed by src/dst/raw
};

// Builds the category of a validated family: objects are the index setoid,
// the arrow carrier holds every extensional map between every ordered pair
// of fibers, composable pairs hold every arrow pair with matching
// cod/dom, and composition routes through the canonical transport.
// Throws SizeCapError when a carrier would exceed its cap.
FamilyCategory family_category(const SetoidFamily& family,
                               std::size_t arrow_cap = 300000,
                               std::size_t pair_cap = 4000000);

}  // namespace setcat

#endif  // SETCAT_CATEGORY_HPP_
