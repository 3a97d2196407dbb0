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

#ifndef SETCAT_CZF_HPP_
#define SETCAT_CZF_HPP_

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "setcat/ast.hpp"
#include "setcat/category.hpp"
#include "setcat/report.hpp"
#include "setcat/setoid.hpp"
#include "setcat/vset.hpp"

namespace setcat {

// Variable valuation for term and formula evaluation.
class Env {
 public:
  Env() = default;

  const VSet& lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw UnboundVariableError(name);
    return it->second;
  }
  void bind(const std::string& name, VSet value) {
    bindings_.insert_or_assign(name, std::move(value));
  }
  Env with(const std::string& name, VSet value) const {
    Env out = *this;
    out.bind(name, std::move(value));
    return out;
  }
  bool contains(const std::string& name) const { return bindings_.count(name) != 0; }
  const std::map<std::string, VSet>& bindings() const { return bindings_; }

 private:
  std::map<std::string, VSet> bindings_;
};

// ---------------------------------------------------------------------------
// Set-level operations

VSet pair_set(const VSet& x, const VSet& y);
// Throws NotASetError when x is an atom.
VSet union_set(const VSet& x);
// {y, {y}}
VSet succ_set(const VSet& y);

// Kuratowski pair {{x},{x,y}} and its inverse up to set equality; kproj
// throws NotAPairError when z does not decode.
VSet kpair(const VSet& x, const VSet& y);
std::pair<VSet, VSet> kproj(const VSet& z, const AtomTable& table = AtomTable());

// ---------------------------------------------------------------------------
// Formula and term evaluation

bool eval_formula(const Formula& phi, const Env& env,
                  const AtomTable& table = AtomTable());
VSet eval_term(const Term& t, const Env& env, const AtomTable& table = AtomTable(),
               std::size_t cap = 1u << 16);

// The members x of u with phi true under env extended by var := x.
VSet separation(const VSet& u, const std::string& var, const Formula& phi,
                const Env& env, const AtomTable& table = AtomTable());

// ---------------------------------------------------------------------------
// Function sets

// The three-clause relation test: every member of z is a pair of a member of
// u and a member of v; every member of u is paired; pairing is single-valued.
// Throws NotASetError when z, u or v is an atom.
bool is_total_functional(const VSet& z, const VSet& u, const VSet& v,
                         const AtomTable& table = AtomTable());

// The setoid of member positions of u, with positions equal when the
// children they point at are.  Throws NotASetError on atoms.
FinSetoid member_setoid(const VSet& u, const AtomTable& table = AtomTable());

// The graph of a position map h as a set of pairs: one <child(u,x),
// child(v,h(x))> per position x of u.
VSet function_graph(const VSet& u, const VSet& v, const ExtFun& h,
                    const AtomTable& table = AtomTable());

// The set of all functions from u to v: one graph per extensional position
// map.  Throws SizeCapError on blowup.
VSet function_set(const VSet& u, const VSet& v, const AtomTable& table = AtomTable(),
                  std::size_t cap = 1u << 16);

// Checks the one-to-one correspondence between member positions of
// function_set(u, v) and extensional position maps u -> v.
CheckReport check_funcset_bijection(const VSet& u, const VSet& v,
                                    const AtomTable& table = AtomTable());

// ---------------------------------------------------------------------------
// Collection witnesses, atoms, infinity approximation

// The set of all subsets of b formed from its member list; a finite
// surrogate for the subset-collection witness over (a, b).
VSet subset_collection_set(const VSet& a, const VSet& b,
                           const AtomTable& table = AtomTable(),
                           std::size_t cap = 1u << 16);

// The image of a's members under an explicit assignment.
VSet collect_image(const VSet& a, const std::function<VSet(const VSet&)>& h);

// One atom per equivalence class.
VSet atoms_set(const AtomTable& table);

// {0, 0+, 0++, ...} with n applications of y+ = {y, {y}}.
VSet omega_approx(std::size_t n);

// ---------------------------------------------------------------------------
// The internal category of sets and the member-position family

// Decodes <<a,b>, f> with f a total functional relation from a to b.
bool is_arrow_set(const VSet& w, const AtomTable& table = AtomTable());

// Relation composition of two graphs: all <x,z> with some <x,y> in z1 and
// <y,z> in z2.
VSet compose_graphs(const VSet& z1, const VSet& z2,
                    const AtomTable& table = AtomTable());

// Arrow-level composition; throws NotComposableError when the middle objects
// differ.
VSet compose_arrow_sets(const VSet& w1, const VSet& w2,
                        const AtomTable& table = AtomTable());

// A finite list of sets to build categories over, with its atom table.
struct VSlice {
  std::vector<VSet> objects;
  AtomTable table;
};

// The internal category of sets over a slice, with the set-level codes kept
// alongside the carrier indices.
struct VCategory {
  FinCategory cat;
  VSlice slice;
  std::vector<VSet> arrow_codes;                  // <<a,b>,graph> per C1 element
  std::vector<std::pair<Elem, Elem>> arrow_ends;  // object indices per C1 element
  std::vector<ExtFun> arrow_maps;                 // position map per C1 element
  std::vector<std::pair<Elem, Elem>> composable;  // arrow indices per C2 element

  Elem arrow_index(Elem src, Elem dst, const std::vector<Elem>& raw) const;
  std::map<std::string, Elem> arrow_lookup;
};

// Builds the internal category: arrows are all <<a,b>, z> with z a member of
// function_set(a, b), composable pairs are all arrow pairs with matching
// endpoints, and everything is compared by set equality.  Objects must be
// sets (NotASetError otherwise).
VCategory internal_set_category(const VSlice& slice, std::size_t cap = 1u << 16);

// The family assigning each slice member its member-position setoid, with
// transports sending a position to the least equal position.
SetoidFamily member_family(const VSlice& slice);

// The functor from the category of the member family to the internal
// category: identity on objects, graph formation on arrows.
FunctorData iso_functor(const VSlice& slice, std::size_t cap = 1u << 16);

// Builds both categories, checks the functor equations, and checks that the
// arrow map is a bijection of equality classes.
CheckReport check_main_iso(const VSlice& slice, std::size_t cap = 1u << 16);

// ---------------------------------------------------------------------------
// The axiom suite

struct AxiomSuiteConfig {
  std::size_t rank = 2;
  std::size_t breadth = 2;
  AtomTable atoms;
  std::size_t omega_steps = 3;
  std::size_t enum_cap = 20000;

  // Fault-injection points for testing the checker itself; the defaults are
  // the real operations.
  std::function<bool(const VSet&, const VSet&, const AtomTable&)> member_hook;
  std::function<bool(const VSet&, const VSet&, const AtomTable&)> equal_hook;
};

// Enumerates every structurally distinct set of bounded rank and breadth
// over the table (plus one atom per identifier); throws SizeCapError when
// the pool exceeds cap.
std::vector<VSet> enumerate_vsets(std::size_t rank, std::size_t breadth,
                                  const AtomTable& table, std::size_t cap = 20000);

// Runs the axiom checks over the bounded enumeration and reports one entry
// per axiom.
CheckReport run_axiom_suite(const AxiomSuiteConfig& config);

}  // namespace setcat

#endif  // SETCAT_CZF_HPP_
