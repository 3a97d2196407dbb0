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

#include <algorithm>
#include <set>

#include "setcat/czf.hpp"

namespace setcat {

VSet pair_set(const VSet& x, const VSet& y) { return VSet::sup({x, y}); }

VSet union_set(const VSet& x) {
  if (x.is_atom()) throw NotASetError("union of an atom: atoms have no elements");
  std::vector<VSet> members;
  for (const VSet& y : x.children()) {
    if (y.is_atom()) continue;  // an atom contributes no elements
    for (const VSet& z : y.children()) members.push_back(z);
  }
  return VSet::sup(std::move(members));
}

VSet succ_set(const VSet& y) { return pair_set(y, VSet::sup({y})); }

VSet kpair(const VSet& x, const VSet& y) {
  return VSet::sup({VSet::sup({x}), VSet::sup({x, y})});
}

std::pair<VSet, VSet> kproj(const VSet& z, const AtomTable& table) {
  if (z.is_atom() || z.children().empty())
    throw NotAPairError("not a pair: " + canonical_text(z, table));

  // Gather the distinct member classes of z; a pair has one or two.
  std::vector<VSet> classes;
  for (const VSet& child : z.children()) {
    bool seen = false;
    for (const VSet& c : classes)
      if (vset_equal(child, c, table)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(child);
  }

  auto decode = [&](const VSet& singleton, const VSet& doubleton)
      -> std::pair<VSet, VSet> {
    if (singleton.is_atom() || doubleton.is_atom())
      throw NotAPairError("not a pair: " + canonical_text(z, table));
    if (singleton.children().empty())
      throw NotAPairError("not a pair: " + canonical_text(z, table));
    VSet first = singleton.children().front();
    for (const VSet& c : singleton.children())
      if (!vset_equal(c, first, table))
        throw NotAPairError("not a pair: " + canonical_text(z, table));
    // the second component is the doubleton member not equal to the first,
    // or the first again in the degenerate case
    VSet second = first;
    bool found_first = false;
    for (const VSet& c : doubleton.children()) {
      if (vset_equal(c, first, table))
        found_first = true;
      else
        second = c;
    }
    if (!found_first) throw NotAPairError("not a pair: " + canonical_text(z, table));
    for (const VSet& c : doubleton.children())
      if (!vset_equal(c, first, table) && !vset_equal(c, second, table))
        throw NotAPairError("not a pair: " + canonical_text(z, table));
    return {std::move(first), std::move(second)};
  };

  std::pair<VSet, VSet> out = [&] {
    if (classes.size() == 1) return decode(classes[0], classes[0]);
    if (classes.size() == 2) {
      // one class must be the singleton {x}, the other {x, y}
      for (int flip = 0; flip < 2; ++flip) {
        const VSet& s = classes[flip];
        const VSet& d = classes[1 - flip];
        try {
          auto candidate = decode(s, d);
          if (vset_equal(kpair(candidate.first, candidate.second), z, table))
            return candidate;
        } catch (const NotAPairError&) {
        }
      }
    }
    throw NotAPairError("not a pair: " + canonical_text(z, table));
  }();

  if (!vset_equal(kpair(out.first, out.second), z, table))
    throw NotAPairError("not a pair: " + canonical_text(z, table));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

bool eval_formula(const Formula& phi, const Env& env, const AtomTable& table) {
  struct Visitor {
    const Env& env;
    const AtomTable& table;

    bool operator()(const Formula::Truth&) const { return true; }
    bool operator()(const Formula::Falsity&) const { return false; }
    bool operator()(const Formula::Eq& f) const {
      return vset_equal(eval_term(*f.lhs, env, table), eval_term(*f.rhs, env, table),
                        table);
    }
    bool operator()(const Formula::Mem& f) const {
      return vset_member(eval_term(*f.lhs, env, table), eval_term(*f.rhs, env, table),
                         table);
    }
    bool operator()(const Formula::IsSet& f) const {
      return eval_term(*f.arg, env, table).is_sup();
    }
    bool operator()(const Formula::IsAtom& f) const {
      return eval_term(*f.arg, env, table).is_atom();
    }
    bool operator()(const Formula::Not& f) const {
      return !eval_formula(*f.arg, env, table);
    }
    bool operator()(const Formula::And& f) const {
      return eval_formula(*f.lhs, env, table) && eval_formula(*f.rhs, env, table);
    }
    bool operator()(const Formula::Or& f) const {
      return eval_formula(*f.lhs, env, table) || eval_formula(*f.rhs, env, table);
    }
    bool operator()(const Formula::Implies& f) const {
      return !eval_formula(*f.lhs, env, table) || eval_formula(*f.rhs, env, table);
    }
    bool operator()(const Formula::AllIn& f) const {
      VSet bound = eval_term(*f.bound, env, table);
      if (bound.is_atom()) return true;  // atoms have no members
      for (const VSet& x : bound.children())
        if (!eval_formula(*f.body, env.with(f.var, x), table)) return false;
      return true;
    }
    bool operator()(const Formula::ExIn& f) const {
      VSet bound = eval_term(*f.bound, env, table);
      if (bound.is_atom()) return false;
      for (const VSet& x : bound.children())
        if (eval_formula(*f.body, env.with(f.var, x), table)) return true;
      return false;
    }
  };
  return std::visit(Visitor{env, table}, phi.node);
}

VSet eval_term(const Term& t, const Env& env, const AtomTable& table,
               std::size_t cap) {
  struct Visitor {
    const Env& env;
    const AtomTable& table;
    std::size_t cap;

    VSet operator()(const Term::Var& n) const { return env.lookup(n.name); }
    VSet operator()(const Term::AtomLit& n) const { return VSet::atom(n.id, table); }
    VSet operator()(const Term::SetLit& n) const {
      std::vector<VSet> members;
      members.reserve(n.elems.size());
      for (const TermPtr& e : n.elems)
        members.push_back(eval_term(*e, env, table, cap));
      return VSet::sup(std::move(members));
    }
    VSet operator()(const Term::PairLit& n) const {
      return kpair(eval_term(*n.first, env, table, cap),
                   eval_term(*n.second, env, table, cap));
    }
    VSet operator()(const Term::UnionOf& n) const {
      return union_set(eval_term(*n.arg, env, table, cap));
    }
    VSet operator()(const Term::Sep& n) const {
      return separation(eval_term(*n.bound, env, table, cap), n.var, *n.body, env,
                        table);
    }
    VSet operator()(const Term::FuncSpace& n) const {
      return function_set(eval_term(*n.dom, env, table, cap),
                          eval_term(*n.cod, env, table, cap), table, cap);
    }
    VSet operator()(const Term::SuccOf& n) const {
      return succ_set(eval_term(*n.arg, env, table, cap));
    }
    VSet operator()(const Term::OmegaApprox& n) const { return omega_approx(n.steps); }
    VSet operator()(const Term::AtomsSet&) const { return atoms_set(table); }
  };
  return std::visit(Visitor{env, table, cap}, t.node);
}

VSet separation(const VSet& u, const std::string& var, const Formula& phi,
                const Env& env, const AtomTable& table) {
  if (u.is_atom()) throw NotASetError("separation over an atom");
  std::vector<VSet> members;
  for (const VSet& x : u.children())
    if (eval_formula(phi, env.with(var, x), table)) members.push_back(x);
  return VSet::sup(std::move(members));
}

// ---------------------------------------------------------------------------
// Function sets

bool is_total_functional(const VSet& z, const VSet& u, const VSet& v,
                         const AtomTable& table) {
  if (z.is_atom() || u.is_atom() || v.is_atom())
    throw NotASetError("total-functional test needs sets");

  // every member of z is a pair <x,y> with x in u, y in v
  std::vector<std::pair<VSet, VSet>> decoded;
  for (const VSet& t : z.children()) {
    try {
      auto [x, y] = kproj(t, table);
      if (!vset_member(x, u, table) || !vset_member(y, v, table)) return false;
      decoded.emplace_back(std::move(x), std::move(y));
    } catch (const NotAPairError&) {
      return false;
    }
  }
  // every member of u is paired with something
  for (const VSet& x : u.children()) {
    bool hit = false;
    for (const auto& [px, py] : decoded)
      if (vset_equal(px, x, table)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  // single-valued
  for (const auto& [px, py] : decoded)
    for (const auto& [qx, qy] : decoded)
      if (vset_equal(px, qx, table) && !vset_equal(py, qy, table)) return false;
  return true;
}

FinSetoid member_setoid(const VSet& u, const AtomTable& table) {
  if (u.is_atom()) throw NotASetError("member setoid of an atom");
  const std::vector<VSet>& kids = u.children();
  std::vector<std::size_t> ids(kids.size());
  std::vector<std::string> reps;  // canonical text per class
  std::vector<std::string> labels(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    labels[i] = canonical_text(kids[i], table);
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c)
      if (reps[c] == labels[i]) {
        ids[i] = c;
        placed = true;
      }
    if (!placed) {
      ids[i] = reps.size();
      reps.push_back(labels[i]);
    }
  }
  return FinSetoid::from_classes(ids, std::move(labels));
}

VSet function_graph(const VSet& u, const VSet& v, const ExtFun& h,
                    const AtomTable& table) {
  if (u.is_atom() || v.is_atom()) throw NotASetError("function graph needs sets");
  (void)table;
  std::vector<VSet> pairs;
  pairs.reserve(u.children().size());
  for (Elem x = 0; x < u.children().size(); ++x)
    pairs.push_back(kpair(u.children()[x], v.children()[h(x)]));
  return VSet::sup(std::move(pairs));
}

VSet function_set(const VSet& u, const VSet& v, const AtomTable& table,
                  std::size_t cap) {
  FinSetoid ru = member_setoid(u, table);
  FinSetoid rv = member_setoid(v, table);
  std::vector<VSet> graphs;
  for (const ExtFun& h : enumerate_extfuns(ru, rv, cap))
    graphs.push_back(function_graph(u, v, h, table));
  return VSet::sup(std::move(graphs));
}

CheckReport check_funcset_bijection(const VSet& u, const VSet& v,
                                    const AtomTable& table) {
  CheckReport report;
  FinSetoid ru = member_setoid(u, table);
  FinSetoid rv = member_setoid(v, table);
  std::vector<ExtFun> maps = enumerate_extfuns(ru, rv);
  std::vector<std::string> graph_texts;
  graph_texts.reserve(maps.size());
  for (const ExtFun& h : maps)
    graph_texts.push_back(canonical_text(function_graph(u, v, h, table), table));

  bool well_defined = true, injective = true;
  std::string wd_witness, inj_witness;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      bool graphs_equal = graph_texts[i] == graph_texts[j];
      bool maps_equal = ext_equal(maps[i], maps[j]);
      if (graphs_equal && !maps_equal && well_defined) {
        well_defined = false;
        wd_witness = "positions " + std::to_string(i) + ", " + std::to_string(j);
      }
      if (maps_equal && !graphs_equal && injective) {
        injective = false;
        inj_witness = "maps " + std::to_string(i) + ", " + std::to_string(j);
      }
    }

  std::set<std::string> graph_classes(graph_texts.begin(), graph_texts.end());
  std::size_t map_classes = extfun_setoid(maps).class_count();

  report.add("function-position map well-defined on classes", well_defined, wd_witness);
  report.add("function-position map injective on classes", injective, inj_witness);
  report.add("function-position map surjective (" + std::to_string(graph_classes.size()) +
                 " graph classes, " + std::to_string(map_classes) + " map classes)",
             graph_classes.size() == map_classes);
  return report;
}

// ---------------------------------------------------------------------------
// Collection witnesses, atoms, infinity

VSet subset_collection_set(const VSet& a, const VSet& b, const AtomTable& table,
                           std::size_t cap) {
  if (a.is_atom() || b.is_atom())
    throw NotASetError("subset collection witness needs sets");
  const std::vector<VSet>& kids = b.children();
  if (kids.size() >= 63 || (std::size_t{1} << kids.size()) > cap)
    throw SizeCapError("subset collection witness too large",
                       kids.size() >= 63 ? SIZE_MAX : (std::size_t{1} << kids.size()),
                       cap);

  std::vector<VSet> subsets;
  std::set<std::string> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << kids.size()); ++mask) {
    std::vector<VSet> members;
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(kids[i]);
    VSet s = VSet::sup(std::move(members));
    if (seen.insert(canonical_text(s, table)).second) subsets.push_back(std::move(s));
  }
  return VSet::sup(std::move(subsets));
}

VSet collect_image(const VSet& a, const std::function<VSet(const VSet&)>& h) {
  if (a.is_atom()) throw NotASetError("collection over an atom");
  std::vector<VSet> members;
  members.reserve(a.children().size());
  for (const VSet& x : a.children()) members.push_back(h(x));
  return VSet::sup(std::move(members));
}

VSet atoms_set(const AtomTable& table) {
  std::vector<VSet> members;
  members.reserve(table.class_reps().size());
  for (const std::string& rep : table.class_reps())
    members.push_back(VSet::atom(rep, table));
  return VSet::sup(std::move(members));
}

VSet omega_approx(std::size_t n) {
  std::vector<VSet> members;
  VSet current;  // the empty set
  members.push_back(current);
  for (std::size_t i = 0; i < n; ++i) {
    current = succ_set(current);
    members.push_back(current);
  }
  return VSet::sup(std::move(members));
}

}  // namespace setcat
