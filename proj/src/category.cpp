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

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

namespace setcat {

namespace {

std::uint64_t pack(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

void require_shapes(const FinCategory& c) {
  bool ok = c.id.dom().same_structure(c.objects) && c.id.cod().same_structure(c.arrows) &&
            c.dom.dom().same_structure(c.arrows) && c.dom.cod().same_structure(c.objects) &&
            c.cod.dom().same_structure(c.arrows) && c.cod.cod().same_structure(c.objects) &&
            c.cmp.dom().same_structure(c.pairs) && c.cmp.cod().same_structure(c.arrows) &&
            c.fst.dom().same_structure(c.pairs) && c.fst.cod().same_structure(c.arrows) &&
            c.snd.dom().same_structure(c.pairs) && c.snd.cod().same_structure(c.arrows);
  if (!ok) throw InputError("category operations have wrong signatures");
}

std::string pair_witness(const FinCategory& c, Elem u) {
  return "u=(" + c.arrows.label(c.fst(u)) + " , " + c.arrows.label(c.snd(u)) + ")";
}

}  // namespace

CheckReport check_category(const FinCategory& c) {
  require_shapes(c);
  CheckReport report;

  // Axioms whose statements only mention equality are invariant under
  // replacing quantified elements by equal ones (the six operations are
  // extensional by construction), so the searches below may run over class
  // representatives where that saves work; 1-4.5, 7 and 8 sweep the full
  // carriers anyway.

  {  // 1. dom(id(x)) = x
    bool ok = true;
    std::string witness;
    for (Elem x = 0; x < c.objects.size() && ok; ++x)
      if (!c.objects.eq(c.dom(c.id(x)), x)) {
        ok = false;
        witness = "x=" + c.objects.label(x);
      }
    report.add("axiom 1 (dom of identity)", ok, witness);
  }
  {  // 2. cod(id(x)) = x
    bool ok = true;
    std::string witness;
    for (Elem x = 0; x < c.objects.size() && ok; ++x)
      if (!c.objects.eq(c.cod(c.id(x)), x)) {
        ok = false;
        witness = "x=" + c.objects.label(x);
      }
    report.add("axiom 2 (cod of identity)", ok, witness);
  }
  {  // 3. dom(cmp(u)) = dom(fst(u))
    bool ok = true;
    std::string witness;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u)
      if (!c.objects.eq(c.dom(c.cmp(u)), c.dom(c.fst(u)))) {
        ok = false;
        witness = pair_witness(c, u);
      }
    report.add("axiom 3 (dom of composite)", ok, witness);
  }
  {  // 4. cod(cmp(u)) = cod(snd(u))
    bool ok = true;
    std::string witness;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u)
      if (!c.objects.eq(c.cod(c.cmp(u)), c.cod(c.snd(u)))) {
        ok = false;
        witness = pair_witness(c, u);
      }
    report.add("axiom 4 (cod of composite)", ok, witness);
  }
  {  // 4.5. cod(fst(u)) = dom(snd(u))
    bool ok = true;
    std::string witness;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u)
      if (!c.objects.eq(c.cod(c.fst(u)), c.dom(c.snd(u)))) {
        ok = false;
        witness = pair_witness(c, u);
      }
    report.add("axiom 4.5 (composability boundary)", ok, witness);
  }
  {  // 5. fst(u) = fst(v), snd(u) = snd(v) => u = v
    bool ok = true;
    std::string witness;
    std::unordered_map<std::uint64_t, Elem> first;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u) {
      auto key = pack(c.arrows.class_id(c.fst(u)), c.arrows.class_id(c.snd(u)));
      auto [it, fresh] = first.emplace(key, u);
      if (!fresh && !c.pairs.eq(it->second, u)) {
        ok = false;
        witness = pair_witness(c, it->second) + " vs " + pair_witness(c, u);
      }
    }
    report.add("axiom 5 (pairs determined by components)", ok, witness);
  }
  {  // 6. dom(f) = cod(g) => some u has snd(u) = f, fst(u) = g
    bool ok = true;
    std::string witness;
    std::unordered_set<std::uint64_t> buckets;
    for (Elem u = 0; u < c.pairs.size(); ++u)
      buckets.insert(pack(c.arrows.class_id(c.fst(u)), c.arrows.class_id(c.snd(u))));
    for (Elem f : c.arrows.class_reps()) {
      for (Elem g : c.arrows.class_reps()) {
        if (!c.objects.eq(c.dom(f), c.cod(g))) continue;
        if (!buckets.count(pack(c.arrows.class_id(g), c.arrows.class_id(f)))) {
          ok = false;
          witness = "f=" + c.arrows.label(f) + ", g=" + c.arrows.label(g);
          break;
        }
      }
      if (!ok) break;
    }
    report.add("axiom 6 (composable pairs exist)", ok, witness);
  }

  std::unordered_set<std::size_t> id_classes;
  for (Elem x : c.objects.class_reps()) id_classes.insert(c.arrows.class_id(c.id(x)));

  {  // 7. fst(u) = id(y) => cmp(u) = snd(u)
    bool ok = true;
    std::string witness;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u)
      if (id_classes.count(c.arrows.class_id(c.fst(u))) &&
          !c.arrows.eq(c.cmp(u), c.snd(u))) {
        ok = false;
        witness = pair_witness(c, u);
      }
    report.add("axiom 7 (identity is left neutral)", ok, witness);
  }
  {  // 8. snd(u) = id(x) => cmp(u) = fst(u)
    bool ok = true;
    std::string witness;
    for (Elem u = 0; u < c.pairs.size() && ok; ++u)
      if (id_classes.count(c.arrows.class_id(c.snd(u))) &&
          !c.arrows.eq(c.cmp(u), c.fst(u))) {
        ok = false;
        witness = pair_witness(c, u);
      }
    report.add("axiom 8 (identity is right neutral)", ok, witness);
  }
  {  // 9. the associativity condition over composable pairs of pairs
    bool ok = true;
    std::string witness;
    std::unordered_map<std::size_t, std::vector<Elem>> by_fst;
    std::unordered_map<std::uint64_t, std::vector<Elem>> by_fst_snd;
    for (Elem u : c.pairs.class_reps()) {
      by_fst[c.arrows.class_id(c.fst(u))].push_back(u);
      by_fst_snd[pack(c.arrows.class_id(c.fst(u)), c.arrows.class_id(c.snd(u)))]
          .push_back(u);
    }
    for (Elem v : c.pairs.class_reps()) {
      auto it = by_fst.find(c.arrows.class_id(c.snd(v)));
      if (it == by_fst.end()) continue;
      for (Elem u : it->second) {
        // premises: fst(w)=fst(v), snd(w)=cmp(u), fst(z)=cmp(v), snd(z)=snd(u)
        auto wit = by_fst_snd.find(
            pack(c.arrows.class_id(c.fst(v)), c.arrows.class_id(c.cmp(u))));
        auto zit = by_fst_snd.find(
            pack(c.arrows.class_id(c.cmp(v)), c.arrows.class_id(c.snd(u))));
        if (wit == by_fst_snd.end() || zit == by_fst_snd.end()) continue;
        for (Elem w : wit->second) {
          for (Elem z : zit->second) {
            if (!c.arrows.eq(c.cmp(w), c.cmp(z))) {
              ok = false;
              witness = "w=" + pair_witness(c, w) + ", v=" + pair_witness(c, v) +
                        ", u=" + pair_witness(c, u) + ", z=" + pair_witness(c, z);
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    report.add("axiom 9 (associativity)", ok, witness);
  }

  return report;
}

bool comp_pred(const FinCategory& c, Elem f, Elem g, Elem h) {
  for (Elem u = 0; u < c.pairs.size(); ++u)
    if (c.arrows.eq(c.fst(u), g) && c.arrows.eq(c.snd(u), f) &&
        c.arrows.eq(c.cmp(u), h))
      return true;
  return false;
}

CheckReport check_functor(const FunctorData& fd) {
  const FinCategory& s = fd.source;
  const FinCategory& t = fd.target;
  bool ok = fd.on_objects.dom().same_structure(s.objects) &&
            fd.on_objects.cod().same_structure(t.objects) &&
            fd.on_arrows.dom().same_structure(s.arrows) &&
            fd.on_arrows.cod().same_structure(t.arrows) &&
            fd.on_pairs.dom().same_structure(s.pairs) &&
            fd.on_pairs.cod().same_structure(t.pairs);
  if (!ok) throw SignatureMismatchError("functor components have wrong signatures");

  CheckReport report;
  const ExtFun& f0 = fd.on_objects;
  const ExtFun& f1 = fd.on_arrows;
  const ExtFun& f2 = fd.on_pairs;

  {
    bool pass = true;
    std::string witness;
    for (Elem x = 0; x < s.objects.size() && pass; ++x)
      if (!t.arrows.eq(f1(s.id(x)), t.id(f0(x)))) {
        pass = false;
        witness = "x=" + s.objects.label(x);
      }
    report.add("functor equation (id)", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (Elem h = 0; h < s.arrows.size() && pass; ++h)
      if (!t.objects.eq(f0(s.dom(h)), t.dom(f1(h)))) {
        pass = false;
        witness = "h=" + s.arrows.label(h);
      }
    report.add("functor equation (dom)", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (Elem h = 0; h < s.arrows.size() && pass; ++h)
      if (!t.objects.eq(f0(s.cod(h)), t.cod(f1(h)))) {
        pass = false;
        witness = "h=" + s.arrows.label(h);
      }
    report.add("functor equation (cod)", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (Elem u = 0; u < s.pairs.size() && pass; ++u)
      if (!t.arrows.eq(f1(s.fst(u)), t.fst(f2(u)))) {
        pass = false;
        witness = pair_witness(s, u);
      }
    report.add("functor equation (fst)", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (Elem u = 0; u < s.pairs.size() && pass; ++u)
      if (!t.arrows.eq(f1(s.snd(u)), t.snd(f2(u)))) {
        pass = false;
        witness = pair_witness(s, u);
      }
    report.add("functor equation (snd)", pass, witness);
  }
  {
    bool pass = true;
    std::string witness;
    for (Elem u = 0; u < s.pairs.size() && pass; ++u)
      if (!t.arrows.eq(f1(s.cmp(u)), t.cmp(f2(u)))) {
        pass = false;
        witness = pair_witness(s, u);
      }
    report.add("functor equation (cmp)", pass, witness);
  }

  return report;
}

// ---------------------------------------------------------------------------
// Composer and arrow predicates

Composer::Composer(const FinCategory& c) : cat_(&c) {
  for (Elem u = 0; u < c.pairs.size(); ++u)
    bucket_.emplace(pack(c.arrows.class_id(c.fst(u)), c.arrows.class_id(c.snd(u))), u);
}

std::optional<Elem> Composer::compose(Elem f, Elem g) const {
  auto it = bucket_.find(pack(cat_->arrows.class_id(g), cat_->arrows.class_id(f)));
  if (it == bucket_.end()) return std::nullopt;
  return cat_->cmp(it->second);
}

bool is_element(const FinCategory& c, Elem arrow) {
  if (!c.terminal) throw MissingTerminalError();
  return c.objects.eq(c.dom(arrow), *c.terminal);
}

bool is_mono(const FinCategory& c, Elem arrow) {
  return is_mono(c, Composer(c), arrow);
}

bool is_onto(const FinCategory& c, Elem arrow) {
  return is_onto(c, Composer(c), arrow);
}

bool is_mono(const FinCategory& c, const Composer& comp, Elem arrow) {
  std::size_t dom_cls = c.objects.class_id(c.dom(arrow));
  // group parallel arrow representatives into arrow's domain by their domain
  std::unordered_map<std::size_t, std::vector<Elem>> parallel;
  for (Elem g : c.arrows.class_reps())
    if (c.objects.class_id(c.cod(g)) == dom_cls)
      parallel[c.objects.class_id(c.dom(g))].push_back(g);
  for (const auto& [u_cls, gs] : parallel) {
    for (Elem g : gs) {
      for (Elem h : gs) {
        auto fg = comp.compose(arrow, g);
        auto fh = comp.compose(arrow, h);
        if (!fg || !fh) continue;
        if (c.arrows.eq(*fg, *fh) && !c.arrows.eq(g, h)) return false;
      }
    }
  }
  return true;
}

bool is_onto(const FinCategory& c, const Composer& comp, Elem arrow) {
  if (!c.terminal) throw MissingTerminalError();
  std::size_t term_cls = c.objects.class_id(*c.terminal);
  std::size_t dom_cls = c.objects.class_id(c.dom(arrow));
  std::size_t cod_cls = c.objects.class_id(c.cod(arrow));
  std::vector<Elem> xs;
  for (Elem x : c.arrows.class_reps())
    if (c.objects.class_id(c.dom(x)) == term_cls &&
        c.objects.class_id(c.cod(x)) == dom_cls)
      xs.push_back(x);
  for (Elem y : c.arrows.class_reps()) {
    if (c.objects.class_id(c.dom(y)) != term_cls ||
        c.objects.class_id(c.cod(y)) != cod_cls)
      continue;
    bool hit = false;
    for (Elem x : xs) {
      auto fx = comp.compose(arrow, x);
      if (fx && c.arrows.eq(*fx, y)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

CheckReport check_generator(const FinCategory& c, Elem candidate) {
  CheckReport report;
  Composer comp(c);
  std::size_t cand_cls = c.objects.class_id(candidate);

  {  // an arrow into the candidate exists from every object
    bool ok = true;
    std::string witness;
    for (Elem x : c.objects.class_reps()) {
      bool found = false;
      for (Elem a = 0; a < c.arrows.size() && !found; ++a)
        if (c.objects.eq(c.dom(a), x) && c.objects.class_id(c.cod(a)) == cand_cls)
          found = true;
      if (!found) {
        ok = false;
        witness = "no arrow from " + c.objects.label(x);
        break;
      }
    }
    report.add("terminal: arrow from every object", ok, witness);
  }
  {  // and is unique up to arrow equality
    bool ok = true;
    std::string witness;
    const auto& reps = c.arrows.class_reps();
    for (std::size_t i = 0; i < reps.size() && ok; ++i) {
      if (c.objects.class_id(c.cod(reps[i])) != cand_cls) continue;
      for (std::size_t j = i + 1; j < reps.size() && ok; ++j) {
        if (c.objects.class_id(c.cod(reps[j])) != cand_cls) continue;
        if (!c.objects.eq(c.dom(reps[i]), c.dom(reps[j]))) continue;
        if (!c.arrows.eq(reps[i], reps[j])) {
          ok = false;
          witness = c.arrows.label(reps[i]) + " vs " + c.arrows.label(reps[j]);
        }
      }
    }
    report.add("terminal: arrow unique up to equality", ok, witness);
  }
  {  // every mono+onto arrow has a two-sided inverse
    bool ok = true;
    std::string witness;
    FinCategory with_term = c;
    with_term.terminal = candidate;
    Composer term_comp(with_term);
    for (Elem f : c.arrows.class_reps()) {
      if (!is_mono(with_term, term_comp, f) || !is_onto(with_term, term_comp, f))
        continue;
      bool inverted = false;
      for (Elem g : c.arrows.class_reps()) {
        if (!c.objects.eq(c.dom(g), c.cod(f)) || !c.objects.eq(c.cod(g), c.dom(f)))
          continue;
        auto fg = comp.compose(f, g);
        auto gf = comp.compose(g, f);
        if (fg && gf && c.arrows.eq(*fg, c.id(c.cod(f))) &&
            c.arrows.eq(*gf, c.id(c.dom(f)))) {
          inverted = true;
          break;
        }
      }
      if (!inverted) {
        ok = false;
        witness = "no inverse for " + c.arrows.label(f);
        break;
      }
    }
    report.add("strong generator: mono+onto arrows invertible", ok, witness);
  }

  return report;
}

// ---------------------------------------------------------------------------
// The category of a family

namespace {

std::string arrow_key(Elem src, Elem dst, const std::vector<Elem>& raw) {
  std::string k = std::to_string(src) + ">" + std::to_string(dst) + ":";
  for (Elem v : raw) k += std::to_string(v) + ",";
  return k;
}

}  // namespace

Elem FamilyCategory::arrow_index(Elem src, Elem dst, const std::vector<Elem>& raw) const {
  auto it = arrow_lookup.find(arrow_key(src, dst, raw));
  if (it == arrow_lookup.end())
    throw InputError("no arrow with the requested source, target and map");
  return it->second;
}

FamilyCategory family_category(const SetoidFamily& family, std::size_t arrow_cap,
                               std::size_t pair_cap) {
  FamilyCategory fc;
  fc.family = family;
  const FinSetoid& index = fc.family.index();

  FinCategory& cat = fc.cat;
  cat.objects = index;

  // C1 carrier: every extensional map between every ordered pair of fibers.
  for (Elem x = 0; x < index.size(); ++x)
    for (Elem y = 0; y < index.size(); ++y)
      for (ExtFun& f : enumerate_extfuns(fc.family.fiber(x), fc.family.fiber(y))) {
        if (fc.arrows.size() >= arrow_cap)
          throw SizeCapError("arrow carrier too large", fc.arrows.size() + 1, arrow_cap);
        fc.arrows.push_back(CatArrow{x, y, std::move(f)});
      }

  for (Elem i = 0; i < fc.arrows.size(); ++i) {
    const CatArrow& a = fc.arrows[i];
    fc.arrow_lookup.emplace(arrow_key(a.src, a.dst, a.map.raw()), i);
  }

  // Arrow equality: (x,y,f) ~ (u,v,g) iff the indices are equal pairwise and
  // the square with the canonical transports commutes.  Each arrow is keyed
  // by its transport-normalized map between the class-representative fibers;
  // two arrows are related exactly when their keys coincide.
  {
    std::map<std::string, std::size_t> classes;
    std::vector<std::size_t> ids;
    ids.reserve(fc.arrows.size());
    for (const CatArrow& a : fc.arrows) {
      Elem xr = index.class_reps()[index.class_id(a.src)];
      Elem yr = index.class_reps()[index.class_id(a.dst)];
      ExtFun norm = compose(fc.family.transport(a.dst, yr),
                            compose(a.map, fc.family.transport(xr, a.src)));
      std::string key = std::to_string(index.class_id(a.src)) + "|" +
                        std::to_string(index.class_id(a.dst)) + "|";
      for (Elem t : fc.family.fiber(xr).class_reps())
        key += std::to_string(fc.family.fiber(yr).class_id(norm(t))) + ",";
      auto [it, fresh] = classes.emplace(std::move(key), classes.size());
      ids.push_back(it->second);
    }
    std::vector<std::string> labels;
    if (fc.arrows.size() <= 10000) {
      labels.reserve(fc.arrows.size());
      for (const CatArrow& a : fc.arrows) {
        std::string text = "(" + index.label(a.src) + "->" + index.label(a.dst) + ";[";
        for (std::size_t k = 0; k < a.map.raw().size(); ++k) {
          if (k) text += " ";
          text += std::to_string(a.map.raw()[k]);
        }
        text += "])";
        labels.push_back(std::move(text));
      }
    }
    cat.arrows = FinSetoid::from_classes(ids, std::move(labels));
  }

  // C2 carrier: every pair of arrows with matching cod/dom, compared
  // componentwise.
  {
    std::vector<std::size_t> ids;
    for (Elem i = 0; i < fc.arrows.size(); ++i)
      for (Elem j = 0; j < fc.arrows.size(); ++j) {
        if (!index.eq(fc.arrows[i].dst, fc.arrows[j].src)) continue;
        if (fc.composable.size() >= pair_cap)
          throw SizeCapError("composable-pair carrier too large",
                             fc.composable.size() + 1, pair_cap);
        fc.composable.emplace_back(i, j);
      }
    ids.reserve(fc.composable.size());
    std::unordered_map<std::uint64_t, std::size_t> normalize;
    for (const auto& [i, j] : fc.composable) {
      auto key = pack(cat.arrows.class_id(i), cat.arrows.class_id(j));
      auto [it, fresh] = normalize.emplace(key, normalize.size());
      ids.push_back(it->second);
    }
    std::vector<std::string> labels;
    if (fc.composable.size() <= 10000) {
      labels.reserve(fc.composable.size());
      for (const auto& [i, j] : fc.composable)
        labels.push_back("<" + cat.arrows.label(i) + "," + cat.arrows.label(j) + ">");
    }
    cat.pairs = FinSetoid::from_classes(ids, std::move(labels));
  }

  // The six operations.
  {
    std::vector<Elem> id_map(index.size());
    for (Elem x = 0; x < index.size(); ++x) {
      std::vector<Elem> ident(fc.family.fiber(x).size());
      for (Elem t = 0; t < ident.size(); ++t) ident[t] = t;
      id_map[x] = fc.arrow_index(x, x, ident);
    }
    cat.id = ExtFun(cat.objects, cat.arrows, std::move(id_map));
  }
  {
    std::vector<Elem> dom_map(fc.arrows.size()), cod_map(fc.arrows.size());
    for (Elem i = 0; i < fc.arrows.size(); ++i) {
      dom_map[i] = fc.arrows[i].src;
      cod_map[i] = fc.arrows[i].dst;
    }
    cat.dom = ExtFun(cat.arrows, cat.objects, std::move(dom_map));
    cat.cod = ExtFun(cat.arrows, cat.objects, std::move(cod_map));
  }
  {
    std::vector<Elem> fst_map(fc.composable.size()), snd_map(fc.composable.size()),
        cmp_map(fc.composable.size());
    for (Elem u = 0; u < fc.composable.size(); ++u) {
      auto [i, j] = fc.composable[u];
      fst_map[u] = i;
      snd_map[u] = j;
      const CatArrow& f = fc.arrows[i];
      const CatArrow& g = fc.arrows[j];
      const ExtFun& hop = fc.family.transport(f.dst, g.src);
      std::vector<Elem> raw(f.map.dom().size());
      for (Elem t = 0; t < raw.size(); ++t) raw[t] = g.map(hop(f.map(t)));
      cmp_map[u] = fc.arrow_index(f.src, g.dst, raw);
    }
    cat.fst = ExtFun(cat.pairs, cat.arrows, std::move(fst_map));
    cat.snd = ExtFun(cat.pairs, cat.arrows, std::move(snd_map));
    cat.cmp = ExtFun(cat.pairs, cat.arrows, std::move(cmp_map));
  }

  return fc;
}

}  // namespace setcat
