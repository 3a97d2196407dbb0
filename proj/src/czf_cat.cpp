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
#include <map>

#include "setcat/czf.hpp"

namespace setcat {

namespace {

// The slice as a setoid under set equality, labelled with canonical forms.
FinSetoid slice_setoid(const VSlice& slice) {
  std::vector<std::size_t> ids(slice.objects.size());
  std::vector<std::string> labels(slice.objects.size());
  std::map<std::string, std::size_t> classes;
  for (std::size_t i = 0; i < slice.objects.size(); ++i) {
    labels[i] = canonical_text(slice.objects[i], slice.table);
    auto [it, fresh] = classes.emplace(labels[i], classes.size());
    ids[i] = it->second;
  }
  return FinSetoid::from_classes(ids, std::move(labels));
}

std::string arrow_key(Elem src, Elem dst, const std::vector<Elem>& raw) {
  std::string k = std::to_string(src) + ">" + std::to_string(dst) + ":";
  for (Elem v : raw) k += std::to_string(v) + ",";
  return k;
}

}  // namespace

bool is_arrow_set(const VSet& w, const AtomTable& table) {
  if (w.is_atom()) return false;
  try {
    auto [ends, graph] = kproj(w, table);
    auto [a, b] = kproj(ends, table);
    if (a.is_atom() || b.is_atom() || graph.is_atom()) return false;
    return is_total_functional(graph, a, b, table);
  } catch (const NotAPairError&) {
    return false;
  }
}

VSet compose_graphs(const VSet& z1, const VSet& z2, const AtomTable& table) {
  if (z1.is_atom() || z2.is_atom()) throw NotASetError("graph composition needs sets");
  std::vector<VSet> members;
  for (const VSet& t1 : z1.children()) {
    auto [x, y1] = kproj(t1, table);
    for (const VSet& t2 : z2.children()) {
      auto [y2, z] = kproj(t2, table);
      if (vset_equal(y1, y2, table)) members.push_back(kpair(x, z));
    }
  }
  return VSet::sup(std::move(members));
}

VSet compose_arrow_sets(const VSet& w1, const VSet& w2, const AtomTable& table) {
  auto [ends1, graph1] = kproj(w1, table);
  auto [a, b1] = kproj(ends1, table);
  auto [ends2, graph2] = kproj(w2, table);
  auto [b2, c] = kproj(ends2, table);
  if (!vset_equal(b1, b2, table))
    throw NotComposableError("middle objects differ: " + canonical_text(b1, table) +
                             " vs " + canonical_text(b2, table));
  return kpair(kpair(a, c), compose_graphs(graph1, graph2, table));
}

Elem VCategory::arrow_index(Elem src, Elem dst, const std::vector<Elem>& raw) const {
  auto it = arrow_lookup.find(arrow_key(src, dst, raw));
  if (it == arrow_lookup.end())
    throw InputError("no arrow with the requested source, target and map");
  return it->second;
}

VCategory internal_set_category(const VSlice& slice, std::size_t cap) {
  for (const VSet& u : slice.objects)
    if (u.is_atom()) throw NotASetError("category objects must be sets");

  VCategory vc;
  vc.slice = slice;
  const AtomTable& table = slice.table;
  FinCategory& cat = vc.cat;
  cat.objects = slice_setoid(slice);

  std::vector<FinSetoid> position_setoids;
  position_setoids.reserve(slice.objects.size());
  for (const VSet& u : slice.objects)
    position_setoids.push_back(member_setoid(u, table));

  // C1: every <<a,b>, graph> with the graph a member of function_set(a, b).
  std::vector<std::size_t> arrow_ids;
  std::vector<std::string> arrow_labels;
  {
    std::map<std::string, std::size_t> classes;
    for (Elem a = 0; a < slice.objects.size(); ++a)
      for (Elem b = 0; b < slice.objects.size(); ++b)
        for (ExtFun& h :
             enumerate_extfuns(position_setoids[a], position_setoids[b], cap)) {
          if (vc.arrow_codes.size() >= cap)
            throw SizeCapError("arrow carrier too large", vc.arrow_codes.size() + 1,
                               cap);
          VSet graph = function_graph(slice.objects[a], slice.objects[b], h, table);
          VSet code = kpair(kpair(slice.objects[a], slice.objects[b]), graph);
          std::string text = canonical_text(code, table);
          auto [it, fresh] = classes.emplace(text, classes.size());
          arrow_ids.push_back(it->second);
          arrow_labels.push_back(std::move(text));
          vc.arrow_lookup.emplace(arrow_key(a, b, h.raw()), vc.arrow_codes.size());
          vc.arrow_codes.push_back(std::move(code));
          vc.arrow_ends.emplace_back(a, b);
          vc.arrow_maps.push_back(std::move(h));
        }
    cat.arrows = FinSetoid::from_classes(arrow_ids, std::move(arrow_labels));
  }

  // Graph lookup per (source, target) block, for locating composites.
  std::map<std::string, Elem> graph_lookup;
  for (Elem i = 0; i < vc.arrow_codes.size(); ++i) {
    VSet graph = kproj(vc.arrow_codes[i], table).second;
    graph_lookup.emplace(std::to_string(vc.arrow_ends[i].first) + ">" +
                             std::to_string(vc.arrow_ends[i].second) + ":" +
                             canonical_text(graph, table),
                         i);
  }

  // C2: every composable pair, compared through the set code <u, v>.
  std::vector<std::size_t> pair_ids;
  std::vector<std::string> pair_labels;
  {
    std::map<std::string, std::size_t> classes;
    for (Elem i = 0; i < vc.arrow_codes.size(); ++i)
      for (Elem j = 0; j < vc.arrow_codes.size(); ++j) {
        if (!cat.objects.eq(vc.arrow_ends[i].second, vc.arrow_ends[j].first)) continue;
        if (vc.composable.size() >= cap)
          throw SizeCapError("composable-pair carrier too large",
                             vc.composable.size() + 1, cap);
        std::string text =
            canonical_text(kpair(vc.arrow_codes[i], vc.arrow_codes[j]), table);
        auto [it, fresh] = classes.emplace(std::move(text), classes.size());
        pair_ids.push_back(it->second);
        vc.composable.emplace_back(i, j);
      }
    cat.pairs = FinSetoid::from_classes(pair_ids);
  }

  // Operations.
  {
    std::vector<Elem> id_map(slice.objects.size());
    for (Elem a = 0; a < slice.objects.size(); ++a) {
      std::vector<Elem> ident(position_setoids[a].size());
      for (Elem t = 0; t < ident.size(); ++t) ident[t] = t;
      id_map[a] = vc.arrow_index(a, a, ident);
    }
    cat.id = ExtFun(cat.objects, cat.arrows, std::move(id_map));
  }
  {
    std::vector<Elem> dom_map(vc.arrow_codes.size()), cod_map(vc.arrow_codes.size());
    for (Elem i = 0; i < vc.arrow_codes.size(); ++i) {
      dom_map[i] = vc.arrow_ends[i].first;
      cod_map[i] = vc.arrow_ends[i].second;
    }
    cat.dom = ExtFun(cat.arrows, cat.objects, std::move(dom_map));
    cat.cod = ExtFun(cat.arrows, cat.objects, std::move(cod_map));
  }
  {
    std::vector<Elem> fst_map(vc.composable.size()), snd_map(vc.composable.size()),
        cmp_map(vc.composable.size());
    for (Elem u = 0; u < vc.composable.size(); ++u) {
      auto [i, j] = vc.composable[u];
      fst_map[u] = i;
      snd_map[u] = j;
      VSet gi = kproj(vc.arrow_codes[i], table).second;
      VSet gj = kproj(vc.arrow_codes[j], table).second;
      VSet composite = compose_graphs(gi, gj, table);
      auto it = graph_lookup.find(std::to_string(vc.arrow_ends[i].first) + ">" +
                                  std::to_string(vc.arrow_ends[j].second) + ":" +
                                  canonical_text(composite, table));
      if (it == graph_lookup.end())
        throw InputError("internal: composite graph not an arrow of the slice");
      cmp_map[u] = it->second;
    }
    cat.fst = ExtFun(cat.pairs, cat.arrows, std::move(fst_map));
    cat.snd = ExtFun(cat.pairs, cat.arrows, std::move(snd_map));
    cat.cmp = ExtFun(cat.pairs, cat.arrows, std::move(cmp_map));
  }

  return vc;
}

SetoidFamily member_family(const VSlice& slice) {
  const AtomTable& table = slice.table;
  FinSetoid index = slice_setoid(slice);
  std::vector<FinSetoid> fibers;
  fibers.reserve(slice.objects.size());
  for (const VSet& u : slice.objects) fibers.push_back(member_setoid(u, table));

  return SetoidFamily::make(
      std::move(index), fibers, [&](Elem u, Elem v) {
        const VSet& from = slice.objects[u];
        const VSet& to = slice.objects[v];
        // position x goes to the least position of `to` holding an equal set;
        // equality of the two objects guarantees one exists
        std::vector<Elem> raw(from.children().size());
        for (Elem x = 0; x < from.children().size(); ++x) {
          bool found = false;
          for (Elem y = 0; y < to.children().size() && !found; ++y)
            if (vset_equal(from.children()[x], to.children()[y], table)) {
              raw[x] = y;
              found = true;
            }
          if (!found)
            throw InputError("internal: member family transport has no target");
        }
        return ExtFun(fibers[u], fibers[v], std::move(raw));
      });
}

FunctorData iso_functor(const VSlice& slice, std::size_t cap) {
  SetoidFamily family = member_family(slice);
  FamilyCategory from = family_category(family, cap, cap);
  VCategory to = internal_set_category(slice, cap);

  FunctorData fd;
  fd.source = from.cat;
  fd.target = to.cat;

  {
    std::vector<Elem> raw(from.cat.objects.size());
    for (Elem x = 0; x < raw.size(); ++x) raw[x] = x;
    fd.on_objects = ExtFun(from.cat.objects, to.cat.objects, std::move(raw));
  }
  {
    std::vector<Elem> raw(from.arrows.size());
    for (Elem i = 0; i < from.arrows.size(); ++i) {
      const CatArrow& a = from.arrows[i];
      raw[i] = to.arrow_index(a.src, a.dst, a.map.raw());
    }
    fd.on_arrows = ExtFun(from.cat.arrows, to.cat.arrows, std::move(raw));
  }
  {
    std::map<std::pair<Elem, Elem>, Elem> to_pairs;
    for (Elem u = 0; u < to.composable.size(); ++u)
      to_pairs.emplace(to.composable[u], u);
    std::vector<Elem> raw(from.composable.size());
    for (Elem u = 0; u < from.composable.size(); ++u) {
      auto [i, j] = from.composable[u];
      auto it = to_pairs.find(std::make_pair(fd.on_arrows(i), fd.on_arrows(j)));
      if (it == to_pairs.end())
        throw InputError("internal: composable pair missing in the set category");
      raw[u] = it->second;
    }
    fd.on_pairs = ExtFun(from.cat.pairs, to.cat.pairs, std::move(raw));
  }
  return fd;
}

CheckReport check_main_iso(const VSlice& slice, std::size_t cap) {
  CheckReport report;
  FunctorData fd = iso_functor(slice, cap);

  report.add("object map is an isomorphism of setoids",
             fd.on_objects.dom().same_structure(fd.on_objects.cod()));

  const FinSetoid& ca = fd.source.arrows;
  const FinSetoid& va = fd.target.arrows;
  bool well_defined = true, injective = true;
  std::string wd_witness, inj_witness;
  for (Elem i = 0; i < ca.size(); ++i)
    for (Elem j = i + 1; j < ca.size(); ++j) {
      bool left = ca.eq(i, j);
      bool right = va.eq(fd.on_arrows(i), fd.on_arrows(j));
      if (left && !right && well_defined) {
        well_defined = false;
        wd_witness = ca.label(i) + " vs " + ca.label(j);
      }
      if (right && !left && injective) {
        injective = false;
        inj_witness = ca.label(i) + " vs " + ca.label(j);
      }
    }
  report.add("arrow map well-defined on equality classes", well_defined, wd_witness);
  report.add("arrow map injective on equality classes", injective, inj_witness);

  std::vector<bool> hit(va.class_count(), false);
  for (Elem i = 0; i < ca.size(); ++i) hit[va.class_id(fd.on_arrows(i))] = true;
  bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  report.add("arrow map surjective on equality classes (" +
                 std::to_string(ca.class_count()) + " -> " +
                 std::to_string(va.class_count()) + ")",
             surjective && ca.class_count() == va.class_count());

  for (CheckEntry& e : check_functor(fd).entries) report.entries.push_back(std::move(e));
  return report;
}

}  // namespace setcat
