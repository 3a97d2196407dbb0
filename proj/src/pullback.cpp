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

#include "setcat/pullback.hpp"

#include <algorithm>
#include <unordered_map>

namespace setcat {

// ---------------------------------------------------------------------------
// Stage

struct Stage::Node {
  bool basic = true;
  std::vector<Stage> parts;
  std::string text = "b";
  std::size_t depth = 0;
};

Stage::Stage() {
  static const std::shared_ptr<const Node> base = std::make_shared<Node>();
  node_ = base;
}

Stage Stage::basic() { return Stage(); }

Stage Stage::pullback(Stage i, Stage j, Stage k) {
  auto node = std::make_shared<Node>();
  node->basic = false;
  node->depth = 1 + std::max({i.depth(), j.depth(), k.depth()});
  node->text = "p(" + i.text() + "," + j.text() + "," + k.text() + ")";
  node->parts = {std::move(i), std::move(j), std::move(k)};
  return Stage(std::move(node));
}

bool Stage::is_basic() const { return node_->basic; }
const Stage& Stage::first() const { return node_->parts[0]; }
const Stage& Stage::second() const { return node_->parts[1]; }
const Stage& Stage::third() const { return node_->parts[2]; }
std::size_t Stage::depth() const { return node_->depth; }
const std::string& Stage::text() const { return node_->text; }

// ---------------------------------------------------------------------------
// StagedUniverse

namespace {

std::string pob_key(Elem a, Elem b, Elem c, Elem d, const std::vector<Elem>& f_raw,
                    const std::vector<Elem>& g_raw) {
  std::string k = std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + "," + std::to_string(d) + ";";
  for (Elem v : f_raw) k += std::to_string(v) + ",";
  k += ";";
  for (Elem v : g_raw) k += std::to_string(v) + ",";
  return k;
}

}  // namespace

StagedUniverse::StagedUniverse(SetoidFamily base, std::size_t depth,
                               std::size_t carrier_cap)
    : depth_(depth) {
  StageData base_data;
  base_data.stage = Stage::basic();
  base_data.family = std::move(base);
  stage_of_text_.emplace(base_data.stage.text(), 0);
  stage_list_.push_back(base_data.stage);
  table_.push_back(std::move(base_data));

  for (std::size_t round = 1; round <= depth_; ++round) {
    const std::vector<Stage> current = stage_list_;
    for (const Stage& i : current)
      for (const Stage& j : current)
        for (const Stage& k : current) {
          Stage p = Stage::pullback(i, j, k);
          if (stage_of_text_.count(p.text())) continue;
          build_pullback_stage(p, carrier_cap);
        }
  }

  assemble_omega();
}

const StagedUniverse::StageData& StagedUniverse::data(const Stage& s) const {
  auto it = stage_of_text_.find(s.text());
  if (it == stage_of_text_.end())
    throw StageOverflowError("stage " + s.text() + " is outside the universe (depth " +
                             std::to_string(depth_) + ")");
  return table_[it->second];
}

const SetoidFamily& StagedUniverse::stage_family(const Stage& s) const {
  return data(s).family;
}

const StagedUniverse::PObject& StagedUniverse::pobject(const Stage& s, Elem e) const {
  const StageData& sd = data(s);
  if (sd.stage.is_basic()) throw InputError("the basic stage has no pullback objects");
  return sd.pobs[e];
}

const std::vector<std::pair<Elem, Elem>>& StagedUniverse::fiber_pairs(const Stage& s,
                                                                      Elem e) const {
  const StageData& sd = data(s);
  if (sd.stage.is_basic()) throw InputError("the basic stage has no pullback objects");
  return sd.fiber_elems[e];
}

Elem StagedUniverse::pobject_index(const Stage& s, Elem a, Elem b, Elem c, Elem d,
                                   const std::vector<Elem>& f_raw,
                                   const std::vector<Elem>& g_raw) const {
  const StageData& sd = data(s);
  auto it = sd.pob_lookup.find(pob_key(a, b, c, d, f_raw, g_raw));
  if (it == sd.pob_lookup.end())
    throw InputError("no pullback object with the requested components");
  return it->second;
}

void StagedUniverse::build_pullback_stage(const Stage& s, std::size_t carrier_cap) {
  const SetoidFamily& fi = data(s.first()).family;
  const SetoidFamily& fj = data(s.second()).family;
  const SetoidFamily& fk = data(s.third()).family;
  const FinSetoid& ai = fi.index();
  const FinSetoid& aj = fj.index();
  const FinSetoid& ak = fk.index();

  StageData sd;
  sd.stage = s;

  for (Elem a = 0; a < ai.size(); ++a)
    for (Elem b = 0; b < aj.size(); ++b)
      for (Elem c = 0; c < ak.size(); ++c)
        for (Elem d = 0; d < ak.size(); ++d) {
          if (!ak.eq(c, d)) continue;
          for (const ExtFun& f : enumerate_extfuns(fi.fiber(a), fk.fiber(c)))
            for (const ExtFun& g : enumerate_extfuns(fj.fiber(b), fk.fiber(d))) {
              if (sd.pobs.size() >= carrier_cap)
                throw SizeCapError("stage " + s.text() + " carrier too large",
                                   sd.pobs.size() + 1, carrier_cap);
              sd.pob_lookup.emplace(pob_key(a, b, c, d, f.raw(), g.raw()),
                                    sd.pobs.size());
              sd.pobs.push_back(PObject{a, b, c, d, f, g});
            }
        }

  // Index equality: componentwise index equality plus the two commuting
  // squares, decided through transport-normalized map keys.
  std::vector<std::size_t> ids;
  ids.reserve(sd.pobs.size());
  {
    std::map<std::string, std::size_t> classes;
    for (const PObject& p : sd.pobs) {
      Elem ar = ai.class_reps()[ai.class_id(p.a)];
      Elem br = aj.class_reps()[aj.class_id(p.b)];
      Elem cr = ak.class_reps()[ak.class_id(p.c)];
      Elem dr = ak.class_reps()[ak.class_id(p.d)];
      ExtFun nf = compose(fk.transport(p.c, cr), compose(p.f, fi.transport(ar, p.a)));
      ExtFun ng = compose(fk.transport(p.d, dr), compose(p.g, fj.transport(br, p.b)));
      std::string key = std::to_string(ai.class_id(p.a)) + "|" +
                        std::to_string(aj.class_id(p.b)) + "|" +
                        std::to_string(ak.class_id(p.c)) + "|" +
                        std::to_string(ak.class_id(p.d)) + "|";
      for (Elem t : fi.fiber(ar).class_reps())
        key += std::to_string(fk.fiber(cr).class_id(nf(t))) + ",";
      key += "|";
      for (Elem t : fj.fiber(br).class_reps())
        key += std::to_string(fk.fiber(dr).class_id(ng(t))) + ",";
      auto [it, fresh] = classes.emplace(std::move(key), classes.size());
      ids.push_back(it->second);
    }
  }

  std::vector<std::string> labels;
  if (sd.pobs.size() <= 10000) {
    labels.reserve(sd.pobs.size());
    for (const PObject& p : sd.pobs) {
      std::string text = "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                         std::to_string(p.c) + "," + std::to_string(p.d) + ";[";
      for (std::size_t t = 0; t < p.f.raw().size(); ++t) {
        if (t) text += " ";
        text += std::to_string(p.f.raw()[t]);
      }
      text += "];[";
      for (std::size_t t = 0; t < p.g.raw().size(); ++t) {
        if (t) text += " ";
        text += std::to_string(p.g.raw()[t]);
      }
      text += "])";
      labels.push_back(std::move(text));
    }
  }
  FinSetoid index = FinSetoid::from_classes(ids, std::move(labels));

  // Fibers: the matched pairs (x, y) with f(x) and g(y) equal in the shared
  // target fiber, once f(x) is carried from c to d.
  std::vector<FinSetoid> fibers;
  fibers.reserve(sd.pobs.size());
  sd.fiber_elems.resize(sd.pobs.size());
  sd.fiber_lookup.resize(sd.pobs.size());
  for (Elem e = 0; e < sd.pobs.size(); ++e) {
    const PObject& p = sd.pobs[e];
    const ExtFun& carry = fk.transport(p.c, p.d);
    std::vector<std::size_t> fiber_ids;
    for (Elem x = 0; x < fi.fiber(p.a).size(); ++x)
      for (Elem y = 0; y < fj.fiber(p.b).size(); ++y) {
        if (!fk.fiber(p.d).eq(carry(p.f(x)), p.g(y))) continue;
        sd.fiber_lookup[e].emplace(std::make_pair(x, y), sd.fiber_elems[e].size());
        sd.fiber_elems[e].emplace_back(x, y);
        fiber_ids.push_back(fi.fiber(p.a).class_id(x) * fj.fiber(p.b).class_count() +
                            fj.fiber(p.b).class_id(y));
      }
    fibers.push_back(FinSetoid::from_classes(fiber_ids));
  }

  sd.family = SetoidFamily::make(std::move(index), fibers, [&](Elem e, Elem e2) {
    const PObject& p = sd.pobs[e];
    const PObject& q = sd.pobs[e2];
    const ExtFun& ta = fi.transport(p.a, q.a);
    const ExtFun& tb = fj.transport(p.b, q.b);
    std::vector<Elem> raw(sd.fiber_elems[e].size());
    for (Elem t = 0; t < raw.size(); ++t) {
      auto [x, y] = sd.fiber_elems[e][t];
      auto it = sd.fiber_lookup[e2].find(std::make_pair(ta(x), tb(y)));
      if (it == sd.fiber_lookup[e2].end())
        throw InputError("internal: transported pair not in target fiber");
      raw[t] = it->second;
    }
    return ExtFun(fibers[e], fibers[e2], std::move(raw));
  });

  stage_of_text_.emplace(s.text(), table_.size());
  stage_list_.push_back(s);
  table_.push_back(std::move(sd));
}

void StagedUniverse::assemble_omega() {
  std::vector<std::size_t> ids;
  std::vector<std::string> labels;
  std::vector<FinSetoid> fibers;
  omega_offset_.resize(table_.size());

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> classes;
  for (std::size_t si = 0; si < table_.size(); ++si) {
    const SetoidFamily& fam = table_[si].family;
    omega_offset_[si] = omega_entries_.size();
    for (Elem a = 0; a < fam.index().size(); ++a) {
      omega_entries_.emplace_back(si, a);
      auto [it, fresh] =
          classes.emplace(std::make_pair(si, fam.index().class_id(a)), classes.size());
      ids.push_back(it->second);
      labels.push_back(stage_list_[si].text() + ":" + std::to_string(a));
      fibers.push_back(fam.fiber(a));
    }
  }

  FinSetoid index = FinSetoid::from_classes(ids, std::move(labels));
  omega_ = SetoidFamily::make(std::move(index), std::move(fibers),
                              [&](Elem w1, Elem w2) {
                                auto [s1, a1] = omega_entries_[w1];
                                auto [s2, a2] = omega_entries_[w2];
                                // equal entries share their stage
                                return table_[s1].family.transport(a1, a2);
                              });
}

Elem StagedUniverse::omega_index(const Stage& s, Elem a) const {
  auto it = stage_of_text_.find(s.text());
  if (it == stage_of_text_.end())
    throw StageOverflowError("stage " + s.text() + " is outside the universe (depth " +
                             std::to_string(depth_) + ")");
  return omega_offset_[it->second] + a;
}

std::pair<Stage, Elem> StagedUniverse::omega_decode(Elem w) const {
  auto [si, a] = omega_entries_[w];
  return {stage_list_[si], a};
}

// ---------------------------------------------------------------------------
// Chosen pullbacks

ChosenPullback chosen_pullback(const StagedUniverse& su, const FamilyCategory& c,
                               Elem f, Elem g) {
  const CatArrow& af = c.arrows[f];
  const CatArrow& ag = c.arrows[g];
  if (!c.cat.objects.eq(af.dst, ag.dst))
    throw NotACospanError("arrows do not share a codomain: " +
                          c.cat.objects.label(af.dst) + " vs " +
                          c.cat.objects.label(ag.dst));

  auto [si, a] = su.omega_decode(af.src);
  auto [sj, b] = su.omega_decode(ag.src);
  auto [sk, cslot] = su.omega_decode(af.dst);
  // object equality in the omega index forces structurally equal stages
  Elem dslot = su.omega_decode(ag.dst).second;
  Stage p = Stage::pullback(si, sj, sk);

  Elem pe = su.pobject_index(p, a, b, cslot, dslot, af.map.raw(), ag.map.raw());
  Elem apex = su.omega_index(p, pe);

  const auto& pairs = su.fiber_pairs(p, pe);
  std::vector<Elem> raw1(pairs.size()), raw2(pairs.size());
  for (Elem t = 0; t < pairs.size(); ++t) {
    raw1[t] = pairs[t].first;
    raw2[t] = pairs[t].second;
  }
  ChosenPullback out;
  out.apex = apex;
  out.proj1 = c.arrow_index(apex, af.src, raw1);
  out.proj2 = c.arrow_index(apex, ag.src, raw2);
  return out;
}

bool verify_pullback(const FinCategory& c, const Composer& comp, Elem p1, Elem p2,
                     Elem f, Elem g) {
  if (!c.objects.eq(c.cod(f), c.cod(g))) return false;
  if (!c.objects.eq(c.dom(p1), c.dom(p2))) return false;
  if (!c.objects.eq(c.cod(p1), c.dom(f))) return false;
  if (!c.objects.eq(c.cod(p2), c.dom(g))) return false;

  auto h1 = comp.compose(f, p1);
  auto h2 = comp.compose(g, p2);
  if (!h1 || !h2 || !c.arrows.eq(*h1, *h2)) return false;

  std::size_t apex_cls = c.objects.class_id(c.dom(p1));
  std::size_t x_cls = c.objects.class_id(c.dom(f));
  std::size_t y_cls = c.objects.class_id(c.dom(g));

  // Bucket arrow representatives by (dom class, cod class).
  std::unordered_map<std::uint64_t, std::vector<Elem>> buckets;
  auto pack = [](std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  };
  for (Elem h : c.arrows.class_reps())
    buckets[pack(c.objects.class_id(c.dom(h)), c.objects.class_id(c.cod(h)))]
        .push_back(h);

  static const std::vector<Elem> kNone;
  for (Elem w : c.objects.class_reps()) {
    std::size_t w_cls = c.objects.class_id(w);
    auto lookup = [&](std::size_t to) -> const std::vector<Elem>& {
      auto it = buckets.find(pack(w_cls, to));
      return it == buckets.end() ? kNone : it->second;
    };
    const std::vector<Elem>& us = lookup(x_cls);
    const std::vector<Elem>& vs = lookup(y_cls);
    const std::vector<Elem>& ms = lookup(apex_cls);
    if (us.empty() || vs.empty()) continue;

    // Precompute both projections of every candidate mediating arrow.
    std::vector<std::pair<std::optional<Elem>, std::optional<Elem>>> projected;
    projected.reserve(ms.size());
    for (Elem m : ms) projected.emplace_back(comp.compose(p1, m), comp.compose(p2, m));

    for (Elem u : us) {
      auto fu = comp.compose(f, u);
      if (!fu) continue;
      for (Elem v : vs) {
        auto gv = comp.compose(g, v);
        if (!gv || !c.arrows.eq(*fu, *gv)) continue;
        // (u, v) is a cone; it must factor through exactly one arrow class.
        std::size_t hits = 0;
        for (std::size_t mi = 0; mi < ms.size(); ++mi) {
          const auto& [mu, mv] = projected[mi];
          if (mu && mv && c.arrows.eq(*mu, u) && c.arrows.eq(*mv, v)) ++hits;
        }
        if (hits != 1) return false;
      }
    }
  }
  return true;
}

bool verify_pullback(const FinCategory& c, Elem p1, Elem p2, Elem f, Elem g) {
  return verify_pullback(c, Composer(c), p1, p2, f, g);
}

CheckReport pullback_suite(const StagedUniverse& su, const FamilyCategory& c) {
  CheckReport report;
  Composer comp(c.cat);

  // Cospans whose chosen stage exists in the universe.
  std::vector<std::pair<Elem, Elem>> cospans;
  std::vector<Stage> arrow_src_stage(c.arrows.size()), arrow_dst_stage(c.arrows.size());
  for (Elem i = 0; i < c.arrows.size(); ++i) {
    arrow_src_stage[i] = su.omega_decode(c.arrows[i].src).first;
    arrow_dst_stage[i] = su.omega_decode(c.arrows[i].dst).first;
  }
  for (Elem f = 0; f < c.arrows.size(); ++f)
    for (Elem g = 0; g < c.arrows.size(); ++g) {
      if (!c.cat.objects.eq(c.arrows[f].dst, c.arrows[g].dst)) continue;
      Stage p = Stage::pullback(arrow_src_stage[f], arrow_src_stage[g],
                                arrow_dst_stage[f]);
      if (p.depth() > su.depth()) continue;
      cospans.emplace_back(f, g);
    }

  // Group by cospan equality class; verify one representative per group and
  // require every member's chosen square to agree with the representative's.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
  auto pack = [](std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  };
  for (std::size_t n = 0; n < cospans.size(); ++n)
    groups[pack(c.cat.arrows.class_id(cospans[n].first),
                c.cat.arrows.class_id(cospans[n].second))]
        .push_back(n);

  bool verified_ok = true;
  std::string verified_witness;
  bool invariant_ok = true;
  std::string invariant_witness;
  for (const auto& [key, members] : groups) {
    auto [f0, g0] = cospans[members.front()];
    ChosenPullback rep = chosen_pullback(su, c, f0, g0);
    if (verified_ok &&
        !verify_pullback(c.cat, comp, rep.proj1, rep.proj2, f0, g0)) {
      verified_ok = false;
      verified_witness = "cospan (" + c.cat.arrows.label(f0) + ", " +
                         c.cat.arrows.label(g0) + ")";
    }
    for (std::size_t n : members) {
      auto [fn, gn] = cospans[n];
      ChosenPullback other = chosen_pullback(su, c, fn, gn);
      if (!c.cat.objects.eq(other.apex, rep.apex) ||
          !c.cat.arrows.eq(other.proj1, rep.proj1) ||
          !c.cat.arrows.eq(other.proj2, rep.proj2)) {
        invariant_ok = false;
        invariant_witness = "cospans (" + c.cat.arrows.label(f0) + ", " +
                            c.cat.arrows.label(g0) + ") vs (" +
                            c.cat.arrows.label(fn) + ", " + c.cat.arrows.label(gn) +
                            ")";
        break;
      }
    }
    if (!invariant_ok && !verified_ok) break;
  }

  report.add("chosen squares are pullbacks (" + std::to_string(cospans.size()) +
                 " cospans, " + std::to_string(groups.size()) + " classes)",
             verified_ok, verified_witness);
  report.add("chosen pullback extensional in the cospan", invariant_ok,
             invariant_witness);
  return report;
}

// ---------------------------------------------------------------------------
// Presets

SetoidFamily base_preset(const std::string& name) {
  if (name == "unit")
    return SetoidFamily::constant(FinSetoid::discrete(1), FinSetoid::discrete(1));
  if (name == "discrete2")
    return SetoidFamily::constant(FinSetoid::discrete(2), FinSetoid::discrete(1));
  if (name == "codiscrete2")
    return SetoidFamily::constant(FinSetoid::codiscrete(2), FinSetoid::discrete(1));
  if (name == "pair1")
    return SetoidFamily::constant(FinSetoid::discrete(1), FinSetoid::discrete(2));
  throw InputError("unknown base preset '" + name +
                   "' (expected unit, discrete2, codiscrete2 or pair1)");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"unit", "discrete2", "codiscrete2",
                                                 "pair1"};
  return names;
}

}  // namespace setcat
