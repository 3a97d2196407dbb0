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

#include "setcat/setoid.hpp"

#include <algorithm>
#include <map>

namespace setcat {

// ---------------------------------------------------------------------------
// FinSetoid

FinSetoid FinSetoid::from_relation(std::size_t size,
                                   const std::function<bool(Elem, Elem)>& eq,
                                   std::vector<std::string> labels) {
  for (Elem x = 0; x < size; ++x)
    if (!eq(x, x))
      throw NotAnEquivalenceError("reflexivity", x, x, x,
                                  "at element " + std::to_string(x));
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y)
      if (eq(x, y) && !eq(y, x))
        throw NotAnEquivalenceError(
            "symmetry", x, y, y,
            "at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      if (!eq(x, y)) continue;
      for (Elem z = 0; z < size; ++z)
        if (eq(y, z) && !eq(x, z))
          throw NotAnEquivalenceError("transitivity", x, y, z,
                                      "at (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ", " +
                                          std::to_string(z) + ")");
    }

  // The relation is an equivalence; compress it into class ids.
  FinSetoid s;
  s.class_.assign(size, 0);
  for (Elem x = 0; x < size; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < s.reps_.size() && !placed; ++c) {
      if (eq(x, s.reps_[c])) {
        s.class_[x] = c;
        placed = true;
      }
    }
    if (!placed) {
      s.class_[x] = s.reps_.size();
      s.reps_.push_back(x);
    }
  }
  s.labels_ = std::move(labels);
  return s;
}

FinSetoid FinSetoid::from_classes(const std::vector<std::size_t>& class_ids,
                                  std::vector<std::string> labels) {
  FinSetoid s;
  s.class_.reserve(class_ids.size());
  std::map<std::size_t, std::size_t> normalize;
  for (Elem x = 0; x < class_ids.size(); ++x) {
    auto [it, fresh] = normalize.emplace(class_ids[x], s.reps_.size());
    if (fresh) s.reps_.push_back(x);
    s.class_.push_back(it->second);
  }
  s.labels_ = std::move(labels);
  return s;
}

FinSetoid FinSetoid::discrete(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return from_classes(ids);
}

FinSetoid FinSetoid::codiscrete(std::size_t n) {
  return from_classes(std::vector<std::size_t>(n, 0));
}

const std::string& FinSetoid::label(Elem x) const {
  if (labels_.size() != class_.size()) {
    labels_.resize(class_.size());
    for (Elem i = 0; i < class_.size(); ++i)
      if (labels_[i].empty()) labels_[i] = "e" + std::to_string(i);
  }
  return labels_[x];
}

void FinSetoid::set_label(Elem x, std::string text) {
  if (labels_.size() != class_.size()) labels_.resize(class_.size());
  labels_[x] = std::move(text);
}

// ---------------------------------------------------------------------------
// ExtFun

ExtFun::ExtFun(FinSetoid dom, FinSetoid cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size())
    throw InputError("map is not total: " + std::to_string(map_.size()) +
                     " entries for a carrier of " + std::to_string(dom_.size()));
  for (Elem v : map_)
    if (v >= cod_.size())
      throw InputError("map value " + std::to_string(v) + " outside codomain");

  // Extensionality: the output class must be constant on each input class.
  std::vector<std::size_t> seen(dom_.class_count(), SIZE_MAX);
  std::vector<Elem> first(dom_.class_count(), 0);
  for (Elem x = 0; x < map_.size(); ++x) {
    std::size_t c = dom_.class_id(x);
    std::size_t out = cod_.class_id(map_[x]);
    if (seen[c] == SIZE_MAX) {
      seen[c] = out;
      first[c] = x;
    } else if (seen[c] != out) {
      throw NotExtensionalError(first[c], x);
    }
  }
}

ExtFun ExtFun::identity(const FinSetoid& a) {
  std::vector<Elem> map(a.size());
  for (Elem i = 0; i < a.size(); ++i) map[i] = i;
  return ExtFun(a, a, std::move(map));
}

ExtFun ExtFun::constant(const FinSetoid& dom, const FinSetoid& cod, Elem value) {
  return ExtFun(dom, cod, std::vector<Elem>(dom.size(), value));
}

bool ext_equal(const ExtFun& f, const ExtFun& g) {
  if (!f.dom().same_structure(g.dom()) || !f.cod().same_structure(g.cod()))
    throw SignatureMismatchError("ext_equal: functions have different signatures");
  for (Elem x = 0; x < f.dom().size(); ++x)
    if (!f.cod().eq(f(x), g(x))) return false;
  return true;
}

ExtFun compose(const ExtFun& g, const ExtFun& f) {
  if (!f.cod().same_structure(g.dom()))
    throw SignatureMismatchError("compose: codomain/domain mismatch");
  std::vector<Elem> map(f.dom().size());
  for (Elem x = 0; x < f.dom().size(); ++x) map[x] = g(f(x));
  return ExtFun(f.dom(), g.cod(), std::move(map));
}

std::vector<ExtFun> enumerate_extfuns(const FinSetoid& a, const FinSetoid& b,
                                      std::size_t cap) {
  // Total raw maps number |b|^|a|; bail out before materializing them.
  std::size_t total = 1;
  for (Elem i = 0; i < a.size(); ++i) {
    if (b.size() == 0) {
      total = 0;
      break;
    }
    if (total > cap / b.size())
      throw SizeCapError("function space too large to enumerate", SIZE_MAX, cap);
    total *= b.size();
  }
  if (a.size() == 0) total = 1;  // the empty map

  std::vector<ExtFun> out;
  if (total == 0) return out;

  std::vector<Elem> map(a.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    for (Elem i = 0; i < a.size(); ++i) {
      map[i] = rest % b.size();
      rest /= b.size();
    }
    try {
      out.emplace_back(a, b, map);
    } catch (const NotExtensionalError&) {
      // skip non-extensional raw maps
    }
  }
  return out;
}

FinSetoid extfun_setoid(const std::vector<ExtFun>& funs) {
  // Group by the class pattern of outputs on class representatives.
  std::map<std::vector<std::size_t>, std::size_t> classes;
  std::vector<std::size_t> ids;
  ids.reserve(funs.size());
  for (const ExtFun& f : funs) {
    std::vector<std::size_t> pattern;
    pattern.reserve(f.dom().class_count());
    for (Elem rep : f.dom().class_reps()) pattern.push_back(f.cod().class_id(f(rep)));
    auto [it, fresh] = classes.emplace(std::move(pattern), classes.size());
    ids.push_back(it->second);
  }
  return FinSetoid::from_classes(ids);
}

// ---------------------------------------------------------------------------
// SetoidFamily

SetoidFamily SetoidFamily::make(FinSetoid index, std::vector<FinSetoid> fibers,
                                const std::function<ExtFun(Elem, Elem)>& transport) {
  if (fibers.size() != index.size())
    throw InputError("family needs one fiber per index element");

  SetoidFamily fam;
  fam.index_ = std::move(index);
  fam.fibers_ = std::move(fibers);

  const FinSetoid& a = fam.index_;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (!a.eq(x, y)) continue;
      ExtFun t = transport(x, y);
      if (!t.dom().same_structure(fam.fibers_[x]) ||
          !t.cod().same_structure(fam.fibers_[y]))
        throw FamilyLawError("signature", x, y, y,
                             "transport(" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") does not map fiber(" +
                                 std::to_string(x) + ") to fiber(" +
                                 std::to_string(y) + ")");
      fam.transports_.emplace(key(x, y), std::move(t));
    }

  // Identity law: transport on a reflexive pair is pointwise the identity.
  for (Elem x = 0; x < a.size(); ++x) {
    const ExtFun& t = fam.transport(x, x);
    for (Elem v = 0; v < fam.fibers_[x].size(); ++v)
      if (!fam.fibers_[x].eq(t(v), v))
        throw FamilyLawError("identity", x, x, x,
                             "transport(" + std::to_string(x) + ", " +
                                 std::to_string(x) + ") moves fiber element " +
                                 std::to_string(v));
  }

  // Composition law over every related triple.
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (!a.eq(x, y)) continue;
      for (Elem z = 0; z < a.size(); ++z) {
        if (!a.eq(y, z)) continue;
        const ExtFun& xy = fam.transport(x, y);
        const ExtFun& yz = fam.transport(y, z);
        const ExtFun& xz = fam.transport(x, z);
        for (Elem v = 0; v < fam.fibers_[x].size(); ++v)
          if (!fam.fibers_[z].eq(yz(xy(v)), xz(v)))
            throw FamilyLawError(
                "composition", x, y, z,
                "transport(" + std::to_string(y) + ", " + std::to_string(z) +
                    ") o transport(" + std::to_string(x) + ", " + std::to_string(y) +
                    ") disagrees with transport(" + std::to_string(x) + ", " +
                    std::to_string(z) + ") at fiber element " + std::to_string(v));
      }
    }

  return fam;
}

SetoidFamily SetoidFamily::constant(FinSetoid index, const FinSetoid& fiber) {
  std::vector<FinSetoid> fibers(index.size(), fiber);
  return make(std::move(index), std::move(fibers),
              [&fiber](Elem, Elem) { return ExtFun::identity(fiber); });
}

const ExtFun& SetoidFamily::transport(Elem x, Elem y) const {
  auto it = transports_.find(key(x, y));
  if (it == transports_.end())
    throw NotEqualError("transport requested for unequal index elements " +
                        std::to_string(x) + " and " + std::to_string(y));
  return it->second;
}

}  // namespace setcat
