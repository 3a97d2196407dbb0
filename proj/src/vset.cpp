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

#include "setcat/vset.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <utility>

namespace setcat {

// ---------------------------------------------------------------------------
// AtomTable

AtomTable AtomTable::from_classes(const std::vector<std::vector<std::string>>& classes) {
  AtomTable t;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    std::size_t cid = t.reps_.size();
    std::string rep = cls.front();
    for (const auto& id : cls) {
      if (id.empty()) throw InputError("empty atom identifier");
      if (t.contains(id))
        throw InputError("atom '" + id + "' occurs in more than one class");
      t.ids_.push_back(id);
      t.class_ids_.push_back(cid);
      rep = std::min(rep, id);
    }
    t.reps_.push_back(std::move(rep));
  }
  return t;
}

AtomTable AtomTable::parse(const std::string& spec) {
  std::vector<std::vector<std::string>> classes(1);
  std::string word;
  auto flush_word = [&] {
    if (!word.empty()) {
      classes.back().push_back(word);
      word.clear();
    }
  };
  for (char c : spec) {
    if (c == '|') {
      flush_word();
      classes.emplace_back();
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush_word();
    } else {
      word.push_back(c);
    }
  }
  flush_word();
  return from_classes(classes);
}

bool AtomTable::contains(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::size_t AtomTable::class_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return class_ids_[i];
  throw UnknownAtomError(id);
}

bool AtomTable::same_class(const std::string& a, const std::string& b) const {
  return class_of(a) == class_of(b);
}

const std::string& AtomTable::class_rep(const std::string& id) const {
  return reps_[class_of(id)];
}

// ---------------------------------------------------------------------------
// VSet

struct VSet::Node {
  // Exactly one of the two shapes: an atom (children unused) or a sup.
  bool atom = false;
  std::string id;
  std::vector<VSet> children;
};

VSet::VSet() {
  static const std::shared_ptr<const Node> empty = std::make_shared<Node>();
  node_ = empty;
}

VSet VSet::sup(std::vector<VSet> children) {
  auto node = std::make_shared<Node>();
  node->children = std::move(children);
  return VSet(std::move(node));
}

VSet VSet::atom(const std::string& id, const AtomTable& table) {
  if (!table.contains(id)) throw UnknownAtomError(id);
  auto node = std::make_shared<Node>();
  node->atom = true;
  node->id = id;
  return VSet(std::move(node));
}

bool VSet::is_atom() const { return node_->atom; }

const std::vector<VSet>& VSet::children() const {
  assert(is_sup());
  return node_->children;
}

const std::string& VSet::atom_id() const {
  assert(is_atom());
  return node_->id;
}

// ---------------------------------------------------------------------------
// Equality, membership, canonical form, rank

namespace {

struct PtrPairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    auto a = reinterpret_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    return std::hash<std::uintptr_t>()(a * 0x9e3779b97f4a7c15ULL ^ b);
  }
};

using EqMemo = std::unordered_map<std::pair<const void*, const void*>, bool, PtrPairHash>;

bool eq_rec(const VSet& u, const VSet& v, const AtomTable& table, EqMemo& memo) {
  if (u.node_key() == v.node_key()) return true;
  if (u.is_atom() != v.is_atom()) return false;
  if (u.is_atom()) return table.same_class(u.atom_id(), v.atom_id());

  auto key = std::make_pair(u.node_key(), v.node_key());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto half = [&](const std::vector<VSet>& xs, const std::vector<VSet>& ys) {
    for (const VSet& x : xs) {
      bool found = false;
      for (const VSet& y : ys) {
        if (eq_rec(x, y, table, memo)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  bool result = half(u.children(), v.children()) && half(v.children(), u.children());
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool vset_equal(const VSet& u, const VSet& v, const AtomTable& table) {
  EqMemo memo;
  return eq_rec(u, v, table, memo);
}

bool vset_member(const VSet& u, const VSet& v, const AtomTable& table) {
  if (v.is_atom()) return false;
  EqMemo memo;
  for (const VSet& child : v.children())
    if (eq_rec(u, child, table, memo)) return true;
  return false;
}

namespace {

std::string canon_rec(const VSet& u, const AtomTable& table,
                      std::unordered_map<const void*, std::string>& memo) {
  if (u.is_atom()) return "#" + table.class_rep(u.atom_id());
  if (auto it = memo.find(u.node_key()); it != memo.end()) return it->second;

  std::vector<std::string> parts;
  parts.reserve(u.children().size());
  for (const VSet& child : u.children()) parts.push_back(canon_rec(child, table, memo));
  // shortlex: shorter texts first, ties byte-wise
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  std::string text = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) text += ",";
    text += parts[i];
  }
  text += "}";
  memo.emplace(u.node_key(), text);
  return text;
}

}  // namespace

std::string canonical_text(const VSet& u, const AtomTable& table) {
  std::unordered_map<const void*, std::string> memo;
  return canon_rec(u, table, memo);
}

namespace {

std::size_t rank_rec(const VSet& u, std::unordered_map<const void*, std::size_t>& memo) {
  if (u.is_atom()) return 0;
  if (u.children().empty()) return 0;
  if (auto it = memo.find(u.node_key()); it != memo.end()) return it->second;
  std::size_t best = 0;
  for (const VSet& child : u.children()) best = std::max(best, rank_rec(child, memo));
  memo.emplace(u.node_key(), best + 1);
  return best + 1;
}

}  // namespace

std::size_t vset_rank(const VSet& u) {
  std::unordered_map<const void*, std::size_t> memo;
  return rank_rec(u, memo);
}

}  // namespace setcat
