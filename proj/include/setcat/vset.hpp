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

#ifndef SETCAT_VSET_HPP_
#define SETCAT_VSET_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "setcat/errors.hpp"

namespace setcat {

// A finite collection of atom identifiers partitioned into equivalence
// classes.  Atoms compare equal exactly when they share a class.  The empty
// table gives the pure universe (no atoms at all).
class AtomTable {
 public:
  AtomTable() = default;

  // Each inner vector is one equivalence class.  Throws InputError if an
  // identifier is empty or occurs in more than one class.
  static AtomTable from_classes(const std::vector<std::vector<std::string>>& classes);

  // Parses the flat CLI syntax: identifiers separated by whitespace,
  // classes separated by '|'.  "a b | c" declares classes {a,b} and {c}.
  static AtomTable parse(const std::string& spec);

  bool contains(const std::string& id) const;
  // Throws UnknownAtomError if either id is absent.
  bool same_class(const std::string& a, const std::string& b) const;
  // Lexicographically least identifier of id's class; used for canonical
  // rendering.  Throws UnknownAtomError.
  const std::string& class_rep(const std::string& id) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t class_count() const { return reps_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  // One representative (the least identifier) per class.
  const std::vector<std::string>& class_reps() const { return reps_; }

 private:
  std::size_t class_of(const std::string& id) const;

  std::vector<std::string> ids_;
  std::vector<std::size_t> class_ids_;  // parallel to ids_
  std::vector<std::string> reps_;       // least id per class, indexed by class
};

// A hereditarily finite iterative set: a well-founded tree whose leaves are
// atoms or empty sets.  Children are semantically unordered and may repeat;
// vset_equal quotients both out.  Immutable and cheap to copy (nodes are
// shared).
class VSet {
 public:
  // The empty set.
  VSet();

  static VSet sup(std::vector<VSet> children);
  // Throws UnknownAtomError if id is not in the table.
  static VSet atom(const std::string& id, const AtomTable& table);

  bool is_atom() const;
  bool is_sup() const { return !is_atom(); }
  // Pre: is_sup().
  const std::vector<VSet>& children() const;
  // Pre: is_atom().
  const std::string& atom_id() const;

  // Structural node identity; used only for memoization, never for set
  // equality.
  const void* node_key() const { return node_.get(); }

 private:
  struct Node;
  explicit VSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Bisimulation equality: two sups are equal when every child of one is equal
// to some child of the other, in both directions; two atoms are equal when
// the table puts them in one class; a sup never equals an atom.  Memoized on
// structural node pairs, with the memo local to each call.
bool vset_equal(const VSet& u, const VSet& v, const AtomTable& table = AtomTable());

// u is a member of v iff v is a sup and some child of v equals u.  Membership
// in an atom is always false.
bool vset_member(const VSet& u, const VSet& v, const AtomTable& table = AtomTable());

// Canonical text: "{...}" with children rendered canonically, sorted in
// shortlex order (length first, then bytes) and deduplicated; "#id" for
// atoms, rendered with the least identifier of their class.  Two sets have
// identical canonical text iff they are vset_equal.
std::string canonical_text(const VSet& u, const AtomTable& table = AtomTable());

// 0 for atoms and the empty set, otherwise 1 + the maximum child rank.
// Membership strictly decreases rank, which is what makes every recursion in
// this library terminate.
std::size_t vset_rank(const VSet& u);

}  // namespace setcat

#endif  // SETCAT_VSET_HPP_
