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

#ifndef SETCAT_SETOID_HPP_
#define SETCAT_SETOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setcat/errors.hpp"

namespace setcat {

// Carrier elements are indices.  Everything that matters about an element is
// expressed through its setoid's eq; code in this library never compares
// elements with == except where structural identity is genuinely meant.
using Elem = std::size_t;

// A finite carrier with a decidable equivalence relation, stored as the
// induced partition (class id per element).  Labels are diagnostic only and
// never influence equality.
class FinSetoid {
 public:
  FinSetoid() = default;

  // Validates that eq is reflexive, symmetric and transitive by exhaustive
  // check; throws NotAnEquivalenceError naming the failing law and witnesses.
  static FinSetoid from_relation(std::size_t size,
                                 const std::function<bool(Elem, Elem)>& eq,
                                 std::vector<std::string> labels = {});

  // Builds directly from class ids (any partition is an equivalence, so
  // there is nothing to validate).  Class ids need not be contiguous; they
  // are normalized to first-occurrence order.
  static FinSetoid from_classes(const std::vector<std::size_t>& class_ids,
                                std::vector<std::string> labels = {});

  static FinSetoid discrete(std::size_t n);    // only x = x
  static FinSetoid codiscrete(std::size_t n);  // everything equal

  std::size_t size() const { return class_.size(); }
  bool eq(Elem x, Elem y) const { return class_[x] == class_[y]; }
  std::size_t class_id(Elem x) const { return class_[x]; }
  std::size_t class_count() const { return reps_.size(); }
  // One representative element per class, in class-id order.
  const std::vector<Elem>& class_reps() const { return reps_; }

  const std::string& label(Elem x) const;
  void set_label(Elem x, std::string text);

  // Same size and same partition.  Used for signature checks between
  // functions; labels are ignored.
  bool same_structure(const FinSetoid& other) const {
    return class_ == other.class_;
  }

 private:
  std::vector<std::size_t> class_;
  std::vector<Elem> reps_;
  mutable std::vector<std::string> labels_;  // filled lazily with defaults
};

// A total map between finite setoids that sends equal inputs to equal
// outputs.  The constructor checks extensionality exhaustively and throws
// NotExtensionalError with a witness pair.
class ExtFun {
 public:
  ExtFun() = default;
  ExtFun(FinSetoid dom, FinSetoid cod, std::vector<Elem> map);

  static ExtFun identity(const FinSetoid& a);
  static ExtFun constant(const FinSetoid& dom, const FinSetoid& cod, Elem value);

  Elem operator()(Elem x) const { return map_[x]; }
  const FinSetoid& dom() const { return dom_; }
  const FinSetoid& cod() const { return cod_; }
  const std::vector<Elem>& raw() const { return map_; }

 private:
  FinSetoid dom_, cod_;
  std::vector<Elem> map_;
};

// Pointwise equality; the equivalence relation of the setoid Ext(A,B).
// Throws SignatureMismatchError unless f and g share dom and cod structure.
bool ext_equal(const ExtFun& f, const ExtFun& g);

// g after f.  Throws SignatureMismatchError unless cod(f) matches dom(g).
ExtFun compose(const ExtFun& g, const ExtFun& f);

// All total maps |a| -> |b| that pass extensionality, one per raw map.
// Throws SizeCapError if |b|^|a| exceeds cap.
std::vector<ExtFun> enumerate_extfuns(const FinSetoid& a, const FinSetoid& b,
                                      std::size_t cap = 1u << 20);

// The setoid whose elements are the maps of enumerate_extfuns(a, b) and whose
// equality is ext_equal.
FinSetoid extfun_setoid(const std::vector<ExtFun>& funs);

// A proof-irrelevant family of setoids: a fiber over each index element and a
// transport map between the fibers of any two equal indices.  Transport is
// keyed by the element pair alone, with no proof argument to depend on, so
// proof irrelevance is structural.  Validation enforces, exhaustively:
//   identity     transport(x,x) is pointwise the identity;
//   composition  transport(y,z) o transport(x,y) pointwise equals
//                transport(x,z) for all related x,y,z;
//   signature    transport(x,y) maps fiber(x) to fiber(y).
class SetoidFamily {
 public:
  SetoidFamily() = default;

  // `transport` is invoked once per ordered pair (x,y) with x equal to y in
  // the index, diagonal included.  Throws FamilyLawError on violation.
  static SetoidFamily make(FinSetoid index, std::vector<FinSetoid> fibers,
                           const std::function<ExtFun(Elem, Elem)>& transport);

  // Constant family: every fiber the same setoid, all transports identity.
  static SetoidFamily constant(FinSetoid index, const FinSetoid& fiber);

  const FinSetoid& index() const { return index_; }
  const FinSetoid& fiber(Elem x) const { return fibers_[x]; }

  // The stored transport fiber(x) -> fiber(y); throws NotEqualError if x and
  // y are not equal in the index.
  const ExtFun& transport(Elem x, Elem y) const;

 private:
  static std::uint64_t key(Elem x, Elem y) {
    return (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint64_t>(y);
  }

  FinSetoid index_;
  std::vector<FinSetoid> fibers_;
  std::unordered_map<std::uint64_t, ExtFun> transports_;
};

}  // namespace setcat

#endif  // SETCAT_SETOID_HPP_
