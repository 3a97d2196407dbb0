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

#ifndef SETCAT_PULLBACK_HPP_
#define SETCAT_PULLBACK_HPP_

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "setcat/category.hpp"
#include "setcat/setoid.hpp"

namespace setcat {

// A construction stage: the basic stage, or a pullback stage over three
// component stages.  Structural equality is decidable and componentwise.
class Stage {
 public:
  Stage();  // the basic stage
  static Stage basic();
  static Stage pullback(Stage i, Stage j, Stage k);

  bool is_basic() const;
  const Stage& first() const;
  const Stage& second() const;
  const Stage& third() const;

  // 0 for the basic stage, otherwise 1 + the maximum component depth.
  std::size_t depth() const;
  // "b" or "p(<i>,<j>,<k>)"; equal text iff structurally equal.
  const std::string& text() const;

  bool operator==(const Stage& other) const { return text() == other.text(); }
  bool operator!=(const Stage& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Stage(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The staged construction: starting from a base family, every pullback stage
// within the depth bound gets an index setoid of pullback objects and a
// family of pullback fibers, and the lot is summed into one family over all
// (stage, object) pairs.
class StagedUniverse {
 public:
  // A pullback object: indices into the three component stages' carriers
  // (c and d both in the third), plus the two maps into the shared target
  // fiber.  c = d holds in the component index; f and g are extensional by
  // construction.
  struct PObject {
    Elem a, b, c, d;
    ExtFun f, g;
  };

  // Throws SizeCapError when any stage carrier or fiber family would exceed
  // carrier_cap, and propagates family validation errors.
  StagedUniverse(SetoidFamily base, std::size_t depth, std::size_t carrier_cap = 4096);

  std::size_t depth() const { return depth_; }
  const std::vector<Stage>& stages() const { return stage_list_; }

  // The family A_s / F_s at a stage; throws StageOverflowError if the stage
  // is outside the table.
  const SetoidFamily& stage_family(const Stage& s) const;

  // Pullback-stage bookkeeping.  pobject gives the decoded tuple for a
  // carrier element; fiber elements of a pullback object are the matched
  // pairs (x, y) listed by fiber_pairs.
  const PObject& pobject(const Stage& s, Elem e) const;
  const std::vector<std::pair<Elem, Elem>>& fiber_pairs(const Stage& s, Elem e) const;
  Elem pobject_index(const Stage& s, Elem a, Elem b, Elem c, Elem d,
                     const std::vector<Elem>& f_raw,
                     const std::vector<Elem>& g_raw) const;

  // The assembled family over all (stage, object) pairs.  Two index entries
  // are equal iff their stages are structurally identical and the objects
  // are equal at that stage.
  const SetoidFamily& omega() const { return omega_; }
  Elem omega_index(const Stage& s, Elem a) const;
  std::pair<Stage, Elem> omega_decode(Elem w) const;

 private:
  struct StageData {
    Stage stage;
    SetoidFamily family;
    // pullback stages only:
    std::vector<PObject> pobs;
    std::vector<std::vector<std::pair<Elem, Elem>>> fiber_elems;
    std::vector<std::map<std::pair<Elem, Elem>, Elem>> fiber_lookup;
    std::map<std::string, Elem> pob_lookup;
  };

  const StageData& data(const Stage& s) const;
  void build_pullback_stage(const Stage& s, std::size_t carrier_cap);
  void assemble_omega();

  std::size_t depth_ = 0;
  std::vector<Stage> stage_list_;
  std::vector<StageData> table_;
  std::map<std::string, std::size_t> stage_of_text_;
  SetoidFamily omega_;
  std::vector<std::pair<std::size_t, Elem>> omega_entries_;  // (stage idx, element)
  std::vector<std::size_t> omega_offset_;                    // per stage idx
};

// The chosen pullback of a cospan f: (i,a) -> (k,c), g: (j,b) -> (k,d) in the
// category built from the omega family: the pullback object over stage
// p(i,j,k) with the two coordinate projections.  Throws NotACospanError if
// the codomains differ and StageOverflowError if p(i,j,k) is beyond the
// universe depth.
struct ChosenPullback {
  Elem apex;   // object (C0 carrier index)
  Elem proj1;  // arrow apex -> dom(f)
  Elem proj2;  // arrow apex -> dom(g)
};

ChosenPullback chosen_pullback(const StagedUniverse& su, const FamilyCategory& c,
                               Elem f, Elem g);

// Decides whether (p1, p2) is a pullback of the cospan (f, g): the square
// commutes and every commuting cone factors through the apex by exactly one
// arrow up to equality.  Brute-force over the whole category.
bool verify_pullback(const FinCategory& c, const Composer& comp, Elem p1, Elem p2,
                     Elem f, Elem g);
bool verify_pullback(const FinCategory& c, Elem p1, Elem p2, Elem f, Elem g);

// Enumerates every cospan whose chosen stage is within depth, checks the
// chosen square for one representative per cospan equality class, and checks
// that equal cospans get equal chosen pullbacks.
CheckReport pullback_suite(const StagedUniverse& su, const FamilyCategory& c);

// Named base families for the CLI: "unit", "discrete2", "codiscrete2",
// "pair1".  Throws InputError for unknown names.
SetoidFamily base_preset(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace setcat

#endif  // SETCAT_PULLBACK_HPP_
