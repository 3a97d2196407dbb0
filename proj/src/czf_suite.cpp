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
#include <unordered_map>

#include "setcat/czf.hpp"

namespace setcat {

std::vector<VSet> enumerate_vsets(std::size_t rank, std::size_t breadth,
                                  const AtomTable& table, std::size_t cap) {
  std::vector<VSet> pool;
  pool.push_back(VSet());
  for (const std::string& id : table.ids()) pool.push_back(VSet::atom(id, table));

  std::set<std::vector<std::size_t>> built;
  built.insert({});  // the empty set is the empty subset

  for (std::size_t round = 0; round < rank; ++round) {
    std::size_t limit = pool.size();
    // all index subsets of size 1..breadth over the current pool
    std::vector<std::size_t> subset;
    auto emit = [&] {
      if (built.count(subset)) return;
      built.insert(subset);
      std::vector<VSet> members;
      members.reserve(subset.size());
      for (std::size_t idx : subset) members.push_back(pool[idx]);
      if (pool.size() >= cap)
        throw SizeCapError("set enumeration too large", pool.size() + 1, cap);
      pool.push_back(VSet::sup(std::move(members)));
    };
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (!subset.empty()) emit();
      if (subset.size() == breadth) return;
      for (std::size_t next = from; next < limit; ++next) {
        subset.push_back(next);
        grow(next + 1);
        subset.pop_back();
      }
    };
    grow(0);
  }
  return pool;
}

namespace {

struct SuiteContext {
  const AxiomSuiteConfig& config;
  const AtomTable& table;
  std::vector<VSet> pool;
  std::vector<std::vector<bool>> mem;  // mem[z][x]: z is a member of x
  std::vector<std::vector<bool>> eq;   // eq[x][y]
  std::vector<std::size_t> ranks;

  bool member(const VSet& u, const VSet& v) const {
    return config.member_hook ? config.member_hook(u, v, table)
                              : vset_member(u, v, table);
  }
  bool equal(const VSet& u, const VSet& v) const {
    return config.equal_hook ? config.equal_hook(u, v, table)
                             : vset_equal(u, v, table);
  }
};

std::string describe(const SuiteContext& ctx, const VSet& u) {
  return canonical_text(u, ctx.table);
}

void check_c1(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (const VSet& x : ctx.pool)
    if (!(x.is_sup() || x.is_atom())) {
      ok = false;
      witness = describe(ctx, x);
      break;
    }
  report.add("C1 (every object is a set or an atom)", ok, witness);
}

void check_c2(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (std::size_t x = 0; x < ctx.pool.size() && ok; ++x) {
    if (!ctx.pool[x].is_atom()) continue;
    for (std::size_t z = 0; z < ctx.pool.size() && ok; ++z)
      if (ctx.mem[z][x]) {
        ok = false;
        witness = describe(ctx, ctx.pool[z]) + " in " + describe(ctx, ctx.pool[x]);
      }
  }
  report.add("C2 (only sets have elements)", ok, witness);
}

void check_c3(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (std::size_t x = 0; x < ctx.pool.size() && ok; ++x) {
    if (ctx.pool[x].is_atom()) continue;
    for (std::size_t y = 0; y < ctx.pool.size() && ok; ++y) {
      if (ctx.pool[y].is_atom()) continue;
      bool same_members = true;
      for (std::size_t z = 0; z < ctx.pool.size(); ++z)
        if (ctx.mem[z][x] != ctx.mem[z][y]) {
          same_members = false;
          break;
        }
      if (same_members != ctx.eq[x][y]) {
        ok = false;
        witness = describe(ctx, ctx.pool[x]) + " vs " + describe(ctx, ctx.pool[y]);
      }
    }
  }
  report.add("C3 (sets are determined by their elements)", ok, witness);
}

void check_c4(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (std::size_t x = 0; x < ctx.pool.size() && ok; ++x)
    for (std::size_t y = 0; y < ctx.pool.size() && ok; ++y)
      if (ctx.mem[x][y] && ctx.ranks[x] >= ctx.ranks[y]) {
        ok = false;
        witness = describe(ctx, ctx.pool[x]) + " in " + describe(ctx, ctx.pool[y]);
      }
  report.add("C4 surrogate (rank decreases along membership)", ok, witness);
}

void check_c5(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (const VSet& x : ctx.pool) {
    if (x.is_atom()) continue;
    VSet u = union_set(x);
    for (const VSet& z : ctx.pool) {
      bool in_union = ctx.member(z, u);
      bool in_some_member = false;
      for (const VSet& y : x.children())
        if (y.is_sup() && ctx.member(z, y)) {
          in_some_member = true;
          break;
        }
      if (in_union != in_some_member) {
        ok = false;
        witness = "union of " + describe(ctx, x) + " at " + describe(ctx, z);
        break;
      }
    }
    if (!ok) break;
  }
  report.add("C5 (union)", ok, witness);
}

void check_c6(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  for (std::size_t x = 0; x < ctx.pool.size() && ok; ++x)
    for (std::size_t y = 0; y < ctx.pool.size() && ok; ++y) {
      VSet u = pair_set(ctx.pool[x], ctx.pool[y]);
      for (std::size_t z = 0; z < ctx.pool.size(); ++z) {
        bool in_pair = ctx.member(ctx.pool[z], u);
        bool is_either = ctx.eq[z][x] || ctx.eq[z][y];
        if (in_pair != is_either) {
          ok = false;
          witness = "pair of " + describe(ctx, ctx.pool[x]) + ", " +
                    describe(ctx, ctx.pool[y]) + " at " + describe(ctx, ctx.pool[z]);
          break;
        }
      }
    }
  report.add("C6 (pairing)", ok, witness);
}

std::vector<std::pair<std::string, FormulaPtr>> separation_battery() {
  std::vector<std::pair<std::string, FormulaPtr>> battery;
  auto var = [](const std::string& n) { return make_term(Term::Var{n}); };
  battery.emplace_back("atom(x)", make_formula(Formula::IsAtom{var("x")}));
  battery.emplace_back("x = {}",
                       make_formula(Formula::Eq{var("x"), make_term(Term::SetLit{{}})}));
  battery.emplace_back("ex y in x . true",
                       make_formula(Formula::ExIn{"y", var("x"),
                                                  make_formula(Formula::Truth{})}));
  battery.emplace_back("set(x)", make_formula(Formula::IsSet{var("x")}));
  return battery;
}

void check_c7(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  Env env;
  for (const auto& [text, phi] : separation_battery()) {
    for (const VSet& u : ctx.pool) {
      if (u.is_atom()) continue;
      VSet v = separation(u, "x", *phi, env, ctx.table);
      for (const VSet& z : ctx.pool) {
        bool in_v = ctx.member(z, v);
        bool expected =
            ctx.member(z, u) && eval_formula(*phi, env.with("x", z), ctx.table);
        if (in_v != expected) {
          ok = false;
          witness = "{x in " + describe(ctx, u) + " : " + text + "} at " +
                    describe(ctx, z);
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  report.add("C7 (bounded separation)", ok, witness);
}

std::vector<std::pair<std::string, FormulaPtr>> relation_battery() {
  std::vector<std::pair<std::string, FormulaPtr>> battery;
  auto var = [](const std::string& n) { return make_term(Term::Var{n}); };
  battery.emplace_back("x = y", make_formula(Formula::Eq{var("x"), var("y")}));
  battery.emplace_back("x in y", make_formula(Formula::Mem{var("x"), var("y")}));
  battery.emplace_back("ex z in y . z = x",
                       make_formula(Formula::ExIn{
                           "z", var("y"), make_formula(Formula::Eq{var("z"), var("x")})}));
  return battery;
}

void check_c8(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  Env env;
  auto battery = relation_battery();
  for (std::size_t ai = 0; ai < ctx.pool.size() && ok; ++ai) {
    const VSet& a = ctx.pool[ai];
    if (a.is_atom()) continue;
    for (std::size_t bi = 0; bi < ctx.pool.size() && ok; ++bi) {
      const VSet& b = ctx.pool[bi];
      if (b.is_atom()) continue;
      VSet c = subset_collection_set(a, b, ctx.table);
      for (const auto& [text, phi] : battery) {
        // hypothesis: every member of a relates to some member of b
        bool hypothesis = true;
        for (const VSet& x : a.children()) {
          bool hit = false;
          for (const VSet& y : b.children())
            if (eval_formula(*phi, env.with("x", x).with("y", y), ctx.table)) {
              hit = true;
              break;
            }
          if (!hit) {
            hypothesis = false;
            break;
          }
        }
        if (!hypothesis) continue;
        // some subset d in c satisfies both collection clauses
        bool found = false;
        for (const VSet& d : c.children()) {
          bool forward = true;
          for (const VSet& x : a.children()) {
            bool hit = false;
            for (const VSet& y : d.children())
              if (eval_formula(*phi, env.with("x", x).with("y", y), ctx.table)) {
                hit = true;
                break;
              }
            if (!hit) {
              forward = false;
              break;
            }
          }
          if (!forward) continue;
          bool backward = true;
          for (const VSet& y : d.children()) {
            bool hit = false;
            for (const VSet& x : a.children())
              if (eval_formula(*phi, env.with("x", x).with("y", y), ctx.table)) {
                hit = true;
                break;
              }
            if (!hit) {
              backward = false;
              break;
            }
          }
          if (backward) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          witness = "a=" + describe(ctx, a) + ", b=" + describe(ctx, b) +
                    ", relation " + text;
          break;
        }
      }
    }
  }
  report.add("C8 (subset collection, finite witness)", ok, witness);
}

void check_c9(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  std::vector<std::pair<std::string, std::function<VSet(const VSet&)>>> maps;
  maps.emplace_back("successor", [](const VSet& x) { return succ_set(x); });
  maps.emplace_back("identity", [](const VSet& x) { return x; });
  maps.emplace_back("singleton", [](const VSet& x) { return VSet::sup({x}); });
  maps.emplace_back("constant empty", [](const VSet&) { return VSet(); });

  for (const auto& [name, h] : maps) {
    for (const VSet& a : ctx.pool) {
      if (a.is_atom()) continue;
      VSet b = collect_image(a, h);
      // forward: every member of a has its image in b
      bool forward = true;
      for (const VSet& x : a.children())
        if (!ctx.member(h(x), b)) {
          forward = false;
          break;
        }
      // backward: every member of b is the image of some member of a
      bool backward = true;
      for (const VSet& y : b.children()) {
        bool hit = false;
        for (const VSet& x : a.children())
          if (ctx.equal(y, h(x))) {
            hit = true;
            break;
          }
        if (!hit) {
          backward = false;
          break;
        }
      }
      if (!forward || !backward) {
        ok = false;
        witness = "map " + name + " over " + describe(ctx, a);
        break;
      }
    }
    if (!ok) break;
  }
  report.add("C9 (strong collection with explicit assignments)", ok, witness);
}

void check_atoms_set(const SuiteContext& ctx, CheckReport& report) {
  bool ok = true;
  std::string witness;
  VSet all_atoms = atoms_set(ctx.table);
  for (const VSet& z : ctx.pool) {
    bool in_set = ctx.member(z, all_atoms);
    if (in_set != z.is_atom()) {
      ok = false;
      witness = describe(ctx, z);
      break;
    }
  }
  report.add("atoms form a set", ok, witness);
}

void check_c10(const SuiteContext& ctx, CheckReport& report) {
  std::size_t n = ctx.config.omega_steps;
  VSet omega = omega_approx(n);
  bool ok = ctx.member(VSet(), omega);
  std::string witness;
  VSet current;
  for (std::size_t i = 0; ok && i < n; ++i) {
    if (!ctx.member(succ_set(current), omega)) {
      ok = false;
      witness = "successor of stage " + std::to_string(i) + " missing";
    }
    current = succ_set(current);
  }
  report.add("C10 (infinity, approximated: closure under successor verified up to " +
                 std::to_string(n == 0 ? 0 : n - 1) + ")",
             ok, witness);
}

}  // namespace

CheckReport run_axiom_suite(const AxiomSuiteConfig& config) {
  SuiteContext ctx{config, config.atoms, {}, {}, {}, {}};
  ctx.pool = enumerate_vsets(config.rank, config.breadth, config.atoms,
                             config.enum_cap);
  std::size_t n = ctx.pool.size();
  ctx.mem.assign(n, std::vector<bool>(n, false));
  ctx.eq.assign(n, std::vector<bool>(n, false));
  ctx.ranks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.ranks[i] = vset_rank(ctx.pool[i]);
    for (std::size_t j = 0; j < n; ++j) {
      ctx.mem[i][j] = ctx.member(ctx.pool[i], ctx.pool[j]);
      ctx.eq[i][j] = ctx.equal(ctx.pool[i], ctx.pool[j]);
    }
  }

  CheckReport report;
  report.add("enumerated " + std::to_string(n) + " sets (rank <= " +
                 std::to_string(config.rank) + ", breadth <= " +
                 std::to_string(config.breadth) + ")",
             true);
  check_c1(ctx, report);
  check_c2(ctx, report);
  check_c3(ctx, report);
  check_c4(ctx, report);
  check_c5(ctx, report);
  check_c6(ctx, report);
  check_c7(ctx, report);
  check_c8(ctx, report);
  check_c9(ctx, report);
  check_atoms_set(ctx, report);
  check_c10(ctx, report);
  return report;
}

}  // namespace setcat
