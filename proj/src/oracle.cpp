/*
 * Copyright 2026 The prax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prax/oracle.hpp"

#include <algorithm>
#include <map>

#include "prax/approx.hpp"
#include "prax/definites.hpp"
#include "prax/quotient.hpp"
#include "prax/representation.hpp"

namespace prax::oracle {

namespace {

bool subset_le(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool subset_lt(const Set& a, const Set& b) {
  return a != b && subset_le(a, b);
}

bool meets(const Set& a, const Set& b) {
  for (int x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

Set set_union(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// every subset of {0..n-1} as a Set, by counting
std::vector<Set> all_subsets(int n) {
  std::vector<Set> out;
  long total = 1L << n;
  for (long m = 0; m < total; ++m) {
    Set s;
    for (int i = 0; i < n; ++i) {
      if (m & (1L << i)) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Set to_set(Bits b) {
  Set s;
  for (int i = 0; i < kMaxUniverse; ++i) {
    if (b & bit(i)) s.insert(i);
  }
  return s;
}

Bits to_bits(const Set& s) {
  Bits b = 0;
  for (int i : s) b |= bit(i);
  return b;
}

bool reflexive(const BinaryRelation& r) {
  for (int x = 0; x < r.universe().size(); ++x) {
    if (!r.contains(x, x)) return false;
  }
  return true;
}

bool symmetric(const BinaryRelation& r) {
  int n = r.universe().size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.contains(x, y) && !r.contains(y, x)) return false;
    }
  }
  return true;
}

bool transitive(const BinaryRelation& r) {
  int n = r.universe().size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool weakly_transitive_scan(const BinaryRelation& r) {
  int n = r.universe().size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool proto_transitive_scan(const BinaryRelation& r) {
  int n = r.universe().size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (r.contains(x, y) && r.contains(y, z) && r.contains(y, x) &&
            r.contains(z, y) && !r.contains(x, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

BinaryRelation compose_naive(const BinaryRelation& r, const BinaryRelation& q) {
  int n = r.universe().size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      for (int y = 0; y < n; ++y) {
        if (r.contains(x, y) && q.contains(y, z)) {
          pairs.emplace_back(x, z);
          break;
        }
      }
    }
  }
  return BinaryRelation(r.universe(), std::move(pairs));
}

std::vector<Set> plain_neighborhoods(const BinaryRelation& r) {
  int n = r.universe().size();
  std::vector<Set> out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.contains(y, x)) out[x].insert(y);
    }
  }
  return out;
}

std::vector<Set> symm_neighborhoods(const BinaryRelation& r) {
  int n = r.universe().size();
  std::vector<Set> out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.contains(y, x) && r.contains(x, y)) out[x].insert(y);
    }
  }
  return out;
}

Set lower_proto(const BinaryRelation& r, const Set& a) {
  Set out;
  for (const Set& nb : plain_neighborhoods(r)) {
    if (subset_le(nb, a)) out = set_union(out, nb);
  }
  return out;
}

Set upper_proto(const BinaryRelation& r, const Set& a) {
  Set out;
  for (const Set& nb : plain_neighborhoods(r)) {
    if (meets(nb, a)) out = set_union(out, nb);
  }
  return out;
}

Set lower_symm(const BinaryRelation& r, const Set& a) {
  Set out;
  for (const Set& nb : symm_neighborhoods(r)) {
    if (subset_le(nb, a)) out = set_union(out, nb);
  }
  return out;
}

Set upper_symm(const BinaryRelation& r, const Set& a) {
  Set out;
  for (const Set& nb : symm_neighborhoods(r)) {
    if (meets(nb, a)) out = set_union(out, nb);
  }
  return out;
}

Set pointwise_lower(const BinaryRelation& r, const Set& a) {
  Set out;
  auto nbs = plain_neighborhoods(r);
  for (int x = 0; x < r.universe().size(); ++x) {
    if (subset_le(nbs[x], a)) out.insert(x);
  }
  return out;
}

Set pointwise_upper(const BinaryRelation& r, const Set& a) {
  Set out;
  auto nbs = plain_neighborhoods(r);
  for (int x = 0; x < r.universe().size(); ++x) {
    if (meets(nbs[x], a)) out.insert(x);
  }
  return out;
}

std::vector<Set> definite_family(const BinaryRelation& r,
                                 const std::string& op) {
  std::vector<Set> out;
  for (const Set& a : all_subsets(r.universe().size())) {
    bool fixed;
    if (op == "l") fixed = lower_proto(r, a) == a;
    else if (op == "u") fixed = upper_proto(r, a) == a;
    else if (op == "lo") fixed = lower_symm(r, a) == a;
    else if (op == "uo") fixed = upper_symm(r, a) == a;
    else if (op == "l+") fixed = pointwise_lower(r, a) == a;
    else if (op == "u+") fixed = pointwise_upper(r, a) == a;
    else if (op == "lu")
      fixed = lower_proto(r, a) == a && upper_proto(r, a) == a;
    else
      throw std::invalid_argument("unknown operator '" + op + "'");
    if (fixed) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<Set>> rough_classes(const BinaryRelation& r) {
  std::map<std::pair<Set, Set>, std::vector<Set>> by_key;
  for (const Set& a : all_subsets(r.universe().size())) {
    by_key[{lower_proto(r, a), upper_proto(r, a)}].push_back(a);
  }
  std::vector<std::vector<Set>> out;
  for (auto& [key, members] : by_key) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Set>> atom_classes(const BinaryRelation& r) {
  auto classes = rough_classes(r);
  auto key_of = [&](const std::vector<Set>& cls) {
    return std::make_pair(lower_proto(r, cls.front()),
                          upper_proto(r, cls.front()));
  };
  auto leq = [&](const std::vector<Set>& a, const std::vector<Set>& b) {
    auto ka = key_of(a), kb = key_of(b);
    return subset_le(ka.first, kb.first) && subset_le(ka.second, kb.second);
  };
  // bottom = the class containing ∅
  const std::vector<Set>* bottom = nullptr;
  for (const auto& cls : classes) {
    if (std::find(cls.begin(), cls.end(), Set{}) != cls.end()) bottom = &cls;
  }
  std::vector<std::vector<Set>> atoms;
  for (const auto& cls : classes) {
    if (&cls == bottom || !leq(*bottom, cls)) continue;
    bool covers_bottom = true;
    for (const auto& mid : classes) {
      if (&mid == bottom || &mid == &cls) continue;
      if (leq(*bottom, mid) && leq(mid, cls) &&
          !(key_of(mid) == key_of(cls))) {
        covers_bottom = false;
        break;
      }
    }
    if (covers_bottom) atoms.push_back(cls);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

NaiveCriticals critical_points_naive(const BinaryRelation& r) {
  NaiveCriticals out;
  const auto subsets = all_subsets(r.universe().size());
  std::map<Set, Set> l, u;
  for (const Set& a : subsets) {
    l[a] = lower_proto(r, a);
    u[a] = upper_proto(r, a);
  }

  for (const Set& x : subsets) {
    for (const Set& z : subsets) {
      if (subset_lt(z, x)) {
        // weak upper: ∀y (z = y^l ∧ x ⊂ y → x^u ⊂ y^u)
        bool weak = true;
        for (const Set& y : subsets) {
          if (l[y] == z && subset_lt(x, y) && !subset_lt(u[x], u[y])) {
            weak = false;
          }
        }
        if (weak) out.weak_upper.emplace_back(x, z);
        // upper: ∀v,y (z = y^l = v^l ∧ v ⊂ x ⊂ y → v^u = x^u ⊂ y^u)
        bool upper_ok = true;
        for (const Set& v : subsets) {
          if (!(l[v] == z && subset_lt(v, x))) continue;
          for (const Set& y : subsets) {
            if (!(l[y] == z && subset_lt(x, y))) continue;
            if (u[v] != u[x] || !subset_lt(u[x], u[y])) upper_ok = false;
          }
        }
        if (upper_ok) out.upper.emplace_back(x, z);
      }
      if (subset_lt(x, z)) {
        // weak lower: ∀y (z = y^u ∧ y ⊂ x → y^l ⊂ x^l)
        bool weak = true;
        for (const Set& y : subsets) {
          if (u[y] == z && subset_lt(y, x) && !subset_lt(l[y], l[x])) {
            weak = false;
          }
        }
        if (weak) out.weak_lower.emplace_back(x, z);
        // lower relative: ∀y,v (z = y^u = v^u ∧ y ⊂ x ⊂ v → y^l ⊂ x^l = v^l)
        bool ok = true;
        for (const Set& y : subsets) {
          if (!(u[y] == z && subset_lt(y, x))) continue;
          for (const Set& v : subsets) {
            if (!(u[v] == z && subset_lt(x, v))) continue;
            if (!subset_lt(l[y], l[x]) || l[x] != l[v]) ok = false;
          }
        }
        if (ok) out.lower_relative.emplace_back(x, z);
      }
    }
    bool absolute = true;
    for (const Set& y : subsets) {
      if (subset_lt(y, x) && !subset_lt(l[y], l[x])) absolute = false;
    }
    if (absolute) out.lower_absolute.push_back(x);
  }

  // bicritical: ∀x,y (a ⊂ x ⊆ y ⊂ b → shared approximations and strict gaps)
  for (const Set& a : subsets) {
    for (const Set& b : subsets) {
      if (!subset_lt(a, b)) continue;
      bool ok = true;
      for (const Set& x : subsets) {
        if (!(subset_lt(a, x) && subset_lt(x, b))) continue;
        if (!subset_lt(u[x], u[b]) || !subset_lt(l[a], l[x])) {
          ok = false;
          break;
        }
        for (const Set& y : subsets) {
          if (!(subset_le(x, y) && subset_lt(a, y) && subset_lt(y, b))) {
            continue;
          }
          if (u[x] != u[y] || l[x] != l[y]) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) out.bicritical.emplace_back(a, b);
    }
  }

  std::set<Set> upper_xs;
  for (const auto& [x, z] : out.upper) upper_xs.insert(x);
  for (const Set& x : out.lower_absolute) {
    if (upper_xs.count(x)) out.critical.push_back(x);
  }
  return out;
}

namespace {

CheckResult compare(const std::string& name, const std::string& law, bool same,
                    const std::string& where) {
  CheckResult c;
  c.name = name;
  c.law = law;
  c.status = same ? CheckStatus::pass : CheckStatus::fail;
  c.instances = 1;
  if (!same) {
    c.counterexamples = 1;
    c.detail = where;
  }
  return c;
}

}  // namespace

ConformanceReport oracle_suite(const BinaryRelation& r, Fault fault) {
  if (r.universe().size() > 8) {
    throw std::invalid_argument("oracle_suite is limited to 8 elements");
  }
  ConformanceReport rep;
  rep.fixture = "oracle";
  const int n = r.universe().size();
  const Universe& u = r.universe();
  NeighborhoodMap nm = NeighborhoodMap::of(r);

  // neighborhoods
  {
    auto naive_plain = plain_neighborhoods(r);
    auto naive_symm = symm_neighborhoods(r);
    bool same = true;
    std::string where;
    for (int x = 0; x < n && same; ++x) {
      if (to_bits(naive_plain[x]) != nm.plain_bits()[x] ||
          to_bits(naive_symm[x]) != nm.symm_bits()[x]) {
        same = false;
        where = "element " + u.name(x);
      }
    }
    rep.add(compare("neighborhoods", "bit-vector neighborhoods equal the "
                    "direct double loop", same, where));
  }

  // the six operators over every subset
  {
    bool same = true;
    std::string where;
    const Bits count = Bits{1} << n;
    for (Bits a = 0; a < count && same; ++a) {
      Set as = to_set(a);
      Bits fast_l = kernel::lower(nm.plain_bits(), a);
      if (fault == Fault::drop_lower_element && fast_l != 0) {
        fast_l &= fast_l - 1;  // injected defect for the self-test
      }
      struct Row {
        const char* name;
        Bits fast;
        Set naive;
      } rows[] = {
          {"l", fast_l, lower_proto(r, as)},
          {"u", kernel::upper(nm.plain_bits(), a), upper_proto(r, as)},
          {"lo", kernel::lower(nm.symm_bits(), a), lower_symm(r, as)},
          {"uo", kernel::upper(nm.symm_bits(), a), upper_symm(r, as)},
          {"l+", kernel::lower_point(nm.plain_bits(), a),
           pointwise_lower(r, as)},
          {"u+", kernel::upper_point(nm.plain_bits(), a),
           pointwise_upper(r, as)},
      };
      for (const Row& row : rows) {
        if (row.fast != to_bits(row.naive)) {
          same = false;
          where = std::string(row.name) + " at " + Subset(u, a).to_string();
          break;
        }
      }
    }
    rep.add(compare("operators", "six operators equal their quantifier "
                    "translations on every subset", same, where));
  }

  // definite families
  {
    bool same = true;
    std::string where;
    for (const char* op : {"l", "u", "lo", "uo", "lu", "l+", "u+"}) {
      auto naive = definite_family(r, op);
      auto fast = prax::definite_family(nm, op, Caps::uniform(8));
      std::vector<Bits> naive_bits, fast_bits;
      for (const Set& s : naive) naive_bits.push_back(to_bits(s));
      for (const Subset& s : fast.members) fast_bits.push_back(s.bits());
      if (fault == Fault::extra_definite && std::string(op) == "lu") {
        // inject a subset that is almost surely not definite
        fast_bits.push_back(fast_bits.empty() ? 1 : fast_bits.back() ^ 1);
      }
      std::sort(naive_bits.begin(), naive_bits.end());
      std::sort(fast_bits.begin(), fast_bits.end());
      if (naive_bits != fast_bits) {
        same = false;
        where = std::string("family ") + op;
        break;
      }
    }
    rep.add(compare("definite_families", "fixed-point families match the "
                    "naive powerset scan", same, where));
  }

  // rough classes and atoms
  {
    auto naive = rough_classes(r);
    QuotientPoset h = QuotientPoset::build(nm, Caps::uniform(8));
    std::vector<std::vector<Set>> fast;
    for (const RoughClass& c : h.classes()) {
      std::vector<Set> members;
      for (const Subset& m : c.members) members.push_back(to_set(m.bits()));
      std::sort(members.begin(), members.end());
      fast.push_back(std::move(members));
    }
    std::sort(fast.begin(), fast.end());
    for (auto& cls : naive) std::sort(cls.begin(), cls.end());
    std::sort(naive.begin(), naive.end());
    bool same = naive == fast;
    rep.add(compare("rough_classes", "≈-classes partition ℘(S) identically "
                    "in both implementations", same, ""));

    auto naive_atoms = atom_classes(r);
    std::vector<std::vector<Set>> fast_atoms;
    for (std::size_t idx : h.atoms()) {
      std::vector<Set> members;
      for (const Subset& m : h.classes()[idx].members) {
        members.push_back(to_set(m.bits()));
      }
      std::sort(members.begin(), members.end());
      fast_atoms.push_back(std::move(members));
    }
    std::sort(fast_atoms.begin(), fast_atoms.end());
    for (auto& cls : naive_atoms) std::sort(cls.begin(), cls.end());
    std::sort(naive_atoms.begin(), naive_atoms.end());
    rep.add(compare("atoms", "covers of the bottom class coincide",
                    naive_atoms == fast_atoms, ""));
  }

  // critical points
  {
    auto naive = critical_points_naive(r);
    auto fast = critical_points(nm, Caps::uniform(8));
    auto pairs_of = [](const std::vector<CriticalPair>& v) {
      std::vector<std::pair<Set, Set>> out;
      for (const CriticalPair& p : v) out.emplace_back(to_set(p.x), to_set(p.other));
      std::sort(out.begin(), out.end());
      return out;
    };
    auto sets_of = [](const std::vector<Bits>& v) {
      std::vector<Set> out;
      for (Bits b : v) out.push_back(to_set(b));
      std::sort(out.begin(), out.end());
      return out;
    };
    auto norm = [](std::vector<std::pair<Set, Set>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    bool same = pairs_of(fast.weak_upper) == norm(naive.weak_upper) &&
                pairs_of(fast.upper) == norm(naive.upper) &&
                pairs_of(fast.bicritical) == norm(naive.bicritical) &&
                pairs_of(fast.weak_lower) == norm(naive.weak_lower) &&
                pairs_of(fast.lower_relative) == norm(naive.lower_relative) &&
                sets_of(fast.lower_absolute) == [&] {
                  auto v = naive.lower_absolute;
                  std::sort(v.begin(), v.end());
                  return v;
                }() &&
                sets_of(fast.critical) == [&] {
                  auto v = naive.critical;
                  std::sort(v.begin(), v.end());
                  return v;
                }();
    rep.add(compare("critical_points", "critical-point lists equal the "
                    "direct quantifier evaluation", same, ""));
  }

  return rep;
}

}  // namespace prax::oracle
