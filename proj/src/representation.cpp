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

#include "prax/representation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prax/definites.hpp"

namespace prax {

namespace {

// strict inclusion of masks
bool strictly_below(Bits a, Bits b) { return a != b && (a & ~b) == 0; }

bool incomparable(Bits a, Bits b) {
  return (a & ~b) != 0 && (b & ~a) != 0;
}

std::vector<Bits> dedupe_masks(const NeighborhoodMap& n,
                               const std::vector<Subset>& alpha,
                               const char* op) {
  std::vector<Bits> out;
  for (const Subset& s : alpha) {
    require_same_universe(n.universe(), s.universe(), op);
    if (std::find(out.begin(), out.end(), s.bits()) == out.end()) {
      out.push_back(s.bits());
    }
  }
  return out;
}

bool proto_definite(const NeighborhoodMap& n, Bits a) {
  return kernel::lower(n.plain_bits(), a) == a &&
         kernel::upper(n.plain_bits(), a) == a;
}

std::string render(const Universe& u, Bits b) {
  return Subset(u, b).to_string();
}

}  // namespace

bool is_upper_broom(const NeighborhoodMap& n, const std::vector<Subset>& alpha) {
  std::vector<Bits> a = dedupe_masks(n, alpha, "is_upper_broom");
  if (a.empty()) return false;
  for (Bits m : a) {
    if (popcount(m) == 1) return false;  // non-singleton subsets only
  }
  // A singleton collection around a proto-definite set never qualifies.
  if (a.size() == 1 && proto_definite(n, a[0])) return false;

  const Bits shared_u = kernel::upper(n.plain_bits(), a[0]);
  for (Bits m : a) {
    if (kernel::upper(n.plain_bits(), m) != shared_u) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!incomparable(a[i], a[j])) return false;
    }
  }
  // Maximality: condition 1 confines any extension to the subsets sharing
  // the upper value, so a bounded scan decides it.
  const Bits count = Bits{1} << n.size();
  for (Bits z = 0; z < count; ++z) {
    if (popcount(z) == 1) continue;
    if (std::find(a.begin(), a.end(), z) != a.end()) continue;
    if (kernel::upper(n.plain_bits(), z) != shared_u) continue;
    bool ok = true;
    for (Bits m : a) {
      if (!incomparable(z, m)) {
        ok = false;
        break;
      }
    }
    if (ok) return false;  // extension found
  }
  return true;
}

bool is_lower_broom(const NeighborhoodMap& n, const std::vector<Subset>& alpha) {
  std::vector<Bits> a = dedupe_masks(n, alpha, "is_lower_broom");
  if (a.empty()) return false;
  for (Bits m : a) {
    if (popcount(m) == 1) return false;
  }
  const Bits shared_l = kernel::lower(n.plain_bits(), a[0]);
  for (Bits m : a) {
    if (kernel::lower(n.plain_bits(), m) != shared_l) return false;
    if (shared_l == m) return false;  // x^l = y^l ≠ x, per member
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!incomparable(a[i], a[j])) return false;
    }
  }
  // Literal sub-collection clause: every proper sub-collection with at least
  // two elements must fail a condition. The pairwise conditions are
  // inherited downward, so 2-element sub-collections decide it.
  if (a.size() >= 3) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        bool pair_ok = kernel::lower(n.plain_bits(), a[i]) == shared_l &&
                       kernel::lower(n.plain_bits(), a[j]) == shared_l &&
                       shared_l != a[i] && shared_l != a[j] &&
                       incomparable(a[i], a[j]);
        if (pair_ok) return false;
      }
    }
  }
  return true;
}

namespace {

// Maximal cliques of the incomparability graph over `family` = maximal
// antichains. Bron–Kerbosch with pivoting; stops after `limit` outputs.
class AntichainEnumerator {
 public:
  AntichainEnumerator(std::vector<Bits> family, std::size_t limit)
      : family_(std::move(family)), limit_(limit) {
    const std::size_t m = family_.size();
    adj_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        bool inc = incomparable(family_[i], family_[j]);
        adj_[i][j] = adj_[j][i] = inc;
      }
    }
  }

  void run() {
    std::vector<std::size_t> r, p, x;
    for (std::size_t i = 0; i < family_.size(); ++i) p.push_back(i);
    expand(r, p, x);
  }

  std::vector<std::vector<Bits>> cliques;
  bool truncated = false;

 private:
  void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p,
              std::vector<std::size_t> x) {
    if (truncated) return;
    if (p.empty() && x.empty()) {
      std::vector<Bits> out;
      for (std::size_t i : r) out.push_back(family_[i]);
      cliques.push_back(std::move(out));
      if (cliques.size() >= limit_) truncated = true;
      return;
    }
    // pivot: vertex of p ∪ x with most neighbors in p
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t v) {
      std::size_t deg = 0;
      for (std::size_t w : p) {
        if (adj_[v][w]) ++deg;
      }
      if (!have || deg > best) {
        have = true;
        best = deg;
        pivot = v;
      }
    };
    for (std::size_t v : p) consider(v);
    for (std::size_t v : x) consider(v);

    std::vector<std::size_t> candidates;
    for (std::size_t v : p) {
      if (!adj_[pivot][v]) candidates.push_back(v);
    }
    for (std::size_t v : candidates) {
      std::vector<std::size_t> p2, x2;
      for (std::size_t w : p) {
        if (adj_[v][w]) p2.push_back(w);
      }
      for (std::size_t w : x) {
        if (adj_[v][w]) x2.push_back(w);
      }
      r.push_back(v);
      expand(r, std::move(p2), std::move(x2));
      r.pop_back();
      if (truncated) return;
      p.erase(std::remove(p.begin(), p.end(), v), p.end());
      x.push_back(v);
    }
  }

  std::vector<Bits> family_;
  std::size_t limit_;
  std::vector<std::vector<bool>> adj_;
};

}  // namespace

BroomEnumeration enumerate_brooms(const NeighborhoodMap& n, const Caps& caps,
                                  std::size_t limit) {
  require_cap(n.size(), caps.search, "enumerate_brooms");
  BroomEnumeration out;
  const Universe& u = n.universe();
  const Bits count = Bits{1} << n.size();

  // Upper brooms: maximal antichains within each shared-u family of
  // non-singleton subsets, minus the excluded definite singletons.
  std::map<Bits, std::vector<Bits>> by_u;
  for (Bits a = 0; a < count; ++a) {
    if (popcount(a) == 1) continue;
    by_u[kernel::upper(n.plain_bits(), a)].push_back(a);
  }
  for (auto& [value, family] : by_u) {
    AntichainEnumerator en(family, limit - std::min(limit, out.upper.size()));
    en.run();
    out.truncated = out.truncated || en.truncated;
    for (auto& clique : en.cliques) {
      if (clique.size() == 1 && proto_definite(n, clique[0])) continue;
      std::sort(clique.begin(), clique.end(),
                [](Bits a, Bits b) { return canonical_less(a, b); });
      std::vector<Subset> broom;
      for (Bits b : clique) broom.emplace_back(u, b);
      out.upper.push_back(std::move(broom));
    }
    if (out.upper.size() >= limit) {
      out.truncated = true;
      break;
    }
  }

  // Lower brooms: the literal sub-collection clause limits them to one or
  // two members, so direct scans suffice.
  std::map<Bits, std::vector<Bits>> by_l;
  for (Bits a = 0; a < count; ++a) {
    if (popcount(a) == 1) continue;
    Bits l = kernel::lower(n.plain_bits(), a);
    if (l == a) continue;  // violates x^l ≠ x
    by_l[l].push_back(a);
  }
  for (auto& [value, family] : by_l) {
    for (std::size_t i = 0; i < family.size() && !out.truncated; ++i) {
      out.lower.push_back({Subset(u, family[i])});
      if (out.lower.size() >= limit) out.truncated = true;
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (incomparable(family[i], family[j])) {
          out.lower.push_back({Subset(u, family[i]), Subset(u, family[j])});
          if (out.lower.size() >= limit) {
            out.truncated = true;
            break;
          }
        }
      }
    }
    // whether the clause ever rejects a candidate: any antichain triple
    for (std::size_t i = 0;
         i < family.size() && !out.lower_clause3_discriminating; ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!incomparable(family[i], family[j])) continue;
        for (std::size_t k = j + 1; k < family.size(); ++k) {
          if (incomparable(family[i], family[k]) &&
              incomparable(family[j], family[k])) {
            out.lower_clause3_discriminating = true;
            break;
          }
        }
      }
    }
  }
  return out;
}

const char* Bruinval::kind_name(Kind k) {
  switch (k) {
    case Kind::interval0: return "interval-0";
    case Kind::open_to_set: return "open-to-set";
    case Kind::closed_to_set: return "closed-to-set";
    case Kind::set_open: return "set-to-set-open";
    case Kind::set_closed: return "set-to-set-closed";
    case Kind::semi_closed: return "semi-closed";
  }
  return "?";
}

Bruinval::Kind Bruinval::parse_kind(const std::string& name) {
  if (name == "interval-0") return Kind::interval0;
  if (name == "open-to-set") return Kind::open_to_set;
  if (name == "closed-to-set") return Kind::closed_to_set;
  if (name == "set-to-set-open") return Kind::set_open;
  if (name == "set-to-set-closed") return Kind::set_closed;
  if (name == "semi-closed") return Kind::semi_closed;
  throw std::invalid_argument("unknown bruinval kind '" + name + "'");
}

namespace {

void collect_between(Bits count, const std::vector<Bits>& left,
                     const std::vector<Bits>& right, bool closed_left,
                     bool closed_right, std::set<Bits>& out) {
  for (Bits z = 0; z < count; ++z) {
    bool above = false;
    for (Bits a : left) {
      if (closed_left ? (a & ~z) == 0 : strictly_below(a, z)) {
        above = true;
        break;
      }
    }
    if (!above) continue;
    for (Bits b : right) {
      if (closed_right ? (z & ~b) == 0 : strictly_below(z, b)) {
        out.insert(z);
        break;
      }
    }
  }
}

std::vector<Bits> masks_of(const std::vector<Subset>& v, const Universe& u,
                           const char* op) {
  std::vector<Bits> out;
  for (const Subset& s : v) {
    require_same_universe(u, s.universe(), op);
    out.push_back(s.bits());
  }
  return out;
}

}  // namespace

namespace {

// The universe carried by the first endpoint present.
const Universe& bruinval_universe(const Bruinval& b) {
  switch (b.kind) {
    case Bruinval::Kind::interval0:
    case Bruinval::Kind::open_to_set:
    case Bruinval::Kind::closed_to_set:
      return b.x.universe();
    case Bruinval::Kind::set_open:
    case Bruinval::Kind::set_closed:
      if (b.alpha.empty() && b.beta.empty()) {
        throw std::invalid_argument(
            "set-to-set bruinval needs at least one endpoint collection");
      }
      return b.alpha.empty() ? b.beta[0].universe() : b.alpha[0].universe();
    case Bruinval::Kind::semi_closed:
      for (const auto* v : {&b.alpha, &b.alpha2, &b.beta, &b.beta2}) {
        if (!v->empty()) return (*v)[0].universe();
      }
      throw std::invalid_argument(
          "semi-closed bruinval needs at least one endpoint collection");
  }
  return b.x.universe();
}

}  // namespace

std::vector<Subset> bruinval_members(const Bruinval& b, const Caps& caps) {
  const Universe& u = bruinval_universe(b);
  require_cap(u.size(), caps.definites, "bruinval_members");
  const Bits count = Bits{1} << u.size();
  std::set<Bits> members;

  switch (b.kind) {
    case Bruinval::Kind::interval0: {
      require_same_universe(u, b.y.universe(), "bruinval_members");
      collect_between(count, {b.x.bits()}, {b.y.bits()}, b.closed_left,
                      b.closed_right, members);
      break;
    }
    case Bruinval::Kind::open_to_set: {
      if (b.closed_left && b.closed_right) {
        throw std::invalid_argument(
            "open-to-set bruinval cannot be closed on both ends");
      }
      collect_between(count, {b.x.bits()},
                      masks_of(b.alpha, u, "bruinval_members"), b.closed_left,
                      b.closed_right, members);
      break;
    }
    case Bruinval::Kind::closed_to_set: {
      collect_between(count, {b.x.bits()},
                      masks_of(b.alpha, u, "bruinval_members"), true, true,
                      members);
      break;
    }
    case Bruinval::Kind::set_open: {
      collect_between(count, masks_of(b.alpha, u, "bruinval_members"),
                      masks_of(b.beta, u, "bruinval_members"), false, false,
                      members);
      break;
    }
    case Bruinval::Kind::set_closed: {
      collect_between(count, masks_of(b.alpha, u, "bruinval_members"),
                      masks_of(b.beta, u, "bruinval_members"), b.closed_left,
                      b.closed_right, members);
      break;
    }
    case Bruinval::Kind::semi_closed: {
      auto a1 = masks_of(b.alpha, u, "bruinval_members");
      auto a2 = masks_of(b.alpha2, u, "bruinval_members");
      auto b1 = masks_of(b.beta, u, "bruinval_members");
      auto b2 = masks_of(b.beta2, u, "bruinval_members");
      collect_between(count, a1, b1, false, false, members);  // (α1,β1)
      collect_between(count, a2, b2, true, true, members);    // [α2,β2]
      collect_between(count, a1, b2, false, true, members);   // (α1,β2]
      collect_between(count, a2, b1, true, false, members);   // [α2,β1)
      break;
    }
  }

  std::vector<Bits> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(),
            [](Bits a, Bits b) { return canonical_less(a, b); });
  std::vector<Subset> out;
  out.reserve(sorted.size());
  for (Bits m : sorted) out.emplace_back(u, m);
  return out;
}

bool is_requal_constant(const NeighborhoodMap& n,
                        const std::vector<Subset>& c) {
  if (c.size() <= 1) return true;
  Bits l0 = kernel::lower(n.plain_bits(), c[0].bits());
  Bits u0 = kernel::upper(n.plain_bits(), c[0].bits());
  for (const Subset& s : c) {
    require_same_universe(n.universe(), s.universe(), "is_requal_constant");
    if (kernel::lower(n.plain_bits(), s.bits()) != l0 ||
        kernel::upper(n.plain_bits(), s.bits()) != u0) {
      return false;
    }
  }
  return true;
}

bool is_full_requal_set(const QuotientPoset& h, const std::vector<Subset>& c) {
  if (c.empty()) return false;
  std::set<Bits> distinct;
  std::size_t cls = h.class_of(c[0]);
  for (const Subset& s : c) {
    if (h.class_of(s) != cls) return false;
    distinct.insert(s.bits());
  }
  return distinct.size() == h.classes()[cls].members.size();
}

bool is_full_requal_set(const NeighborhoodMap& n,
                        const std::vector<Subset>& c) {
  if (c.empty()) return false;
  return is_full_requal_set(QuotientPoset::build(n, Caps::uniform(n.size())),
                            c);
}

namespace {

// fn over every proper submask of m, including 0 (none when m == 0).
template <typename Fn>
void for_proper_submasks(Bits m, Fn&& fn) {
  if (m == 0) return;
  for (Bits s = (m - 1) & m;; s = (s - 1) & m) {
    fn(s);
    if (s == 0) break;
  }
}

}  // namespace

CriticalReport critical_points(const NeighborhoodMap& n, const Caps& caps) {
  ApproxTable t = ApproxTable::build(n, caps.critical, "critical_points");
  const Bits count = Bits{1} << n.size();
  const Bits full = n.universe().full_mask();
  CriticalReport rep;
  rep.universe = n.universe();

  auto strictly = [](Bits a, Bits b) { return strictly_below(a, b); };

  for (Bits x = 0; x < count; ++x) {
    // strict supersets of x
    auto for_supersets = [&](auto&& fn) {
      for (Bits y = x;;) {
        y = (y + 1) | x;
        if (y > full) break;
        fn(y);
      }
    };

    // weak upper / upper: relative z ⊂ x
    for_proper_submasks(x, [&](Bits z) {
      bool weak_ok = true, weak_vac = true;
      bool has_v = false, has_y = false;
      for_supersets([&](Bits y) {
        if (t.l[y] != z) return;
        has_y = true;
        weak_vac = false;
        if (!strictly(t.u[x], t.u[y])) weak_ok = false;
      });
      for_proper_submasks(x, [&](Bits v) {
        if (t.l[v] == z) has_v = true;
      });
      if (weak_ok) rep.weak_upper.push_back({x, z, weak_vac});
      if (has_v && has_y) {
        // both quantifier ranges inhabited: the factored conditions
        bool up_ok = true;
        for_proper_submasks(x, [&](Bits v) {
          if (t.l[v] == z && t.u[v] != t.u[x]) up_ok = false;
        });
        if (up_ok) {
          for_supersets([&](Bits y) {
            if (t.l[y] == z && !strictly(t.u[x], t.u[y])) up_ok = false;
          });
        }
        if (up_ok) rep.upper.push_back({x, z, false});
      } else {
        rep.upper.push_back({x, z, true});
      }
    });

    // weak lower / lower: relative z ⊃ x
    for_supersets([&](Bits z) {
      bool weak_ok = true, weak_vac = true;
      bool has_y = false, has_v = false;
      for_proper_submasks(x, [&](Bits y) {
        if (t.u[y] == z) {
          has_y = true;
          weak_vac = false;
          if (!strictly(t.l[y], t.l[x])) weak_ok = false;
        }
      });
      if (weak_ok) rep.weak_lower.push_back({x, z, weak_vac});

      for_supersets([&](Bits v) {
        if (t.u[v] == z) has_v = true;
      });
      if (has_y && has_v) {
        bool ok = true;
        for_proper_submasks(x, [&](Bits y) {
          if (t.u[y] == z && !strictly(t.l[y], t.l[x])) ok = false;
        });
        if (ok) {
          for_supersets([&](Bits v) {
            if (t.u[v] == z && t.l[x] != t.l[v]) ok = false;
          });
        }
        if (ok) rep.lower_relative.push_back({x, z, false});
      } else {
        rep.lower_relative.push_back({x, z, true});
      }
    });

    // absolute lower critical
    {
      bool ok = true;
      for_proper_submasks(x, [&](Bits y) {
        if (!strictly(t.l[y], t.l[x])) ok = false;
      });
      if (ok) rep.lower_absolute.push_back(x);
    }
  }

  // bicritical pairs (a, b), a ⊂ b
  for (Bits b = 0; b < count; ++b) {
    for (Bits a = (b - 1) & b;; a = (a - 1) & b) {
      if (b != 0) {
        bool ok = true, vacuous = true;
        Bits gap = b & ~a;
        // x = a | s for proper nonempty submasks s of gap
        for (Bits s = (gap - 1) & gap; s != 0 && ok; s = (s - 1) & gap) {
          Bits x = a | s;
          vacuous = false;
          if (!strictly(t.u[x], t.u[b]) || !strictly(t.l[a], t.l[x])) {
            ok = false;
            break;
          }
          // y strictly between x and b
          Bits rest = gap & ~s;
          for (Bits q = (rest - 1) & rest; q != 0; q = (q - 1) & rest) {
            Bits y = x | q;
            if (t.u[x] != t.u[y] || t.l[x] != t.l[y]) {
              ok = false;
              break;
            }
          }
          // include the x == y case implicitly (conditions above cover it)
        }
        if (ok) rep.bicritical.push_back({a, b, vacuous});
      }
      if (a == 0 || b == 0) break;
    }
  }

  // critical = lower_absolute ∩ {x upper-critical relative some z}
  std::set<Bits> upper_xs;
  for (const CriticalPair& p : rep.upper) upper_xs.insert(p.x);
  for (Bits x : rep.lower_absolute) {
    if (upper_xs.count(x)) rep.critical.push_back(x);
  }
  return rep;
}

const ClaimCheck* FullSetTheoremReport::find(const std::string& name) const {
  for (const ClaimCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class ClaimContext {
 public:
  ClaimContext(const NeighborhoodMap& n, const Caps& caps)
      : n_(n),
        table_(ApproxTable::build(n, caps.search, "full_set_theorems_check")),
        quotient_(QuotientPoset::build(n, Caps::uniform(n.size()))),
        lu_(definite_family(n, "lu", Caps::uniform(n.size()))),
        count_(Bits{1} << n.size()),
        full_(n.universe().full_mask()) {}

  const NeighborhoodMap& n_;
  ApproxTable table_;
  QuotientPoset quotient_;
  DefiniteFamily lu_;
  Bits count_;
  Bits full_;

  Bits l(Bits a) const { return table_.l[a]; }
  Bits u(Bits a) const { return table_.u[a]; }

  std::vector<Bits> interval(Bits x, Bits y, bool cl, bool cr) const {
    std::vector<Bits> out;
    if ((x & ~y) != 0) return out;  // nothing between incomparable endpoints
    Bits gap = y & ~x;
    for (Bits s = gap;; s = (s - 1) & gap) {
      Bits z = x | s;
      bool left_ok = cl ? true : z != x;
      bool right_ok = cr ? true : z != y;
      if (left_ok && right_ok) out.push_back(z);
      if (s == 0) break;
    }
    return out;
  }

  bool requal_constant(const std::vector<Bits>& zs) const {
    if (zs.size() <= 1) return true;
    for (const Bits z : zs) {
      if (l(z) != l(zs[0]) || u(z) != u(zs[0])) return false;
    }
    return true;
  }

  bool full_class(const std::vector<Bits>& zs) const {
    if (zs.empty()) return false;
    std::size_t cls = quotient_.class_of_bits(zs[0]);
    std::set<Bits> distinct;
    for (Bits z : zs) {
      if (quotient_.class_of_bits(z) != cls) return false;
      distinct.insert(z);
    }
    return distinct.size() == quotient_.classes()[cls].members.size();
  }

  std::string show(Bits b) const { return render(n_.universe(), b); }
};

void record_failure(ClaimCheck& c, const std::string& witness) {
  ++c.failures;
  if (c.witnesses.size() < 3) c.witnesses.push_back(witness);
}

// [x,y] with definite endpoints is requal-constant iff x = y.
ClaimCheck claim_definite_closed_interval(ClaimContext& ctx) {
  ClaimCheck c{"definite_closed_interval_requal_iff_equal",
               "for x ⊆ y in δ_lu: [x,y] requal-constant iff x = y"};
  for (const Subset& xs : ctx.lu_.members) {
    for (const Subset& ys : ctx.lu_.members) {
      Bits x = xs.bits(), y = ys.bits();
      if ((x & ~y) != 0) continue;
      ++c.hypothesis_cases;
      bool rc = ctx.requal_constant(ctx.interval(x, y, true, true));
      if (rc != (x == y)) {
        record_failure(c, "x=" + ctx.show(x) + " y=" + ctx.show(y));
      }
    }
  }
  return c;
}

// Half-open intervals with distinct definite endpoints contain no two
// distinct requal elements.
ClaimCheck claim_definite_halfopen(ClaimContext& ctx) {
  ClaimCheck c{"definite_halfopen_no_two_requal",
               "for x ⊂ y in δ_lu: [x,y) and (x,y] with ≥2 members are not "
               "requal-constant"};
  for (const Subset& xs : ctx.lu_.members) {
    for (const Subset& ys : ctx.lu_.members) {
      Bits x = xs.bits(), y = ys.bits();
      if (x == y || (x & ~y) != 0) continue;
      ++c.hypothesis_cases;
      auto left = ctx.interval(x, y, true, false);
      auto right = ctx.interval(x, y, false, true);
      bool any = false;
      if (left.size() >= 2) {
        any = true;
        if (ctx.requal_constant(left)) {
          record_failure(c, "[x,y) x=" + ctx.show(x) + " y=" + ctx.show(y));
        }
      }
      if (right.size() >= 2) {
        any = true;
        if (ctx.requal_constant(right)) {
          record_failure(c, "(x,y] x=" + ctx.show(x) + " y=" + ctx.show(y));
        }
      }
      if (!any) ++c.vacuous_cases;
    }
  }
  return c;
}

// (x,y) for a cover pair in δ_lu is claimed to be a full class.
ClaimCheck claim_cover_open_interval(ClaimContext& ctx) {
  ClaimCheck c{"definite_cover_open_interval_full",
               "for x covered by y in δ_lu: non-empty (x,y) is a full requal "
               "class"};
  const auto& m = ctx.lu_.members;
  for (const Subset& xs : m) {
    for (const Subset& ys : m) {
      Bits x = xs.bits(), y = ys.bits();
      if (x == y || (x & ~y) != 0) continue;
      bool cover = true;
      for (const Subset& ws : m) {
        Bits w = ws.bits();
        if (w != x && w != y && (x & ~w) == 0 && (w & ~y) == 0) {
          cover = false;
          break;
        }
      }
      if (!cover) continue;
      ++c.hypothesis_cases;
      auto open = ctx.interval(x, y, false, false);
      if (open.empty()) {
        ++c.vacuous_cases;
        continue;
      }
      if (!ctx.full_class(open)) {
        record_failure(c, "x=" + ctx.show(x) + " y=" + ctx.show(y));
      }
    }
  }
  return c;
}

// [x,y) under the definite-cover and singleton-difference hypotheses.
ClaimCheck claim_halfopen_sufficient(ClaimContext& ctx) {
  ClaimCheck c{"halfopen_cover_full_sufficient",
               "x^l=y^l, x^u=y^u, x^l,y^u in δ_lu with y^u covering x^l, "
               "|x∖x^l|=1, |y^u∖y|=1 ⇒ non-empty [x,y) is a full class"};
  for (Bits x = 0; x < ctx.count_; ++x) {
    for (Bits y = x;; y = (y + 1) | x) {
      if (y > ctx.full_) break;
      do {
        if (ctx.l(x) != ctx.l(y) || ctx.u(x) != ctx.u(y)) break;
        Bits xl = ctx.l(x), yu = ctx.u(y);
        if (!ctx.lu_.contains_bits(xl) || !ctx.lu_.contains_bits(yu)) break;
        if (popcount(x & ~xl) != 1 || popcount(yu & ~y) != 1) break;
        bool cover = strictly_below(xl, yu);
        if (cover) {
          for (const Subset& ws : ctx.lu_.members) {
            Bits w = ws.bits();
            if (w != xl && w != yu && (xl & ~w) == 0 && (w & ~yu) == 0) {
              cover = false;
              break;
            }
          }
        }
        if (!cover) break;
        ++c.hypothesis_cases;
        auto members = ctx.interval(x, y, true, false);
        if (members.empty()) {
          ++c.vacuous_cases;
          break;
        }
        if (!ctx.full_class(members)) {
          record_failure(c, "x=" + ctx.show(x) + " y=" + ctx.show(y));
        }
      } while (false);
    }
  }
  return c;
}

// [x,y] when x is its own lower value, uppers agree, and y^u∖y is a point.
ClaimCheck claim_closed_sufficient(ClaimContext& ctx) {
  ClaimCheck c{"closed_interval_full_sufficient",
               "x^l=y^l=x, x^u=y^u, |y^u∖y|=1 ⇒ [x,y] is a full class"};
  for (Bits x = 0; x < ctx.count_; ++x) {
    if (ctx.l(x) != x) continue;
    for (Bits y = x;; y = (y + 1) | x) {
      if (y > ctx.full_) break;
      if (ctx.l(y) == x && ctx.u(y) == ctx.u(x) &&
          popcount(ctx.u(y) & ~y) == 1) {
        ++c.hypothesis_cases;
        if (!ctx.full_class(ctx.interval(x, y, true, true))) {
          record_failure(c, "x=" + ctx.show(x) + " y=" + ctx.show(y));
        }
      }
    }
  }
  return c;
}

// (x,y] under the same style of hypotheses, plus the disjointness claim.
ClaimCheck claim_halfopen_right(ClaimContext& ctx) {
  ClaimCheck c{"halfopen_right_full_disjoint",
               "x^l=y^l=x, all z in (x,y] share y^u, |y^u∖y|=1 ⇒ (x,y] is a "
               "full class disjoint from [x,x^u]"};
  for (Bits x = 0; x < ctx.count_; ++x) {
    if (ctx.l(x) != x) continue;
    for (Bits y = x;; y = (y + 1) | x) {
      if (y > ctx.full_) break;
      if (y == x) continue;
      if (ctx.l(y) != x || popcount(ctx.u(y) & ~y) != 1) continue;
      auto members = ctx.interval(x, y, false, true);
      bool shared = true;
      for (Bits z : members) {
        if (ctx.u(z) != ctx.u(y)) {
          shared = false;
          break;
        }
      }
      if (!shared) continue;
      ++c.hypothesis_cases;
      bool ok = ctx.full_class(members);
      if (ok) {
        auto box = ctx.interval(x, ctx.u(x), true, true);
        std::set<Bits> in_box(box.begin(), box.end());
        for (Bits z : members) {
          if (in_box.count(z)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        record_failure(c, "x=" + ctx.show(x) + " y=" + ctx.show(y));
      }
    }
  }
  return c;
}

// (x^l, x^u) when x^uu = x^u: requal-constant, and full when [x^l,x^u)
// is not full.
std::pair<ClaimCheck, ClaimCheck> claim_boundary(ClaimContext& ctx) {
  ClaimCheck a{"boundary_interval_requal",
               "x^uu = x^u ⇒ (x^l, x^u) is requal-constant"};
  ClaimCheck b{"boundary_interval_full_when",
               "x^uu = x^u and [x^l,x^u) not full ⇒ non-empty (x^l,x^u) is a "
               "full class"};
  for (Bits x = 0; x < ctx.count_; ++x) {
    if (ctx.u(ctx.u(x)) != ctx.u(x)) continue;
    ++a.hypothesis_cases;
    auto open = ctx.interval(ctx.l(x), ctx.u(x), false, false);
    if (open.empty()) {
      ++a.vacuous_cases;
      continue;
    }
    bool rc = ctx.requal_constant(open);
    if (!rc) {
      record_failure(a, "x=" + ctx.show(x));
      continue;
    }
    auto halfopen = ctx.interval(ctx.l(x), ctx.u(x), true, false);
    if (!ctx.full_class(halfopen)) {
      ++b.hypothesis_cases;
      if (!ctx.full_class(open)) {
        record_failure(b, "x=" + ctx.show(x));
      }
    }
  }
  return {a, b};
}

// The open-bruinval criterion, both directions, for the strictly-open-left
// and closed-left forms, over a bounded α search.
std::vector<ClaimCheck> claim_open_alpha(ClaimContext& ctx) {
  ClaimCheck suff_open{"open_alpha_sufficient",
                       "α upper broom, values shared with x, lower approach "
                       "strict ⇒ non-empty (x,α) is a full class (bounded α "
                       "search)"};
  ClaimCheck nec_open{"open_alpha_necessary",
                      "(x,α) a full class ⇒ α upper broom, values shared, "
                      "lower approach strict (bounded α search)"};
  ClaimCheck suff_closed{"closed_alpha_sufficient",
                         "same hypotheses ⇒ non-empty [x,α) is a full class "
                         "(bounded α search)"};
  ClaimCheck nec_closed{"closed_alpha_necessary",
                        "[x,α) a full class ⇒ α upper broom, values shared, "
                        "lower approach strict (bounded α search)"};

  // candidate α's: singletons, same-u incomparable pairs, and the maximal
  // members of every class
  std::vector<std::vector<Bits>> candidates;
  std::map<Bits, std::vector<Bits>> by_u;
  for (Bits a = 0; a < ctx.count_; ++a) {
    if (popcount(a) == 1) continue;
    candidates.push_back({a});
    by_u[ctx.u(a)].push_back(a);
  }
  for (const auto& [value, family] : by_u) {
    if (family.size() > 40) continue;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (incomparable(family[i], family[j])) {
          candidates.push_back({family[i], family[j]});
        }
      }
    }
  }
  for (const RoughClass& cls : ctx.quotient_.classes()) {
    std::vector<Bits> maximal;
    for (const Subset& m : cls.members) {
      bool is_max = true;
      for (const Subset& o : cls.members) {
        if (o.bits() != m.bits() && (m.bits() & ~o.bits()) == 0) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal.push_back(m.bits());
    }
    candidates.push_back(std::move(maximal));
  }

  const Universe& u = ctx.n_.universe();
  for (const auto& alpha : candidates) {
    if (alpha.empty()) continue;
    std::vector<Subset> alpha_subsets;
    for (Bits m : alpha) alpha_subsets.emplace_back(u, m);
    bool broom = is_upper_broom(ctx.n_, alpha_subsets);
    for (Bits x = 0; x < ctx.count_; ++x) {
      bool shared = true;
      for (Bits m : alpha) {
        if (ctx.l(m) != ctx.l(x) || ctx.u(m) != ctx.u(x)) {
          shared = false;
          break;
        }
      }
      // x^l ⊆ x by construction, so z ranges over [x^l, x)
      bool approach = true;
      Bits xl = ctx.l(x);
      Bits gap = x & ~xl;
      for (Bits s = gap;; s = (s - 1) & gap) {
        Bits z = xl | s;
        if (z != x && !strictly_below(ctx.u(z), ctx.u(x))) {
          approach = false;
        }
        if (s == 0 || !approach) break;
      }
      bool hyp = broom && shared && approach;

      std::set<Bits> open_set, closed_set;
      for (Bits b : alpha) {
        if ((x & ~b) != 0) continue;
        Bits span = b & ~x;
        for (Bits s = span;; s = (s - 1) & span) {
          Bits z = x | s;
          if (z != b) {
            if (z != x) open_set.insert(z);
            closed_set.insert(z);
          }
          if (s == 0) break;
        }
      }
      std::vector<Bits> open(open_set.begin(), open_set.end());
      std::vector<Bits> closed(closed_set.begin(), closed_set.end());

      if (hyp) {
        ++suff_open.hypothesis_cases;
        ++suff_closed.hypothesis_cases;
        if (open.empty()) {
          ++suff_open.vacuous_cases;
        } else if (!ctx.full_class(open)) {
          record_failure(suff_open, "x=" + ctx.show(x) + " |α|=" +
                                        std::to_string(alpha.size()));
        }
        if (closed.empty()) {
          ++suff_closed.vacuous_cases;
        } else if (!ctx.full_class(closed)) {
          record_failure(suff_closed, "x=" + ctx.show(x) + " |α|=" +
                                          std::to_string(alpha.size()));
        }
      }
      if (!open.empty() && ctx.full_class(open)) {
        ++nec_open.hypothesis_cases;
        if (!hyp) {
          record_failure(nec_open, "x=" + ctx.show(x) + " |α|=" +
                                       std::to_string(alpha.size()));
        }
      }
      if (!closed.empty() && ctx.full_class(closed)) {
        ++nec_closed.hypothesis_cases;
        if (!hyp) {
          record_failure(nec_closed, "x=" + ctx.show(x) + " |α|=" +
                                         std::to_string(alpha.size()));
        }
      }
    }
  }
  return {suff_open, nec_open, suff_closed, nec_closed};
}

// Non-vacuous upper criticality puts a requal interval below x.
ClaimCheck claim_critical_interval(ClaimContext& ctx, const Caps& caps) {
  ClaimCheck c{"upper_critical_requal_interval",
               "x non-vacuously upper-critical relative z ⇒ [z,x) or (z,x) "
               "requal-constant"};
  CriticalReport rep = critical_points(ctx.n_, caps);
  for (const CriticalPair& p : rep.upper) {
    if (p.vacuous) continue;
    ++c.hypothesis_cases;
    bool closed = ctx.requal_constant(ctx.interval(p.other, p.x, true, false));
    bool open = ctx.requal_constant(ctx.interval(p.other, p.x, false, false));
    if (!closed && !open) {
      record_failure(c, "x=" + ctx.show(p.x) + " z=" + ctx.show(p.other));
    }
  }
  return c;
}

}  // namespace

FullSetTheoremReport full_set_theorems_check(const NeighborhoodMap& n,
                                             const Caps& caps) {
  require_cap(n.size(), caps.search, "full_set_theorems_check");
  Caps wide = caps;
  wide.critical = std::max(caps.critical, n.size());
  ClaimContext ctx(n, caps);
  FullSetTheoremReport rep;
  rep.checks.push_back(claim_definite_closed_interval(ctx));
  rep.checks.push_back(claim_definite_halfopen(ctx));
  rep.checks.push_back(claim_cover_open_interval(ctx));
  rep.checks.push_back(claim_halfopen_sufficient(ctx));
  rep.checks.push_back(claim_closed_sufficient(ctx));
  rep.checks.push_back(claim_halfopen_right(ctx));
  auto [boundary_a, boundary_b] = claim_boundary(ctx);
  rep.checks.push_back(boundary_a);
  rep.checks.push_back(boundary_b);
  for (ClaimCheck& c : claim_open_alpha(ctx)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(claim_critical_interval(ctx, wide));
  return rep;
}

}  // namespace prax
