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

#include "prax/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prax {

bool rough_equal(const NeighborhoodMap& n, const Subset& a, const Subset& b) {
  require_same_universe(n.universe(), a.universe(), "rough_equal");
  require_same_universe(n.universe(), b.universe(), "rough_equal");
  return kernel::lower(n.plain_bits(), a.bits()) ==
             kernel::lower(n.plain_bits(), b.bits()) &&
         kernel::upper(n.plain_bits(), a.bits()) ==
             kernel::upper(n.plain_bits(), b.bits());
}

const char* atom_type_name(AtomType t) {
  switch (t) {
    case AtomType::type0: return "type-0";
    case AtomType::type1: return "type-1";
    case AtomType::type2: return "type-2";
    case AtomType::unclassified: return "unclassified";
  }
  return "?";
}

QuotientPoset QuotientPoset::build(const NeighborhoodMap& n, const Caps& caps) {
  QuotientPoset h;
  h.nbhd_ = n;
  ApproxTable table = ApproxTable::build(n, caps.quotient, "quotient");
  const Bits count = Bits{1} << n.size();
  const Universe& u = n.universe();

  std::map<std::pair<Bits, Bits>, std::vector<Bits>> by_key;
  for (Bits a = 0; a < count; ++a) {
    by_key[{table.l[a], table.u[a]}].push_back(a);
  }

  h.classes_.reserve(by_key.size());
  for (auto& [key, members] : by_key) {
    RoughClass c{Subset(u, key.first), Subset(u, key.second), {}};
    std::sort(members.begin(), members.end(),
              [](Bits a, Bits b) { return canonical_less(a, b); });
    c.members.reserve(members.size());
    for (Bits m : members) c.members.emplace_back(u, m);
    h.classes_.push_back(std::move(c));
  }
  std::sort(h.classes_.begin(), h.classes_.end(),
            [](const RoughClass& a, const RoughClass& b) {
              if (a.lower.bits() != b.lower.bits())
                return canonical_less(a.lower.bits(), b.lower.bits());
              return canonical_less(a.upper.bits(), b.upper.bits());
            });

  h.class_index_.assign(count, 0);
  for (std::size_t i = 0; i < h.classes_.size(); ++i) {
    for (const Subset& m : h.classes_[i].members) {
      h.class_index_[m.bits()] = i;
    }
  }
  h.bottom_ = h.class_index_[0];
  h.top_ = h.class_index_[u.full_mask()];

  // Comparability is strictly rank-increasing (rank = |lower| + |upper|), so
  // the covers of each class are the maximal elements of its predecessor
  // set, found scanning by descending rank against the maximals so far.
  const std::size_t cc = h.classes_.size();
  auto rank = [&](std::size_t i) {
    return popcount(h.classes_[i].lower.bits()) +
           popcount(h.classes_[i].upper.bits());
  };
  std::vector<std::size_t> order(cc);
  for (std::size_t i = 0; i < cc; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rank(a) > rank(b); });
  for (std::size_t j = 0; j < cc; ++j) {
    std::vector<std::size_t> maximals;
    for (std::size_t i : order) {
      if (i == j || !h.leq(i, j)) continue;
      bool below_existing = false;
      for (std::size_t m : maximals) {
        if (h.leq(i, m)) {
          below_existing = true;
          break;
        }
      }
      if (!below_existing) maximals.push_back(i);
    }
    for (std::size_t m : maximals) h.covers_.emplace_back(m, j);
    if (maximals.size() == 1 && maximals[0] == h.bottom_) {
      h.atoms_.push_back(j);
    }
  }
  std::sort(h.covers_.begin(), h.covers_.end());
  std::sort(h.atoms_.begin(), h.atoms_.end());
  return h;
}

bool QuotientPoset::leq(std::size_t a, std::size_t b) const {
  const RoughClass& x = classes_.at(a);
  const RoughClass& y = classes_.at(b);
  return (x.lower.bits() & ~y.lower.bits()) == 0 &&
         (x.upper.bits() & ~y.upper.bits()) == 0;
}

std::size_t QuotientPoset::class_of_bits(Bits b) const {
  return class_index_.at(b);
}

std::size_t QuotientPoset::class_of(const Subset& s) const {
  require_same_universe(universe(), s.universe(), "class_of");
  return class_of_bits(s.bits());
}

std::vector<std::size_t> QuotientPoset::upper_bounds(std::size_t a,
                                                     std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < classes_.size(); ++x) {
    if (leq(a, x) && leq(b, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> QuotientPoset::lower_bounds(std::size_t a,
                                                     std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < classes_.size(); ++x) {
    if (leq(x, a) && leq(x, b)) out.push_back(x);
  }
  return out;
}

bool QuotientPoset::is_s_ideal(const std::vector<std::size_t>& k) const {
  std::set<std::size_t> in(k.begin(), k.end());
  for (std::size_t a : in) {
    if (a >= classes_.size()) {
      throw std::invalid_argument("is_s_ideal: class index out of range");
    }
    for (std::size_t x = 0; x < classes_.size(); ++x) {
      if (leq(x, a) && !in.count(x)) return false;
    }
  }
  for (std::size_t a : in) {
    for (std::size_t b : in) {
      bool found = false;
      for (std::size_t x : in) {
        if (leq(a, x) && leq(b, x)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<TypedAtom> QuotientPoset::atom_types() const {
  std::vector<TypedAtom> out;

  // Distinct granules, deduplicated as sets.
  std::vector<Bits> granules;
  for (Bits g : nbhd_.plain_bits()) {
    if (std::find(granules.begin(), granules.end(), g) == granules.end()) {
      granules.push_back(g);
    }
  }
  auto isolated = [&](Bits g) {
    for (Bits h : granules) {
      if (h != g && (h & g) != 0) return false;
    }
    return true;
  };

  for (std::size_t idx : atoms_) {
    const RoughClass& c = classes_[idx];
    TypedAtom tag{idx, AtomType::unclassified, false};

    // Type-0: the class generated by an isolated granule — all nonempty
    // proper subsets of [x], or {[x]} itself when [x] is a singleton and
    // that open interval is empty.
    for (Bits g : granules) {
      if (g == 0 || !isolated(g)) continue;
      if (popcount(g) == 1) {
        if (c.members.size() == 1 && c.members[0].bits() == g) {
          tag.type = AtomType::type0;
          tag.degenerate_singleton = true;
        }
      } else {
        std::size_t expected = (std::size_t{1} << popcount(g)) - 2;
        if (c.members.size() == expected &&
            std::all_of(c.members.begin(), c.members.end(),
                        [&](const Subset& m) {
                          return m.bits() != 0 && m.bits() != g &&
                                 (m.bits() & ~g) == 0;
                        })) {
          tag.type = AtomType::type0;
        }
      }
      if (tag.type == AtomType::type0) break;
    }

    if (tag.type == AtomType::type0) {
      out.push_back(tag);
      continue;
    }

    bool lowers_empty = c.lower.is_empty();

    // Type-1: lower values empty and the class is exactly the half-open
    // bruinval (∅, α] over the antichain α of its maximal members. Equality
    // with the class makes the no-contained-full-class clause automatic.
    if (lowers_empty) {
      std::vector<Bits> maximal;
      for (const Subset& m : c.members) {
        bool is_max = true;
        for (const Subset& o : c.members) {
          if (o.bits() != m.bits() && (m.bits() & ~o.bits()) == 0) {
            is_max = false;
            break;
          }
        }
        if (is_max) maximal.push_back(m.bits());
      }
      std::set<Bits> bruinval;
      for (Bits b : maximal) {
        for (Bits z = b; z != 0; z = (z - 1) & b) bruinval.insert(z);
      }
      std::set<Bits> members;
      for (const Subset& m : c.members) members.insert(m.bits());
      if (bruinval == members) {
        tag.type = AtomType::type1;
        out.push_back(tag);
        continue;
      }
    }

    // Type-2 needs the verified lower-is-empty property; otherwise the
    // honest answer is "unclassified".
    tag.type = lowers_empty ? AtomType::type2 : AtomType::unclassified;
    out.push_back(tag);
  }
  return out;
}

QuotientPoset::AtomicityResult QuotientPoset::check_atomicity() const {
  AtomicityResult res;
  res.atomic = true;
  std::set<std::size_t> atom_set(atoms_.begin(), atoms_.end());
  for (std::size_t x = 0; x < classes_.size(); ++x) {
    if (x == bottom_ || atom_set.count(x)) continue;
    bool above_atom = false;
    for (std::size_t a : atoms_) {
      if (leq(a, x)) {
        above_atom = true;
        break;
      }
    }
    if (!above_atom) {
      res.atomic = false;
      res.witness = x;
      return res;
    }
  }
  return res;
}

std::string QuotientPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph quotient {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const RoughClass& c = classes_[i];
    os << "  c" << i << " [label=\"" << c.lower.to_string() << " | "
       << c.upper.to_string() << "\\n" << c.members.size() << " member"
       << (c.members.size() == 1 ? "" : "s") << "\"];\n";
  }
  for (const auto& [below, above] : covers_) {
    os << "  c" << below << " -> c" << above << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace prax
