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

#include "prax/definites.hpp"

#include <algorithm>
#include <stdexcept>

namespace prax {

namespace {

bool fixed_by(const NeighborhoodMap& n, const std::string& op, Bits a) {
  if (op == "l") return kernel::lower(n.plain_bits(), a) == a;
  if (op == "u") return kernel::upper(n.plain_bits(), a) == a;
  if (op == "lo") return kernel::lower(n.symm_bits(), a) == a;
  if (op == "uo") return kernel::upper(n.symm_bits(), a) == a;
  if (op == "l+") return kernel::lower_point(n.plain_bits(), a) == a;
  if (op == "u+") return kernel::upper_point(n.plain_bits(), a) == a;
  if (op == "lu") {
    return kernel::lower(n.plain_bits(), a) == a &&
           kernel::upper(n.plain_bits(), a) == a;
  }
  throw std::invalid_argument("unknown definite-family operator '" + op +
                              "' (expected l,u,lo,uo,lu,l+,u+)");
}

}  // namespace

namespace {

struct CanonicalBitsLess {
  static Bits key(const Subset& s) { return s.bits(); }
  static Bits key(Bits b) { return b; }
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return canonical_less(key(a), key(b));
  }
};

}  // namespace

bool DefiniteFamily::contains_bits(Bits b) const {
  // members stay in canonical order, so binary search applies
  return std::binary_search(members.begin(), members.end(), b,
                            CanonicalBitsLess{});
}

bool DefiniteFamily::contains(const Subset& s) const {
  return s.universe() == universe && contains_bits(s.bits());
}

DefiniteFamily definite_family(const NeighborhoodMap& n, const std::string& op,
                               const Caps& caps) {
  require_cap(n.size(), caps.definites, "definite_family");
  fixed_by(n, op, 0);  // validate the operator name up front
  DefiniteFamily f;
  f.op = op;
  f.universe = n.universe();
  const Bits count = Bits{1} << n.size();
  for (Bits a = 0; a < count; ++a) {
    if (fixed_by(n, op, a)) f.members.emplace_back(f.universe, a);
  }
  std::sort(f.members.begin(), f.members.end(),
            [](const Subset& a, const Subset& b) { return canonical_less(a, b); });
  return f;
}

bool is_complete_sublattice(const DefiniteFamily& f) {
  for (const Subset& a : f.members) {
    for (const Subset& b : f.members) {
      if (!f.contains_bits(a.bits() | b.bits())) return false;
      if (!f.contains_bits(a.bits() & b.bits())) return false;
    }
  }
  return true;
}

ProtoDefiniteAlgebra ProtoDefiniteAlgebra::build(const NeighborhoodMap& n,
                                                 const Caps& caps) {
  if (!n.relation_prax()) {
    throw std::domain_error(
        "proto_definite_algebra: the relation is not a PRAX");
  }
  ProtoDefiniteAlgebra alg;
  alg.carrier_ = definite_family(n, "lu", caps);
  const Bits full = n.universe().full_mask();
  if (!alg.carrier_.contains_bits(0) || !alg.carrier_.contains_bits(full)) {
    throw std::domain_error("proto_definite_algebra: bounds are not definite");
  }
  for (const Subset& a : alg.carrier_.members) {
    if (!alg.carrier_.contains_bits(~a.bits() & full)) {
      throw std::domain_error(
          "proto_definite_algebra: carrier not closed under complement at " +
          a.to_string());
    }
    for (const Subset& b : alg.carrier_.members) {
      if (!alg.carrier_.contains_bits(a.bits() & b.bits()) ||
          !alg.carrier_.contains_bits(a.bits() | b.bits())) {
        throw std::domain_error(
            "proto_definite_algebra: carrier not closed under meet/join at " +
            a.to_string() + ", " + b.to_string());
      }
    }
  }
  return alg;
}

namespace {

void check_member(const ProtoDefiniteAlgebra& alg, const Subset& a,
                  const char* op) {
  if (!alg.carrier().contains(a)) {
    throw std::invalid_argument(std::string(op) + ": " + a.to_string() +
                                " is not in the carrier");
  }
}

}  // namespace

Subset ProtoDefiniteAlgebra::meet(const Subset& a, const Subset& b) const {
  check_member(*this, a, "meet");
  check_member(*this, b, "meet");
  return a & b;
}

Subset ProtoDefiniteAlgebra::join(const Subset& a, const Subset& b) const {
  check_member(*this, a, "join");
  check_member(*this, b, "join");
  return a | b;
}

Subset ProtoDefiniteAlgebra::complement(const Subset& a) const {
  check_member(*this, a, "complement");
  return a.complement();
}

Subset ProtoDefiniteAlgebra::bottom() const {
  return Subset::empty(carrier_.universe);
}

Subset ProtoDefiniteAlgebra::top() const {
  return Subset::full(carrier_.universe);
}

bool ProtoDefiniteAlgebra::leq(const Subset& a, const Subset& b) const {
  return (a | b) == b && (a & b) == a;
}

std::vector<Subset> ProtoDefiniteAlgebra::atoms() const {
  std::vector<Subset> out;
  for (const Subset& a : carrier_.members) {
    if (a.is_empty()) continue;
    bool minimal = true;
    for (const Subset& b : carrier_.members) {
      if (!b.is_empty() && b != a && b.subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

BooleanLawReport ProtoDefiniteAlgebra::check_laws() const {
  BooleanLawReport rep;
  const auto& m = carrier_.members;
  const Bits full = carrier_.universe.full_mask();
  auto in = [&](Bits b) { return carrier_.contains_bits(b); };
  auto fail = [&](const std::string& what) {
    if (!rep.counterexample) rep.counterexample = what;
  };

  rep.bounded = in(0) && in(full);

  rep.closed = true;
  for (const Subset& a : m) {
    if (!in(~a.bits() & full)) { rep.closed = false; fail("c " + a.to_string()); }
    for (const Subset& b : m) {
      if (!in(a.bits() & b.bits()) || !in(a.bits() | b.bits())) {
        rep.closed = false;
        fail("meet/join " + a.to_string() + " " + b.to_string());
      }
    }
  }

  rep.commutative = rep.associative = rep.absorption = rep.distributive = true;
  rep.complemented = true;
  rep.order_is_inclusion = true;
  for (const Subset& a : m) {
    Bits x = a.bits();
    if ((x & (~x & full)) != 0 || (x | (~x & full)) != full) {
      rep.complemented = false;
      fail("complement laws at " + a.to_string());
    }
    for (const Subset& b : m) {
      Bits y = b.bits();
      if ((x & y) != (y & x) || (x | y) != (y | x)) {
        rep.commutative = false;
        fail("commutativity " + a.to_string() + " " + b.to_string());
      }
      if ((x & (x | y)) != x || (x | (x & y)) != x) {
        rep.absorption = false;
        fail("absorption " + a.to_string() + " " + b.to_string());
      }
      bool le = ((x | y) == y) && ((x & y) == x);
      if (le != ((x & ~y) == 0)) {
        rep.order_is_inclusion = false;
        fail("order " + a.to_string() + " " + b.to_string());
      }
      for (const Subset& c : m) {
        Bits z = c.bits();
        if ((x & (y & z)) != ((x & y) & z) || (x | (y | z)) != ((x | y) | z)) {
          rep.associative = false;
          fail("associativity");
        }
        if ((x & (y | z)) != ((x & y) | (x & z)) ||
            (x | (y & z)) != ((x | y) & (x | z))) {
          rep.distributive = false;
          fail("distributivity");
        }
      }
    }
  }
  return rep;
}

}  // namespace prax
