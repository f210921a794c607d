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

#ifndef PRAX_DEFINITES_HPP_
#define PRAX_DEFINITES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "prax/approx.hpp"

namespace prax {

// All fixed points of an approximation operator, in canonical order
// (cardinality, then bit pattern).
struct DefiniteFamily {
  std::string op;  // one of l, u, lo, uo, lu, l+, u+
  Universe universe;
  std::vector<Subset> members;

  bool contains_bits(Bits b) const;
  bool contains(const Subset& s) const;
};

// Exhaustive powerset scan for the fixed points of `op`. "lu" means fixed by
// both l and u. Throws cap_error above caps.definites.
DefiniteFamily definite_family(const NeighborhoodMap& n, const std::string& op,
                               const Caps& caps = Caps::active());

// True iff the family is closed under pairwise unions and intersections
// (finite carrier, so arbitrary joins reduce to pairwise ones).
bool is_complete_sublattice(const DefiniteFamily& f);

struct BooleanLawReport {
  bool closed = false;
  bool bounded = false;        // carries ∅ and S
  bool commutative = false;
  bool associative = false;
  bool absorption = false;
  bool distributive = false;
  bool complemented = false;   // x ∧ x^c = 0, x ∨ x^c = 1
  bool order_is_inclusion = false;  // derived ≤ coincides with ⊆
  std::optional<std::string> counterexample;

  bool all() const {
    return closed && bounded && commutative && associative && absorption &&
           distributive && complemented && order_is_inclusion;
  }
};

// The Boolean lattice over the proto-definite elements δ_lu with ∧ = ∩,
// ∨ = ∪, complement = set complement, 0 = ∅, 1 = S. Construction verifies
// closure of each operation and throws std::domain_error on a violation or
// when the relation is not a PRAX (the closure arguments need reflexivity).
class ProtoDefiniteAlgebra {
 public:
  static ProtoDefiniteAlgebra build(const NeighborhoodMap& n,
                                    const Caps& caps = Caps::active());

  const DefiniteFamily& carrier() const { return carrier_; }
  const Universe& universe() const { return carrier_.universe; }

  Subset meet(const Subset& a, const Subset& b) const;
  Subset join(const Subset& a, const Subset& b) const;
  Subset complement(const Subset& a) const;
  Subset bottom() const;
  Subset top() const;

  // x ≤ y iff x∪y = y and x∩y = x.
  bool leq(const Subset& a, const Subset& b) const;

  // Minimal non-bottom carrier elements. Reported, nothing asserted.
  std::vector<Subset> atoms() const;

  // Exhaustive check of every lattice law over the carrier.
  BooleanLawReport check_laws() const;

 private:
  DefiniteFamily carrier_;
};

}  // namespace prax

#endif  // PRAX_DEFINITES_HPP_
