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

#ifndef PRAX_QUOTIENT_HPP_
#define PRAX_QUOTIENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prax/approx.hpp"

namespace prax {

// True iff a and b share both approximations (a ≈ b).
bool rough_equal(const NeighborhoodMap& n, const Subset& a, const Subset& b);

// One equivalence class of ≈, keyed by its shared (lower, upper) pair.
// Members form the full class and are order-convex in ℘(S).
struct RoughClass {
  Subset lower;
  Subset upper;
  std::vector<Subset> members;  // canonical order
};

enum class AtomType { type0, type1, type2, unclassified };
const char* atom_type_name(AtomType t);

struct TypedAtom {
  std::size_t class_index;
  AtomType type;
  // Degenerate Type-0: the isolated granule is a singleton, so the class is
  // the proto-definite {[x]} and its lower value is not empty.
  bool degenerate_singleton = false;
};

// The ordered set H = ℘(S)|≈. Classes are compared componentwise on their
// shared (lower, upper) pair; that collapse of the member-wise definition is
// asserted by the test harness.
class QuotientPoset {
 public:
  // Throws cap_error above caps.quotient.
  static QuotientPoset build(const NeighborhoodMap& n,
                             const Caps& caps = Caps::active());

  const Universe& universe() const { return nbhd_.universe(); }
  const NeighborhoodMap& nbhd() const { return nbhd_; }
  const std::vector<RoughClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  bool leq(std::size_t a, std::size_t b) const;
  // Index of the class a subset belongs to.
  std::size_t class_of(const Subset& s) const;
  std::size_t class_of_bits(Bits b) const;

  // Transitive reduction of the comparison DAG, as (below, above) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }

  // Classes covering bottom.
  const std::vector<std::size_t>& atoms() const { return atoms_; }
  // Atoms with their type tags (decision cascade; honest "unclassified"
  // fallback when the Type-2 verification fails).
  std::vector<TypedAtom> atom_types() const;

  std::vector<std::size_t> upper_bounds(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> lower_bounds(std::size_t a, std::size_t b) const;

  // Downward closed and every pair has a common upper bound inside k.
  bool is_s_ideal(const std::vector<std::size_t>& k) const;

  struct AtomicityResult {
    bool atomic = false;
    std::optional<std::size_t> witness;  // a class > 0 with no atom below
  };
  AtomicityResult check_atomicity() const;

  // Hasse diagram in DOT syntax.
  std::string to_dot() const;

 private:
  NeighborhoodMap nbhd_;
  std::vector<RoughClass> classes_;
  std::vector<std::size_t> class_index_;  // by subset mask
  std::size_t bottom_ = 0, top_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> atoms_;
};

}  // namespace prax

#endif  // PRAX_QUOTIENT_HPP_
