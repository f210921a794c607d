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

#ifndef PRAX_RELATION_HPP_
#define PRAX_RELATION_HPP_

#include <string>
#include <utility>
#include <vector>

#include "prax/universe.hpp"

namespace prax {

// Flags aggregated by classify(). A PRAS is a proto-transitive relation,
// a PRAX a reflexive one.
struct PropertyReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool weakly_transitive = false;
  bool proto_transitive = false;
  bool equivalence = false;
  bool is_pras = false;
  bool is_prax = false;
};

// A binary relation over a universe, stored as dense boolean adjacency:
// rows()[x] holds {y : R x y}. Immutable after construction.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  BinaryRelation(Universe u, std::vector<std::pair<int, int>> pairs);

  static BinaryRelation from_rows(Universe u, std::vector<Bits> rows);
  static BinaryRelation from_named_pairs(
      const Universe& u,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  static BinaryRelation diagonal(const Universe& u);
  static BinaryRelation total(const Universe& u);

  const Universe& universe() const { return u_; }
  bool contains(int x, int y) const { return (rows_[x] & bit(y)) != 0; }
  const std::vector<Bits>& rows() const { return rows_; }
  // Column x as a mask: {y : R y x}.
  Bits column(int x) const;

  // Pairs in (source, target) index order.
  std::vector<std::pair<int, int>> pairs() const;
  int pair_count() const;

  BinaryRelation inverse() const;
  // Adds the pair (x, y); used by generators and tests.
  BinaryRelation with_pair(int x, int y) const;
  BinaryRelation without_pair(int x, int y) const;

  bool subset_of(const BinaryRelation& o) const;
  bool operator==(const BinaryRelation& o) const;
  bool operator!=(const BinaryRelation& o) const { return !(*this == o); }

 private:
  Universe u_;
  std::vector<Bits> rows_;
};

bool is_reflexive(const BinaryRelation& r);
bool is_symmetric(const BinaryRelation& r);
// (R∘R) ⊆ R.
bool is_transitive(const BinaryRelation& r);
// (R∘R) ∖ Δ ⊆ R; equivalently the pairwise-distinct triple form.
bool is_weakly_transitive(const BinaryRelation& r);
// τ(R) weakly transitive. The direct quantifier scan lives in the oracle and
// is held equal to this by the test harness.
bool is_proto_transitive(const BinaryRelation& r);

// Symmetric kernel R ∩ R⁻¹.
BinaryRelation tau(const BinaryRelation& r);
// R ∪ Δ.
BinaryRelation reflexive_closure(const BinaryRelation& r);
// {(x,z) : ∃y. r x y ∧ q y z}; both relations must share a universe.
BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& q);

PropertyReport classify(const BinaryRelation& r);

}  // namespace prax

#endif  // PRAX_RELATION_HPP_
