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

#ifndef PRAX_APPROX_HPP_
#define PRAX_APPROX_HPP_

#include <string>
#include <vector>

#include "prax/caps.hpp"
#include "prax/relation.hpp"

namespace prax {

// Which convention generates neighborhoods. The default keeps the successor
// form [x] = {y : R y x}; `predecessor` transposes the relation first.
enum class Orientation { successor, predecessor };

// Per-element successor neighborhoods [x] and their symmetrized versions
// [x]_o = {y : R y x ∧ R x y}. Precomputed once per relation and shared
// read-only.
class NeighborhoodMap {
 public:
  NeighborhoodMap() = default;
  static NeighborhoodMap of(const BinaryRelation& r,
                            Orientation o = Orientation::successor);

  const Universe& universe() const { return relation_.universe(); }
  int size() const { return universe().size(); }
  const BinaryRelation& relation() const { return relation_; }

  Subset plain(int x) const { return Subset(universe(), plain_[x]); }
  Subset symmetrized(int x) const { return Subset(universe(), symm_[x]); }
  const std::vector<Bits>& plain_bits() const { return plain_; }
  const std::vector<Bits>& symm_bits() const { return symm_; }

  bool relation_reflexive() const { return reflexive_; }
  bool relation_prax() const { return prax_; }

 private:
  BinaryRelation relation_;
  std::vector<Bits> plain_;
  std::vector<Bits> symm_;
  bool reflexive_ = false;
  bool prax_ = false;
};

NeighborhoodMap neighborhoods(const BinaryRelation& r,
                              Orientation o = Orientation::successor);

// Mask-level kernels. `nb` is a neighborhood table (plain or symmetrized).
namespace kernel {
// Union of all nb[x] contained in a.
Bits lower(const std::vector<Bits>& nb, Bits a);
// Union of all nb[x] meeting a.
Bits upper(const std::vector<Bits>& nb, Bits a);
// {x : nb[x] ⊆ a}.
Bits lower_point(const std::vector<Bits>& nb, Bits a);
// {x : nb[x] ∩ a ≠ ∅}.
Bits upper_point(const std::vector<Bits>& nb, Bits a);
}  // namespace kernel

// The six approximation operators. Inputs must share the map's universe.
Subset lower_proto(const NeighborhoodMap& n, const Subset& a);
Subset upper_proto(const NeighborhoodMap& n, const Subset& a);
Subset lower_symm(const NeighborhoodMap& n, const Subset& a);
Subset upper_symm(const NeighborhoodMap& n, const Subset& a);
Subset pointwise_lower(const NeighborhoodMap& n, const Subset& a);
Subset pointwise_upper(const NeighborhoodMap& n, const Subset& a);

enum class OpToken {
  lower,        // l
  upper,        // u
  lower_symm,   // lo
  upper_symm,   // uo
  lower_point,  // l+
  upper_point,  // u+
  complement,   // c
};

const char* token_name(OpToken t);

// A composite operator: tokens applied left-to-right, no normalization.
// Algebraic identities are test assertions, not rewrite rules.
struct OperatorExpr {
  std::vector<OpToken> tokens;

  // Dot-separated tokens from {l,u,lo,uo,l+,u+,c}; "l.c.u" means ((A^l)^c)^u.
  // Throws std::invalid_argument on empty or unknown tokens.
  static OperatorExpr parse(const std::string& text);
  std::string str() const;
};

Bits apply_expr_bits(const NeighborhoodMap& n, const OperatorExpr& e, Bits a);
Subset apply_expr(const NeighborhoodMap& n, const OperatorExpr& e,
                  const Subset& a);

// l/u/lo/uo values of every subset of the universe, indexed by mask.
// The workhorse behind the powerset-enumerating modules.
struct ApproxTable {
  std::vector<Bits> l, u, lo, uo;
  static ApproxTable build(const NeighborhoodMap& n, int cap,
                           const std::string& operation);
};

}  // namespace prax

#endif  // PRAX_APPROX_HPP_
