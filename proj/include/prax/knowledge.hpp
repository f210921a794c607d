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

#ifndef PRAX_KNOWLEDGE_HPP_
#define PRAX_KNOWLEDGE_HPP_

#include <utility>
#include <vector>

#include "prax/approx.hpp"

namespace prax {

// Two relations over one universe, compared as knowledge encodings.
struct KnowledgePair {
  BinaryRelation base;   // R
  BinaryRelation other;  // Q
  KnowledgePair(BinaryRelation r, BinaryRelation q);
};

// base is o-coarser than other iff τ(base) ⊆ τ(other). Both relations must
// be PRAX (throws std::domain_error otherwise).
bool o_coarser(const KnowledgePair& p);

// base is p-coarser than other iff base ⊆ other as pair sets.
bool p_coarser(const KnowledgePair& p);

// Per-element lower approximations (w.r.t. base) of the other-relation
// neighborhoods: entry x = ([x]_Q)^{l_R}.
struct PositiveRegion {
  Universe universe;
  std::vector<Subset> granules;  // one entry per universe element
};

// Requires other ⊆ base as pair sets (throws std::domain_error otherwise).
PositiveRegion granular_positive_region(const KnowledgePair& p);

// For each gPOS entry, the base granules that contain it (the rendering of
// the natural injections into the base granulation). Indexed like granules.
std::vector<std::vector<int>> gpos_granule_hosts(const KnowledgePair& p);

}  // namespace prax

#endif  // PRAX_KNOWLEDGE_HPP_
