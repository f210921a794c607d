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

#include "prax/knowledge.hpp"

#include <stdexcept>

namespace prax {

KnowledgePair::KnowledgePair(BinaryRelation r, BinaryRelation q)
    : base(std::move(r)), other(std::move(q)) {
  require_same_universe(base.universe(), other.universe(), "knowledge pair");
}

bool o_coarser(const KnowledgePair& p) {
  if (!classify(p.base).is_prax || !classify(p.other).is_prax) {
    throw std::domain_error("o_coarser: both relations must be PRAX");
  }
  return tau(p.base).subset_of(tau(p.other));
}

bool p_coarser(const KnowledgePair& p) {
  return p.base.subset_of(p.other);
}

PositiveRegion granular_positive_region(const KnowledgePair& p) {
  if (!p.other.subset_of(p.base)) {
    throw std::domain_error(
        "granular_positive_region: the other relation must be contained in "
        "the base relation");
  }
  NeighborhoodMap base_n = NeighborhoodMap::of(p.base);
  NeighborhoodMap other_n = NeighborhoodMap::of(p.other);
  PositiveRegion out;
  out.universe = p.base.universe();
  out.granules.reserve(out.universe.size());
  for (int x = 0; x < out.universe.size(); ++x) {
    Bits q_nbhd = other_n.plain_bits()[x];
    out.granules.emplace_back(out.universe,
                              kernel::lower(base_n.plain_bits(), q_nbhd));
  }
  return out;
}

std::vector<std::vector<int>> gpos_granule_hosts(const KnowledgePair& p) {
  PositiveRegion region = granular_positive_region(p);
  NeighborhoodMap base_n = NeighborhoodMap::of(p.base);
  std::vector<std::vector<int>> hosts(region.granules.size());
  for (std::size_t i = 0; i < region.granules.size(); ++i) {
    Bits entry = region.granules[i].bits();
    for (int g = 0; g < p.base.universe().size(); ++g) {
      if ((entry & ~base_n.plain_bits()[g]) == 0) {
        hosts[i].push_back(g);
      }
    }
  }
  return hosts;
}

}  // namespace prax
