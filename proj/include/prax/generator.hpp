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

#ifndef PRAX_GENERATOR_HPP_
#define PRAX_GENERATOR_HPP_

#include <cstdint>
#include <vector>

#include "prax/relation.hpp"

namespace prax {

struct GeneratorConfig {
  int size = 6;
  std::uint64_t seed = 0;
  // Target τ-class sizes; blocks are filled left to right, the remainder
  // becomes singletons. Empty means a random partition.
  std::vector<int> block_profile;
  // One-directional pairs added across distinct blocks; never paired with
  // their converse, so the symmetric kernel stays the chosen equivalence.
  int asym_pairs = 0;
};

// Random equivalence per block_profile, asym_pairs one-directional pairs,
// reflexive closure. Always a PRAX; deterministic for a fixed seed.
BinaryRelation generate_prax(const GeneratorConfig& cfg);

// As generate_prax but without the closure, with diagonal pairs dropped at
// random. Always proto-transitive; usually not reflexive.
BinaryRelation generate_pras(const GeneratorConfig& cfg);

// Universe {e0, e1, ...} of the given size, shared by generated relations.
Universe generated_universe(int size);

}  // namespace prax

#endif  // PRAX_GENERATOR_HPP_
