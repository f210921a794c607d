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

#include "prax/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace prax {

namespace {

// Explicit modulo draws: std::uniform_int_distribution is not bit-identical
// across standard libraries, and generated fixtures must be.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t below) {
  return below == 0 ? 0 : rng() % below;
}

// Partition of element indices into τ-blocks.
std::vector<std::vector<int>> make_blocks(const GeneratorConfig& cfg,
                                          std::mt19937_64& rng) {
  std::vector<int> order(cfg.size);
  for (int i = 0; i < cfg.size; ++i) order[i] = i;
  for (int i = cfg.size - 1; i > 0; --i) {
    std::swap(order[i], order[draw(rng, i + 1)]);
  }

  std::vector<std::vector<int>> blocks;
  std::size_t at = 0;
  for (int want : cfg.block_profile) {
    if (want <= 0) {
      throw std::invalid_argument("block_profile sizes must be positive");
    }
    std::vector<int> block;
    while (want-- > 0 && at < order.size()) block.push_back(order[at++]);
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (cfg.block_profile.empty()) {
    // random partition: repeatedly cut a block of size 1..remaining
    while (at < order.size()) {
      std::size_t remaining = order.size() - at;
      std::size_t take = 1 + draw(rng, remaining);
      std::vector<int> block(order.begin() + at, order.begin() + at + take);
      at += take;
      blocks.push_back(std::move(block));
    }
  } else {
    while (at < order.size()) blocks.push_back({order[at++]});
  }
  return blocks;
}

BinaryRelation generate(const GeneratorConfig& cfg, bool reflexive) {
  if (cfg.size < 1 || cfg.size > kMaxUniverse) {
    throw std::invalid_argument("generator size must be in [1, " +
                                std::to_string(kMaxUniverse) + "]");
  }
  if (cfg.asym_pairs < 0 || cfg.asym_pairs > cfg.size * (cfg.size - 1)) {
    throw std::invalid_argument("asym_pairs out of range");
  }
  Universe u = generated_universe(cfg.size);
  std::mt19937_64 rng(cfg.seed);
  auto blocks = make_blocks(cfg, rng);

  std::vector<int> block_of(cfg.size, 0);
  std::vector<Bits> rows(cfg.size, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      block_of[x] = static_cast<int>(b);
      for (int y : blocks[b]) rows[x] |= bit(y);  // full block, diagonal in
    }
  }

  // One-directional pairs across distinct blocks; never add a converse, so
  // the symmetric kernel stays the block equivalence.
  int added = 0, attempts = 0;
  while (added < cfg.asym_pairs && attempts < cfg.asym_pairs * 64 + 256) {
    ++attempts;
    int x = static_cast<int>(draw(rng, cfg.size));
    int y = static_cast<int>(draw(rng, cfg.size));
    if (block_of[x] == block_of[y]) continue;
    if ((rows[x] & bit(y)) || (rows[y] & bit(x))) continue;
    rows[x] |= bit(y);
    ++added;
  }

  if (!reflexive) {
    // drop a random selection of diagonal pairs
    for (int x = 0; x < cfg.size; ++x) {
      if (draw(rng, 2) == 0) rows[x] &= ~bit(x);
    }
  }
  return BinaryRelation::from_rows(u, std::move(rows));
}

}  // namespace

Universe generated_universe(int size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (int i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  return Universe(std::move(names));
}

BinaryRelation generate_prax(const GeneratorConfig& cfg) {
  return reflexive_closure(generate(cfg, true));
}

BinaryRelation generate_pras(const GeneratorConfig& cfg) {
  return generate(cfg, false);
}

}  // namespace prax
