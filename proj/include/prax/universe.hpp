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

#ifndef PRAX_UNIVERSE_HPP_
#define PRAX_UNIVERSE_HPP_

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace prax {

// Subsets of a universe are fixed-width bit-vectors; bit i stands for the
// element with canonical index i. The element cap (24) keeps them in 32 bits.
using Bits = std::uint32_t;

constexpr int kMaxUniverse = 24;

inline int popcount(Bits b) { return std::popcount(b); }
inline Bits bit(int i) { return Bits{1} << i; }

// Canonical order on bit patterns: by cardinality, then numerically.
inline bool canonical_less(Bits a, Bits b) {
  int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

// An ordered finite set of named elements. The order is stable and defines
// the canonical index of each element. Immutable after construction; copies
// share storage.
class Universe {
 public:
  Universe();
  // Names must be pairwise distinct and non-empty; at most kMaxUniverse.
  explicit Universe(std::vector<std::string> names);

  int size() const { return static_cast<int>(data_->names.size()); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(int i) const { return data_->names.at(i); }

  // Index of a name, or -1 when absent.
  int index(const std::string& name) const;
  // Index of a name; throws std::invalid_argument when absent.
  int index_checked(const std::string& name) const;

  Bits full_mask() const {
    return size() == 0 ? 0 : (Bits{1} << size()) - 1;
  }

  bool operator==(const Universe& o) const;
  bool operator!=(const Universe& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

// A subset of a universe, the unit approximation operators act on.
class Subset {
 public:
  Subset() = default;
  Subset(Universe u, Bits bits);

  static Subset empty(const Universe& u) { return Subset(u, 0); }
  static Subset full(const Universe& u) { return Subset(u, u.full_mask()); }
  // Throws std::invalid_argument on unknown names.
  static Subset of(const Universe& u, const std::vector<std::string>& names);

  const Universe& universe() const { return u_; }
  Bits bits() const { return bits_; }
  int count() const { return popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ & bit(i)) != 0; }

  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset minus(const Subset& o) const;
  Subset complement() const { return Subset(u_, ~bits_ & u_.full_mask()); }
  bool subset_of(const Subset& o) const;

  bool operator==(const Subset& o) const;
  bool operator!=(const Subset& o) const { return !(*this == o); }

  // Element names in universe order.
  std::vector<std::string> element_names() const;
  // "{a, b}" rendering for messages.
  std::string to_string() const;

 private:
  Universe u_;
  Bits bits_ = 0;
};

// Canonical order on subsets of the same universe.
inline bool canonical_less(const Subset& a, const Subset& b) {
  return canonical_less(a.bits(), b.bits());
}

// Throws std::invalid_argument unless both universes are equal.
void require_same_universe(const Universe& a, const Universe& b,
                           const char* operation);

}  // namespace prax

#endif  // PRAX_UNIVERSE_HPP_
