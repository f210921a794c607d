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

#include "prax/universe.hpp"

#include <stdexcept>

namespace prax {

Universe::Universe() : data_(std::make_shared<const Data>()) {}

Universe::Universe(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxUniverse)) {
    throw std::invalid_argument("universe exceeds " +
                                std::to_string(kMaxUniverse) + " elements");
  }
  Data d;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw std::invalid_argument("universe element names must be non-empty");
    }
    auto [it, inserted] = d.index.emplace(names[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("duplicate universe element '" + names[i] +
                                  "'");
    }
  }
  d.names = std::move(names);
  data_ = std::make_shared<const Data>(std::move(d));
}

int Universe::index(const std::string& name) const {
  auto it = data_->index.find(name);
  return it == data_->index.end() ? -1 : it->second;
}

int Universe::index_checked(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw std::invalid_argument("unknown element '" + name + "'");
  return i;
}

bool Universe::operator==(const Universe& o) const {
  return data_ == o.data_ || data_->names == o.data_->names;
}

void require_same_universe(const Universe& a, const Universe& b,
                           const char* operation) {
  if (a != b) {
    throw std::invalid_argument(std::string(operation) +
                                ": universes differ");
  }
}

Subset::Subset(Universe u, Bits bits) : u_(std::move(u)), bits_(bits) {
  if ((bits_ & ~u_.full_mask()) != 0) {
    throw std::invalid_argument("subset bits outside the universe");
  }
}

Subset Subset::of(const Universe& u, const std::vector<std::string>& names) {
  Bits b = 0;
  for (const auto& n : names) b |= bit(u.index_checked(n));
  return Subset(u, b);
}

Subset Subset::operator|(const Subset& o) const {
  require_same_universe(u_, o.u_, "subset union");
  return Subset(u_, bits_ | o.bits_);
}

Subset Subset::operator&(const Subset& o) const {
  require_same_universe(u_, o.u_, "subset intersection");
  return Subset(u_, bits_ & o.bits_);
}

Subset Subset::minus(const Subset& o) const {
  require_same_universe(u_, o.u_, "subset difference");
  return Subset(u_, bits_ & ~o.bits_);
}

bool Subset::subset_of(const Subset& o) const {
  require_same_universe(u_, o.u_, "subset comparison");
  return (bits_ & ~o.bits_) == 0;
}

bool Subset::operator==(const Subset& o) const {
  return u_ == o.u_ && bits_ == o.bits_;
}

std::vector<std::string> Subset::element_names() const {
  std::vector<std::string> out;
  for (int i = 0; i < u_.size(); ++i) {
    if (contains(i)) out.push_back(u_.name(i));
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : element_names()) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace prax
