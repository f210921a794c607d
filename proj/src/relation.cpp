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

#include "prax/relation.hpp"

#include <stdexcept>

namespace prax {

namespace {

void check_index(const Universe& u, int i) {
  if (i < 0 || i >= u.size()) {
    throw std::invalid_argument("pair index " + std::to_string(i) +
                                " outside the universe");
  }
}

}  // namespace

BinaryRelation::BinaryRelation(Universe u, std::vector<std::pair<int, int>> pairs)
    : u_(std::move(u)), rows_(u_.size(), 0) {
  for (auto [x, y] : pairs) {
    check_index(u_, x);
    check_index(u_, y);
    rows_[x] |= bit(y);
  }
}

BinaryRelation BinaryRelation::from_rows(Universe u, std::vector<Bits> rows) {
  if (rows.size() != static_cast<std::size_t>(u.size())) {
    throw std::invalid_argument("row count does not match the universe");
  }
  for (Bits row : rows) {
    if ((row & ~u.full_mask()) != 0) {
      throw std::invalid_argument("relation row outside the universe");
    }
  }
  BinaryRelation r;
  r.u_ = std::move(u);
  r.rows_ = std::move(rows);
  return r;
}

BinaryRelation BinaryRelation::from_named_pairs(
    const Universe& u,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> idx;
  idx.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    idx.emplace_back(u.index_checked(s), u.index_checked(t));
  }
  return BinaryRelation(u, std::move(idx));
}

BinaryRelation BinaryRelation::diagonal(const Universe& u) {
  std::vector<Bits> rows(u.size(), 0);
  for (int i = 0; i < u.size(); ++i) rows[i] = bit(i);
  return from_rows(u, std::move(rows));
}

BinaryRelation BinaryRelation::total(const Universe& u) {
  std::vector<Bits> rows(u.size(), u.full_mask());
  return from_rows(u, std::move(rows));
}

Bits BinaryRelation::column(int x) const {
  Bits col = 0;
  for (int y = 0; y < u_.size(); ++y) {
    if (contains(y, x)) col |= bit(y);
  }
  return col;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < u_.size(); ++x) {
    for (int y = 0; y < u_.size(); ++y) {
      if (contains(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

int BinaryRelation::pair_count() const {
  int n = 0;
  for (Bits row : rows_) n += popcount(row);
  return n;
}

BinaryRelation BinaryRelation::inverse() const {
  std::vector<Bits> rows(u_.size(), 0);
  for (int x = 0; x < u_.size(); ++x) rows[x] = column(x);
  return from_rows(u_, std::move(rows));
}

BinaryRelation BinaryRelation::with_pair(int x, int y) const {
  check_index(u_, x);
  check_index(u_, y);
  auto rows = rows_;
  rows[x] |= bit(y);
  return from_rows(u_, std::move(rows));
}

BinaryRelation BinaryRelation::without_pair(int x, int y) const {
  check_index(u_, x);
  check_index(u_, y);
  auto rows = rows_;
  rows[x] &= ~bit(y);
  return from_rows(u_, std::move(rows));
}

bool BinaryRelation::subset_of(const BinaryRelation& o) const {
  require_same_universe(u_, o.u_, "relation comparison");
  for (int x = 0; x < u_.size(); ++x) {
    if ((rows_[x] & ~o.rows_[x]) != 0) return false;
  }
  return true;
}

bool BinaryRelation::operator==(const BinaryRelation& o) const {
  return u_ == o.u_ && rows_ == o.rows_;
}

bool is_reflexive(const BinaryRelation& r) {
  for (int x = 0; x < r.universe().size(); ++x) {
    if (!r.contains(x, x)) return false;
  }
  return true;
}

bool is_symmetric(const BinaryRelation& r) {
  const int n = r.universe().size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (r.contains(x, y) != r.contains(y, x)) return false;
    }
  }
  return true;
}

bool is_transitive(const BinaryRelation& r) {
  BinaryRelation rr = compose(r, r);
  return rr.subset_of(r);
}

bool is_weakly_transitive(const BinaryRelation& r) {
  // (R∘R) ∖ Δ ⊆ R.
  BinaryRelation rr = compose(r, r);
  for (int x = 0; x < r.universe().size(); ++x) {
    if ((rr.rows()[x] & ~bit(x) & ~r.rows()[x]) != 0) return false;
  }
  return true;
}

bool is_proto_transitive(const BinaryRelation& r) {
  return is_weakly_transitive(tau(r));
}

BinaryRelation tau(const BinaryRelation& r) {
  std::vector<Bits> rows(r.universe().size(), 0);
  for (int x = 0; x < r.universe().size(); ++x) {
    rows[x] = r.rows()[x] & r.column(x);
  }
  return BinaryRelation::from_rows(r.universe(), std::move(rows));
}

BinaryRelation reflexive_closure(const BinaryRelation& r) {
  auto rows = r.rows();
  for (int x = 0; x < r.universe().size(); ++x) rows[x] |= bit(x);
  return BinaryRelation::from_rows(r.universe(), std::move(rows));
}

BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& q) {
  require_same_universe(r.universe(), q.universe(), "relation composition");
  const int n = r.universe().size();
  std::vector<Bits> rows(n, 0);
  for (int x = 0; x < n; ++x) {
    Bits mid = r.rows()[x];
    for (int y = 0; y < n; ++y) {
      if (mid & bit(y)) rows[x] |= q.rows()[y];
    }
  }
  return BinaryRelation::from_rows(r.universe(), std::move(rows));
}

PropertyReport classify(const BinaryRelation& r) {
  PropertyReport p;
  p.reflexive = is_reflexive(r);
  p.symmetric = is_symmetric(r);
  p.transitive = is_transitive(r);
  p.weakly_transitive = is_weakly_transitive(r);
  p.proto_transitive = is_proto_transitive(r);
  p.equivalence = p.reflexive && p.symmetric && p.transitive;
  p.is_pras = p.proto_transitive;
  p.is_prax = p.proto_transitive && p.reflexive;
  return p;
}

}  // namespace prax
