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

#ifndef PRAX_ORACLE_HPP_
#define PRAX_ORACLE_HPP_

#include <set>
#include <string>
#include <vector>

#include "prax/relation.hpp"
#include "prax/report.hpp"

// Naive re-implementation of every definition by direct quantifier
// translation over std::set — no bit-vectors, no sharing with the fast path.
// This is the independent side of every dual-route check in the test
// harness; keep it dumb.
namespace prax::oracle {

using Set = std::set<int>;

Set to_set(Bits b);
Bits to_bits(const Set& s);

bool reflexive(const BinaryRelation& r);
bool symmetric(const BinaryRelation& r);
bool transitive(const BinaryRelation& r);
// Pairwise-distinct triple scan of the first clause.
bool weakly_transitive_scan(const BinaryRelation& r);
// Pairwise-distinct triple scan of the third clause (Rxy, Ryz, Ryx, Rzy).
bool proto_transitive_scan(const BinaryRelation& r);
// Triple-loop composition.
BinaryRelation compose_naive(const BinaryRelation& r, const BinaryRelation& q);

std::vector<Set> plain_neighborhoods(const BinaryRelation& r);
std::vector<Set> symm_neighborhoods(const BinaryRelation& r);

Set lower_proto(const BinaryRelation& r, const Set& a);
Set upper_proto(const BinaryRelation& r, const Set& a);
Set lower_symm(const BinaryRelation& r, const Set& a);
Set upper_symm(const BinaryRelation& r, const Set& a);
Set pointwise_lower(const BinaryRelation& r, const Set& a);
Set pointwise_upper(const BinaryRelation& r, const Set& a);

// Fixed points of the named operator (l, u, lo, uo, lu, l+, u+).
std::vector<Set> definite_family(const BinaryRelation& r,
                                 const std::string& op);

// ≈-classes as sorted collections of subsets, sorted by their minimum.
std::vector<std::vector<Set>> rough_classes(const BinaryRelation& r);

// The classes covering the class of ∅ under the componentwise order.
std::vector<std::vector<Set>> atom_classes(const BinaryRelation& r);

// Critical point sets by direct evaluation (x as Set, paired with z).
struct NaiveCriticals {
  std::vector<std::pair<Set, Set>> weak_upper;
  std::vector<std::pair<Set, Set>> upper;
  std::vector<std::pair<Set, Set>> bicritical;
  std::vector<std::pair<Set, Set>> weak_lower;
  std::vector<std::pair<Set, Set>> lower_relative;
  std::vector<Set> lower_absolute;
  std::vector<Set> critical;
};
NaiveCriticals critical_points_naive(const BinaryRelation& r);

// Fault injections for the harness self-test: each corrupts one fast-path
// result before comparison, and the suite must catch it.
enum class Fault {
  none,
  drop_lower_element,   // remove an element from one lower approximation
  extra_definite,       // add a non-fixed subset to a definite family
};

// Asserts the bit-vector implementations equal the naive oracle on
// neighborhoods, the six operators over all subsets, definite families,
// rough classes, atoms, and the critical report. |S| ≤ 8.
ConformanceReport oracle_suite(const BinaryRelation& r,
                               Fault fault = Fault::none);

}  // namespace prax::oracle

#endif  // PRAX_ORACLE_HPP_
