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

#ifndef PRAX_REPRESENTATION_HPP_
#define PRAX_REPRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prax/quotient.hpp"

namespace prax {

// Broom predicates. The pairwise clauses are evaluated over distinct pairs;
// a singleton collection whose only member is proto-definite is rejected
// outright. Members must be non-singleton subsets.
bool is_upper_broom(const NeighborhoodMap& n,
                    const std::vector<Subset>& alpha);
bool is_lower_broom(const NeighborhoodMap& n, const std::vector<Subset>& alpha);

struct BroomEnumeration {
  std::vector<std::vector<Subset>> upper;
  std::vector<std::vector<Subset>> lower;
  bool truncated = false;
  // Whether the literal lower-broom sub-collection clause ever rejected a
  // candidate that passed the two pairwise conditions.
  bool lower_clause3_discriminating = false;
};

// Exhaustive enumeration, grouped by shared approximation value. Throws
// cap_error above caps.search; output stops at `limit` brooms per kind.
BroomEnumeration enumerate_brooms(const NeighborhoodMap& n,
                                  const Caps& caps = Caps::active(),
                                  std::size_t limit = 20000);

// A generalized interval in ℘(S); endpoints may be single sets or
// collections of sets.
struct Bruinval {
  enum class Kind {
    interval0,      // (x,y), [x,y), (x,y], [x,y]
    open_to_set,    // [x,α), (x,α], (x,α)
    closed_to_set,  // [x,α]
    set_open,       // (α,β)
    set_closed,     // [α,β]  (closed_left/right select the mixed forms)
    semi_closed,    // [[α,β]] with split pieces
  };
  Kind kind = Kind::interval0;
  bool closed_left = false;
  bool closed_right = false;
  Subset x, y;                       // interval endpoints
  std::vector<Subset> alpha, beta;   // collection endpoints
  std::vector<Subset> alpha2, beta2; // second halves of the semi-closed split

  static const char* kind_name(Kind k);
  static Kind parse_kind(const std::string& name);
};

// Exact member enumeration per kind. The semi-closed form is the union
// (α₁,β₁) ∪ [α₂,β₂] ∪ (α₁,β₂] ∪ [α₂,β₁). Throws std::invalid_argument on a
// malformed endpoint combination and cap_error above caps.definites.
std::vector<Subset> bruinval_members(const Bruinval& b,
                                     const Caps& caps = Caps::active());

// All members share (lower, upper). Empty and singleton collections qualify.
bool is_requal_constant(const NeighborhoodMap& n,
                        const std::vector<Subset>& c);

// True iff the collection is exactly one full ≈-class. Delegates class
// membership to the quotient module.
bool is_full_requal_set(const NeighborhoodMap& n,
                        const std::vector<Subset>& c);
bool is_full_requal_set(const QuotientPoset& h, const std::vector<Subset>& c);

// One evaluated claim about interval representations of rough classes.
struct ClaimCheck {
  std::string name;
  std::string law;
  long hypothesis_cases = 0;  // cases where the hypotheses held
  long vacuous_cases = 0;     // hypotheses held but the claim said nothing
  long failures = 0;
  std::vector<std::string> witnesses;  // first few failures, rendered
  bool holds() const { return failures == 0; }
};

struct FullSetTheoremReport {
  std::vector<ClaimCheck> checks;
  const ClaimCheck* find(const std::string& name) const;
};

// Evaluates every interval/full-class claim on one space: sufficient
// conditions for bruinval-0 forms to be full, the definite-endpoint
// propositions, the open-bruinval criterion (both directions, open- and
// closed-left forms), and the critical-point interval remark. Pass/fail per
// claim with witnesses; nothing is assumed true.
FullSetTheoremReport full_set_theorems_check(const NeighborhoodMap& n,
                                             const Caps& caps = Caps::active());

// Critical-point report. Pair lists carry a vacuity flag: vacuous entries
// satisfied the defining implication with an empty antecedent.
struct CriticalPair {
  Bits x = 0;
  Bits other = 0;  // the relative element (z, or b for bicritical)
  bool vacuous = false;
};

struct CriticalReport {
  Universe universe;
  std::vector<CriticalPair> weak_upper;     // (x, z), z ⊂ x
  std::vector<CriticalPair> upper;          // (x, z), z ⊂ x
  std::vector<CriticalPair> bicritical;     // (a, b), a ⊂ b
  std::vector<CriticalPair> weak_lower;     // (x, z), z ⊃ x
  std::vector<CriticalPair> lower_relative; // (x, z), z ⊃ x
  std::vector<Bits> lower_absolute;
  std::vector<Bits> critical;  // lower_absolute ∩ {x upper-critical for some z}
};

// Exhaustive classification by direct quantifier evaluation over ℘(S).
// Throws cap_error above caps.critical.
CriticalReport critical_points(const NeighborhoodMap& n,
                               const Caps& caps = Caps::active());

}  // namespace prax

#endif  // PRAX_REPRESENTATION_HPP_
