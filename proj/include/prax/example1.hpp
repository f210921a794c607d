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

#ifndef PRAX_EXAMPLE1_HPP_
#define PRAX_EXAMPLE1_HPP_

#include "prax/relation.hpp"
#include "prax/report.hpp"

namespace prax {

// The nine-element conformance fixture. The published relation fails its own
// proto-transitivity test (witness triple (c,g,b)); `example1_fixed` adds the
// missing pair (c,b) and is the repaired variant.
Universe example1_universe();
BinaryRelation example1_relation();        // verbatim R
BinaryRelation example1_closure();         // P = R ∪ Δ
BinaryRelation example1_fixed();           // R plus (c,b)
BinaryRelation example1_fixed_closure();   // fixed P

// Runs every fixture check: the A/F approximation values, the reference
// neighborhood table (rows that disagree with the definition are emitted as
// documented discrepancies), and the proto-transitivity verdicts for both
// variants.
ConformanceReport run_example1();

}  // namespace prax

#endif  // PRAX_EXAMPLE1_HPP_
