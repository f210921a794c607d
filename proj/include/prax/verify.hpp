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

#ifndef PRAX_VERIFY_HPP_
#define PRAX_VERIFY_HPP_

#include <cstdint>

#include "prax/report.hpp"

namespace prax {

struct VerifyOptions {
  int trials = 200;
  int size = 6;
  std::uint64_t seed = 1;
  // How many instances also get the full naive-oracle cross-check.
  int oracle_instances = 10;
};

// Runs every law in the suite over generated PRAX/PRAS instances plus the
// built-in fixtures: universally quantified laws must hold with zero
// counterexamples; witness searches must succeed; claims with pinned
// counterexamples are re-refuted and reported as documented discrepancies.
ConformanceReport verify_theorems(const VerifyOptions& opt);

}  // namespace prax

#endif  // PRAX_VERIFY_HPP_
