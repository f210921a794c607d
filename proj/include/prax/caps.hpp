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

#ifndef PRAX_CAPS_HPP_
#define PRAX_CAPS_HPP_

#include <stdexcept>
#include <string>

namespace prax {

// Size limits for the exhaustive enumerations. Exceeding a cap is a checked
// error, never silent truncation.
struct Caps {
  int relation = 24;   // any relation-level operation
  int definites = 16;  // fixed-point families (one powerset scan)
  int quotient = 14;   // quotient poset construction
  int critical = 10;   // critical-point classification (sum-over-intervals scans)
  int search = 6;      // broom / bruinval enumeration

  // Defaults, or every cap forced to the value of PRAX_CAP_OVERRIDE when the
  // environment variable is set (a warning is printed to stderr once).
  static Caps active();

  // All caps set to n, for explicit --cap-override style use.
  static Caps uniform(int n);
};

class cap_error : public std::runtime_error {
 public:
  cap_error(const std::string& operation, int requested, int cap);
  int requested;
  int cap;
};

// Throws cap_error if size > cap.
void require_cap(int size, int cap, const std::string& operation);

}  // namespace prax

#endif  // PRAX_CAPS_HPP_
