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

#include "prax/caps.hpp"

#include <cstdlib>
#include <iostream>

namespace prax {

Caps Caps::uniform(int n) {
  Caps c;
  c.relation = c.definites = c.quotient = c.critical = c.search = n;
  return c;
}

Caps Caps::active() {
  static const Caps instance = [] {
    const char* env = std::getenv("PRAX_CAP_OVERRIDE");
    if (env == nullptr || *env == '\0') return Caps{};
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 24) {
      std::cerr << "warning: ignoring invalid PRAX_CAP_OVERRIDE value '" << env
                << "' (expected an integer in [1,24])\n";
      return Caps{};
    }
    std::cerr << "warning: PRAX_CAP_OVERRIDE=" << v
              << " replaces every size cap; enumerations may be very slow\n";
    return Caps::uniform(static_cast<int>(v));
  }();
  return instance;
}

cap_error::cap_error(const std::string& operation, int req, int limit)
    : std::runtime_error(operation + ": universe size " + std::to_string(req) +
                         " exceeds the cap " + std::to_string(limit)),
      requested(req),
      cap(limit) {}

void require_cap(int size, int cap, const std::string& operation) {
  if (size > cap) throw cap_error(operation, size, cap);
}

}  // namespace prax
