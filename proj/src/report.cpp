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

#include "prax/report.hpp"

namespace prax {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::documented_discrepancy: return "documented-discrepancy";
  }
  return "?";
}

bool ConformanceReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

int ConformanceReport::count(CheckStatus s) const {
  int n = 0;
  for (const CheckResult& c : checks) {
    if (c.status == s) ++n;
  }
  return n;
}

const CheckResult* ConformanceReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace prax
