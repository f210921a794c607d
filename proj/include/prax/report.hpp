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

#ifndef PRAX_REPORT_HPP_
#define PRAX_REPORT_HPP_

#include <string>
#include <vector>

namespace prax {

// `documented_discrepancy` marks a reference value or claimed law that the
// implementation provably disagrees with; the witness is part of the check.
// It never counts as a failure of the artifact.
enum class CheckStatus { pass, fail, documented_discrepancy };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  // The statement being verified, written out (the traceable citation).
  std::string law;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  long instances = 0;
  long counterexamples = 0;
};

struct ConformanceReport {
  std::string fixture;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  bool all_passed() const;  // no `fail` entries
  int count(CheckStatus s) const;
  const CheckResult* find(const std::string& name) const;
};

}  // namespace prax

#endif  // PRAX_REPORT_HPP_
