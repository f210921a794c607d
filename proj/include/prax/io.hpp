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

#ifndef PRAX_IO_HPP_
#define PRAX_IO_HPP_

#include <string>

#include <json.hpp>

#include "prax/definites.hpp"
#include "prax/knowledge.hpp"
#include "prax/quotient.hpp"
#include "prax/relation.hpp"
#include "prax/report.hpp"
#include "prax/representation.hpp"

namespace prax::io {

// Plain nlohmann::json keeps object keys sorted, which the canonical output
// format requires.
using json = nlohmann::json;

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical relation format:
//   {"universe": ["a","b",...], "pairs": [["a","a"],["a","b"],...]}
// Pairs are (source, target), meaning R source target. Unknown names and
// duplicate universe entries are rejected.
BinaryRelation relation_from_json(const json& j);
json relation_to_json(const BinaryRelation& r);

// Edge-list text: a `# universe: a b c ...` header, then one `x y` pair per
// line. Other `#` lines are comments.
BinaryRelation relation_from_text(const std::string& text);

// Dispatches on the leading non-space character ('{' → JSON).
BinaryRelation relation_from_string(const std::string& text);
BinaryRelation relation_from_file(const std::string& path);

// Subsets render as element-name arrays in universe order.
json subset_to_json(const Subset& s);
Subset subset_from_json(const Universe& u, const json& j);

json property_report_to_json(const PropertyReport& p);
json definite_family_to_json(const DefiniteFamily& f, bool complete_sublattice,
                             bool boolean_algebra);
json quotient_to_json(const QuotientPoset& h);
json critical_report_to_json(const CriticalReport& c);
json broom_enumeration_to_json(const Universe& u, const BroomEnumeration& b);
json positive_region_to_json(const PositiveRegion& p);
json conformance_to_json(const ConformanceReport& r);
json theorem_report_to_json(const Universe& u, const FullSetTheoremReport& r);

Bruinval bruinval_from_json(const Universe& u, const json& j);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace prax::io

#endif  // PRAX_IO_HPP_
