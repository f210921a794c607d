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

#include "prax/example1.hpp"

#include <vector>

#include "prax/approx.hpp"
#include "prax/oracle.hpp"

namespace prax {

namespace {

const std::vector<std::pair<std::string, std::string>>& verbatim_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"a", "a"}, {"l", "l"}, {"n", "n"}, {"n", "h"}, {"h", "n"}, {"l", "n"},
      {"g", "c"}, {"c", "g"}, {"g", "l"}, {"b", "g"}, {"g", "b"}, {"h", "g"},
      {"a", "b"}, {"b", "c"}, {"h", "a"}, {"a", "c"},
  };
  return pairs;
}

// Reference neighborhood table shipped with the fixture. Plain rows b, c, n
// and symmetrized rows b, c disagree with the neighborhood definition and
// are reported as documented discrepancies.
struct TableRow {
  const char* element;
  std::vector<std::string> plain;
  std::vector<std::string> symm;
};

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {"a", {"a", "h"}, {"a"}},
      {"b", {"b", "c", "g"}, {"b", "c", "g"}},
      {"c", {"b", "c", "g"}, {"b", "c", "g"}},
      {"g", {"b", "c", "g", "h"}, {"b", "c", "g"}},
      {"e", {"e"}, {"e"}},
      {"f", {"f"}, {"f"}},
      {"h", {"h", "n"}, {"h", "n"}},
      {"l", {"l", "g"}, {"l"}},
      {"n", {"n", "l", "g", "h"}, {"n", "h"}},
  };
  return rows;
}

CheckResult set_check(const std::string& name, const std::string& law,
                      const Subset& got, const Subset& want) {
  CheckResult c;
  c.name = name;
  c.law = law;
  c.instances = 1;
  if (got == want) {
    c.status = CheckStatus::pass;
  } else {
    c.status = CheckStatus::fail;
    c.counterexamples = 1;
    c.detail = "expected " + want.to_string() + ", computed " + got.to_string();
  }
  return c;
}

}  // namespace

Universe example1_universe() {
  static const Universe u(
      {"a", "b", "c", "e", "f", "g", "h", "l", "n"});
  return u;
}

BinaryRelation example1_relation() {
  return BinaryRelation::from_named_pairs(example1_universe(),
                                          verbatim_pairs());
}

BinaryRelation example1_closure() {
  return reflexive_closure(example1_relation());
}

BinaryRelation example1_fixed() {
  auto pairs = verbatim_pairs();
  pairs.push_back({"c", "b"});
  return BinaryRelation::from_named_pairs(example1_universe(), pairs);
}

BinaryRelation example1_fixed_closure() {
  return reflexive_closure(example1_fixed());
}

ConformanceReport run_example1() {
  ConformanceReport rep;
  rep.fixture = "example1";
  const Universe u = example1_universe();
  const BinaryRelation r = example1_relation();
  const BinaryRelation p = example1_closure();
  const NeighborhoodMap n = NeighborhoodMap::of(p);

  const Subset a_set = Subset::of(u, {"a", "h", "f"});
  const Subset f_set = Subset::of(u, {"l"});

  rep.add(set_check("A_lower", "A = {a,h,f} has A^l = {a,h,f}",
                    lower_proto(n, a_set), a_set));
  rep.add(set_check("A_lower_symm", "A = {a,h,f} has A^lo = {a,f}",
                    lower_symm(n, a_set), Subset::of(u, {"a", "f"})));
  {
    CheckResult c;
    c.name = "A_symm_strictly_below";
    c.law = "A^lo ⊂ A^l for A = {a,h,f}";
    c.instances = 1;
    Subset lo = lower_symm(n, a_set), l = lower_proto(n, a_set);
    bool strict = lo != l && lo.subset_of(l);
    c.status = strict ? CheckStatus::pass : CheckStatus::fail;
    if (!strict) {
      c.counterexamples = 1;
      c.detail = "A^lo = " + lo.to_string() + ", A^l = " + l.to_string();
    }
    rep.add(c);
  }
  rep.add(set_check("F_lower", "F = {l} has F^l = ∅", lower_proto(n, f_set),
                    Subset::empty(u)));
  rep.add(set_check("F_lower_symm", "F = {l} has F^lo = F",
                    lower_symm(n, f_set), f_set));

  for (const TableRow& row : reference_table()) {
    int x = u.index_checked(row.element);
    Subset want_plain = Subset::of(u, row.plain);
    Subset want_symm = Subset::of(u, row.symm);
    Subset got_plain = n.plain(x);
    Subset got_symm = n.symmetrized(x);

    CheckResult cp;
    cp.name = std::string("table_plain_") + row.element;
    cp.law = "[E] row for " + std::string(row.element);
    cp.instances = 1;
    if (got_plain == want_plain) {
      cp.status = CheckStatus::pass;
    } else {
      cp.status = CheckStatus::documented_discrepancy;
      cp.detail = "reference row " + want_plain.to_string() +
                  " differs from the definition value " +
                  got_plain.to_string();
    }
    rep.add(cp);

    CheckResult cs;
    cs.name = std::string("table_symm_") + row.element;
    cs.law = "[E]_o row for " + std::string(row.element);
    cs.instances = 1;
    if (got_symm == want_symm) {
      cs.status = CheckStatus::pass;
    } else {
      cs.status = CheckStatus::documented_discrepancy;
      cs.detail = "reference row " + want_symm.to_string() +
                  " differs from the definition value " + got_symm.to_string();
    }
    rep.add(cs);
  }

  {
    CheckResult c;
    c.name = "verbatim_proto_transitivity";
    c.law = "the published relation is claimed proto-transitive";
    c.instances = 1;
    bool fast = is_proto_transitive(r);
    bool scan = oracle::proto_transitive_scan(r);
    if (fast || scan) {
      c.status = CheckStatus::fail;
      c.detail = "expected both routes to reject";
      c.counterexamples = 1;
    } else {
      c.status = CheckStatus::documented_discrepancy;
      c.detail =
          "claim refuted by both routes; witness triple (c,g,b) needs the "
          "absent pair (c,b)";
    }
    rep.add(c);
  }
  {
    CheckResult c;
    c.name = "fixed_is_pras";
    c.law = "the repaired relation (plus (c,b)) is proto-transitive";
    c.instances = 1;
    bool ok = is_proto_transitive(example1_fixed()) &&
              oracle::proto_transitive_scan(example1_fixed());
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) c.counterexamples = 1;
    rep.add(c);
  }
  {
    CheckResult c;
    c.name = "fixed_closure_is_prax";
    c.law = "the repaired reflexive closure is a PRAX and not transitive";
    c.instances = 1;
    PropertyReport props = classify(example1_fixed_closure());
    bool ok = props.is_prax && props.reflexive && !props.transitive;
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) c.counterexamples = 1;
    rep.add(c);
  }
  return rep;
}

}  // namespace prax
