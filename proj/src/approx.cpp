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

#include "prax/approx.hpp"

#include <stdexcept>

namespace prax {

NeighborhoodMap NeighborhoodMap::of(const BinaryRelation& r, Orientation o) {
  NeighborhoodMap m;
  m.relation_ = r;
  const int n = r.universe().size();
  m.plain_.resize(n);
  m.symm_.resize(n);
  for (int x = 0; x < n; ++x) {
    Bits into = r.column(x);   // {y : R y x}
    Bits from = r.rows()[x];   // {y : R x y}
    m.plain_[x] = (o == Orientation::successor) ? into : from;
    m.symm_[x] = into & from;  // orientation-independent
  }
  m.reflexive_ = is_reflexive(r);
  m.prax_ = m.reflexive_ && is_proto_transitive(r);
  return m;
}

NeighborhoodMap neighborhoods(const BinaryRelation& r, Orientation o) {
  return NeighborhoodMap::of(r, o);
}

namespace kernel {

Bits lower(const std::vector<Bits>& nb, Bits a) {
  Bits out = 0;
  for (Bits g : nb) {
    if ((g & ~a) == 0) out |= g;
  }
  return out;
}

Bits upper(const std::vector<Bits>& nb, Bits a) {
  Bits out = 0;
  for (Bits g : nb) {
    if (g & a) out |= g;
  }
  return out;
}

Bits lower_point(const std::vector<Bits>& nb, Bits a) {
  Bits out = 0;
  for (std::size_t x = 0; x < nb.size(); ++x) {
    if ((nb[x] & ~a) == 0) out |= bit(static_cast<int>(x));
  }
  return out;
}

Bits upper_point(const std::vector<Bits>& nb, Bits a) {
  Bits out = 0;
  for (std::size_t x = 0; x < nb.size(); ++x) {
    if (nb[x] & a) out |= bit(static_cast<int>(x));
  }
  return out;
}

}  // namespace kernel

namespace {

Subset wrap(const NeighborhoodMap& n, Bits b) {
  return Subset(n.universe(), b);
}

Bits arg(const NeighborhoodMap& n, const Subset& a, const char* op) {
  require_same_universe(n.universe(), a.universe(), op);
  return a.bits();
}

}  // namespace

Subset lower_proto(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n, kernel::lower(n.plain_bits(), arg(n, a, "lower_proto")));
}

Subset upper_proto(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n, kernel::upper(n.plain_bits(), arg(n, a, "upper_proto")));
}

Subset lower_symm(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n, kernel::lower(n.symm_bits(), arg(n, a, "lower_symm")));
}

Subset upper_symm(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n, kernel::upper(n.symm_bits(), arg(n, a, "upper_symm")));
}

Subset pointwise_lower(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n,
              kernel::lower_point(n.plain_bits(), arg(n, a, "pointwise_lower")));
}

Subset pointwise_upper(const NeighborhoodMap& n, const Subset& a) {
  return wrap(n,
              kernel::upper_point(n.plain_bits(), arg(n, a, "pointwise_upper")));
}

const char* token_name(OpToken t) {
  switch (t) {
    case OpToken::lower: return "l";
    case OpToken::upper: return "u";
    case OpToken::lower_symm: return "lo";
    case OpToken::upper_symm: return "uo";
    case OpToken::lower_point: return "l+";
    case OpToken::upper_point: return "u+";
    case OpToken::complement: return "c";
  }
  return "?";
}

OperatorExpr OperatorExpr::parse(const std::string& text) {
  OperatorExpr e;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (tok == "l") e.tokens.push_back(OpToken::lower);
    else if (tok == "u") e.tokens.push_back(OpToken::upper);
    else if (tok == "lo") e.tokens.push_back(OpToken::lower_symm);
    else if (tok == "uo") e.tokens.push_back(OpToken::upper_symm);
    else if (tok == "l+") e.tokens.push_back(OpToken::lower_point);
    else if (tok == "u+") e.tokens.push_back(OpToken::upper_point);
    else if (tok == "c") e.tokens.push_back(OpToken::complement);
    else
      throw std::invalid_argument("unknown operator token '" + tok +
                                  "' (expected l,u,lo,uo,l+,u+,c)");
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (e.tokens.empty()) {
    throw std::invalid_argument("empty operator expression");
  }
  return e;
}

std::string OperatorExpr::str() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += '.';
    out += token_name(tokens[i]);
  }
  return out;
}

Bits apply_expr_bits(const NeighborhoodMap& n, const OperatorExpr& e, Bits a) {
  if (e.tokens.empty()) {
    throw std::invalid_argument("empty operator expression");
  }
  Bits cur = a;
  const Bits full = n.universe().full_mask();
  for (OpToken t : e.tokens) {
    switch (t) {
      case OpToken::lower: cur = kernel::lower(n.plain_bits(), cur); break;
      case OpToken::upper: cur = kernel::upper(n.plain_bits(), cur); break;
      case OpToken::lower_symm: cur = kernel::lower(n.symm_bits(), cur); break;
      case OpToken::upper_symm: cur = kernel::upper(n.symm_bits(), cur); break;
      case OpToken::lower_point:
        cur = kernel::lower_point(n.plain_bits(), cur);
        break;
      case OpToken::upper_point:
        cur = kernel::upper_point(n.plain_bits(), cur);
        break;
      case OpToken::complement: cur = ~cur & full; break;
    }
  }
  return cur;
}

Subset apply_expr(const NeighborhoodMap& n, const OperatorExpr& e,
                  const Subset& a) {
  return wrap(n, apply_expr_bits(n, e, arg(n, a, "apply_expr")));
}

ApproxTable ApproxTable::build(const NeighborhoodMap& n, int cap,
                               const std::string& operation) {
  require_cap(n.size(), cap, operation);
  const Bits count = Bits{1} << n.size();
  ApproxTable t;
  t.l.resize(count);
  t.u.resize(count);
  t.lo.resize(count);
  t.uo.resize(count);
  for (Bits a = 0; a < count; ++a) {
    t.l[a] = kernel::lower(n.plain_bits(), a);
    t.u[a] = kernel::upper(n.plain_bits(), a);
    t.lo[a] = kernel::lower(n.symm_bits(), a);
    t.uo[a] = kernel::upper(n.symm_bits(), a);
  }
  return t;
}

}  // namespace prax
