// Copyright 2026 The cdifflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Family instances built from named text parameters, each carrying the
// uniformity it is expected to have for every c of its valid set. The CLI
// and the table runner both go through build_instance / verify_instance.
//
// Parameters per family (element values use the literal syntax):
//   T1    field=p,m | q=order   l  u
//   T2    d  k  i  a1  a2  a3                  (field GF(3^{3d}))
//   P1    m  gamma  f=<poly> | f_table=<csv>   (field GF(2^m))
//   C1    m  k  gamma                          (field GF(2^{2m}))
//   T4    q  n  L  gamma                       (L exponents powers of p)
//   T5    m  k  gamma
//   T6    q  a0  a1                            (field GF(q^2))
//   T7    m  t
//   T8    q  n  phi  g  u
//   T9    q  n  g  u
//   T10   q  n  phi  g  u
//   T11   q  n  phi  g  u  d=d1,d2,..          (C2 is an alias)
//   MONO  field=p,m | q=order   e   [claim=N | claim=<=N]
// Every family also accepts c=valid|all|<list> to narrow the c set.
#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cdiff/constructions.hpp"
#include "cdiff/literal.hpp"

namespace cdiff {

using Params = std::map<std::string, std::string>;

struct Claim {
  enum class Kind { Equal, AtMost, SomeAboveOne, None };
  Kind kind = Kind::None;
  std::uint32_t value = 0;

  static Claim equal(std::uint32_t v) { return {Kind::Equal, v}; }
  static Claim at_most(std::uint32_t v) { return {Kind::AtMost, v}; }
  static Claim some_above_one() { return {Kind::SomeAboveOne, 1}; }

  /// Per-c verdict. SomeAboveOne is decided over the whole valid set.
  bool holds(std::uint32_t delta) const {
    switch (kind) {
      case Kind::Equal: return delta == value;
      case Kind::AtMost: return delta <= value;
      case Kind::SomeAboveOne: return delta > 1;
      case Kind::None: return true;
    }
    return false;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Equal: return "=" + std::to_string(value);
      case Kind::AtMost: return "<=" + std::to_string(value);
      case Kind::SomeAboveOne: return "not PcN";
      case Kind::None: return "none";
    }
    return "none";
  }

  /// "2", "=2", "<=2" or "none".
  static Claim parse(const std::string& s) {
    try {
      if (s == "none") return {};
      if (s.rfind("<=", 0) == 0) return at_most(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
      if (s.rfind("=", 0) == 0) return equal(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
      return equal(static_cast<std::uint32_t>(std::stoul(s)));
    } catch (const std::logic_error&) {
      throw Error(Errc::BadParameters, "bad claim '" + s + "'");
    }
  }

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Instance {
  std::string family;
  std::string description;
  std::shared_ptr<const Field> field;
  FuncTable table;
  ValidCSet valid;
  /// claims[i] applies to valid.members[i].
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

namespace detail {

class ParamReader {
 public:
  ParamReader(const Params& p, std::string family) : p_(p), family_(std::move(family)) {}

  bool has(const std::string& key) const { return p_.count(key) != 0; }

  const std::string& str(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end()) throw Error(Errc::BadParameters, family_ + " needs parameter '" + key + "'");
    return it->second;
  }
  std::string str_or(const std::string& key, std::string def) const { return has(key) ? str(key) : def; }

  std::int64_t integer(const std::string& key) const {
    const auto& s = str(key);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(Errc::BadParameters, "parameter '" + key + "' must be an integer, got '" + s + "'");
    return v;
  }
  std::uint64_t natural(const std::string& key) const {
    const auto v = integer(key);
    if (v < 0) throw Error(Errc::BadParameters, "parameter '" + key + "' must be non-negative");
    return static_cast<std::uint64_t>(v);
  }
  std::vector<std::uint64_t> naturals(const std::string& key) const {
    std::vector<std::uint64_t> out;
    std::stringstream ss(str(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stoull(item));
      } catch (const std::logic_error&) {
        throw Error(Errc::BadParameters, "parameter '" + key + "' must be a list of integers");
      }
    }
    return out;
  }
  Index element(const Field& f, const std::string& key) const { return parse_element(f, str(key)); }
  SparsePoly poly(const Field& f, const std::string& key) const { return parse_poly(f, str(key)); }

 private:
  const Params& p_;
  std::string family_;
};

inline std::shared_ptr<const Field> share(Field f) { return std::make_shared<const Field>(std::move(f)); }

/// "field=p,m" or "q=order".
inline std::shared_ptr<const Field> ambient_field(const ParamReader& r) {
  if (r.has("field")) {
    const auto& s = r.str("field");
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(Errc::BadParameters, "field must be written p,m");
    try {
      return share(make_field(static_cast<std::uint32_t>(std::stoul(s.substr(0, comma))),
                              static_cast<std::uint32_t>(std::stoul(s.substr(comma + 1)))));
    } catch (const std::logic_error&) {
      throw Error(Errc::BadParameters, "field must be written p,m");
    }
  }
  return share(make_field_of_order(r.natural("q")));
}

/// GF(q^n) from the subfield order and the degree.
inline std::shared_ptr<const Field> tower_field(std::uint64_t q_sub, std::uint64_t n) {
  if (n == 0 || q_sub < 2) throw Error(Errc::BadTowerParameters, "need q >= 2 and n >= 1");
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    order *= q_sub;
    if (order > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "q^n exceeds 2^20");
  }
  return share(make_field_of_order(order));
}

inline std::shared_ptr<const Field> binary_field(std::uint64_t m) {
  if (m == 0 || m > 20) throw Error(Errc::FieldTooLarge, "2^m must lie in [2, 2^20]");
  return share(make_field(2, static_cast<std::uint32_t>(m)));
}

inline LinearizedPoly linearized_param(const Field& f, const ParamReader& r, const std::string& key,
                                       const std::string& def) {
  return linearized_from_sparse(f, parse_poly(f, r.str_or(key, def)), f.p());
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Keeps the members named by c=...; listed values must be valid.
inline void select_c(Instance& inst, const ParamReader& r) {
  const std::string sel = r.str_or("c", "valid");
  if (sel == "valid" || sel == "all") return;
  const auto wanted = parse_element_list(*inst.field, sel);
  ValidCSet kept{inst.valid.family, {}};
  std::vector<Claim> claims;
  for (auto c : wanted) {
    auto it = std::find_if(inst.valid.members.begin(), inst.valid.members.end(),
                           [c](const ValidC& v) { return v.c == c; });
    if (it == inst.valid.members.end())
      throw Error(Errc::BadParameters, "c = " + format_element(*inst.field, c) + " is not in the valid set");
    if (kept.contains(c)) continue;
    kept.members.push_back(*it);
    claims.push_back(inst.claims[static_cast<std::size_t>(it - inst.valid.members.begin())]);
  }
  inst.valid = std::move(kept);
  inst.claims = std::move(claims);
}

}  // namespace detail

inline const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "P1", "C1",  "T4",  "T5", "T6",
                                            "T7", "T8", "T9", "T10", "T11", "C2", "MONO"};
  return ids;
}

inline Instance build_instance(const std::string& family, const Params& params) {
  detail::ParamReader r(params, family);
  Instance inst;
  inst.family = family;
  auto uniform = [&](Claim c) { inst.claims.assign(inst.valid.members.size(), c); };

  if (family == "T1") {
    inst.field = detail::ambient_field(r);
    const Field& f = *inst.field;
    const auto l = static_cast<std::uint32_t>(r.natural("l"));
    const Index u = r.element(f, "u");
    auto b = build_T1(f, l, u);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "x(sum_{i=1}^{" + std::to_string(l - 1) + "} x^{" + std::to_string((f.q() - 1) / l) +
                       "i} + " + format_element(f, u) + ")";
    uniform(Claim::at_most(2));
  } else if (family == "T2") {
    T2Params P;
    P.d = static_cast<std::uint32_t>(r.natural("d"));
    P.k = static_cast<std::uint32_t>(r.natural("k"));
    P.i = static_cast<std::uint32_t>(r.natural("i"));
    P.a1 = r.integer("a1");
    P.a2 = r.integer("a2");
    P.a3 = r.integer("a3");
    if (P.d == 0 || 3 * P.d > 12) throw Error(Errc::BadParameters, "T2 needs 1 <= d <= 4");
    inst.field = detail::share(make_field(3, 3 * P.d));
    auto b = build_T2(*inst.field, P);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "(x^{3^" + std::to_string(P.k) + "} - x)^{(q-1)/2 + 3^" + std::to_string(P.i * P.k) +
                       "} + (" + std::to_string(P.a1) + ")x + (" + std::to_string(P.a2) + ")x^{3^" +
                       std::to_string(P.k) + "} + (" + std::to_string(P.a3) + ")x^{3^" +
                       std::to_string(2 * P.k) + "}";
    uniform(Claim::at_most(2));
  } else if (family == "P1") {
    inst.field = detail::binary_field(r.natural("m"));
    const Field& f = *inst.field;
    FuncTable g;
    std::string fdesc;
    if (r.has("f_table")) {
      std::ifstream in(r.str("f_table"));
      if (!in) throw Error(Errc::BadParameters, "cannot open " + r.str("f_table"));
      g = read_table_csv(f, in);
      fdesc = "table " + r.str("f_table");
    } else {
      const auto fp = r.poly(f, "f");
      g = to_table(f, fp);
      fdesc = format_poly(f, fp);
    }
    const Index gamma = r.element(f, "gamma");
    auto b = build_P1(f, g, gamma);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "switch of f = " + fdesc + " by gamma = " + format_element(f, gamma);
    uniform(Claim{});
    detail::select_c(inst, r);  // narrow before paying for the spectrum of f
    const auto cs = inst.valid.cs();
    const auto base = spectrum(f, g, cs);
    const bool zero_trace = abs_trace(f, gamma) == 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto d = base.find(cs[i])->delta;
      inst.claims[i] = zero_trace ? Claim::equal(d) : Claim::at_most(2 * d);
    }
    inst.diagnostics.emplace_back("Tr(gamma)", std::to_string(abs_trace(f, gamma)));
    return inst;
  } else if (family == "C1") {
    const auto m = r.natural("m");
    const auto k = r.natural("k");
    inst.field = detail::binary_field(2 * m);
    const Field& f = *inst.field;
    const Index gamma = r.element(f, "gamma");
    auto b = build_C1(f, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k), gamma);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "x + " + format_element(f, gamma) + " Tr(x^" + std::to_string((1u << k) + 1) + ")";
    inst.diagnostics.emplace_back("d", std::to_string(c1_d(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(k))));
    uniform(Claim::equal(1));
  } else if (family == "T4") {
    const auto q_sub = r.natural("q");
    const auto n = r.natural("n");
    inst.field = detail::tower_field(q_sub, n);
    const Field& f = *inst.field;
    const auto L = detail::linearized_param(f, r, "L", "x");
    const Index gamma = r.element(f, "gamma");
    auto b = build_T4(f, L, gamma, q_sub, static_cast<std::uint32_t>(n));
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = format_poly(f, to_sparse(f, L)) + " + L(" + format_element(f, gamma) + ") Tr(x)^" +
                       std::to_string(q_sub - 1);
    uniform(Claim::equal(1));
  } else if (family == "T5") {
    const auto k = r.natural("k");
    inst.field = detail::binary_field(r.natural("m"));
    const Field& f = *inst.field;
    const Index gamma = r.element(f, "gamma");
    auto b = build_T5(f, static_cast<std::uint32_t>(k), gamma);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "x^" + std::to_string((std::uint64_t{1} << k) + 1) + " + " + format_element(f, gamma) + " Tr(x)";
    uniform(Claim::at_most(2));
  } else if (family == "T6") {
    const auto q_sub = r.natural("q");
    inst.field = detail::tower_field(q_sub, 2);
    const Field& f = *inst.field;
    const Index a0 = r.element(f, "a0"), a1 = r.element(f, "a1");
    auto b = build_T6(f, q_sub, a0, a1);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "x^" + std::to_string(q_sub + 1) + " + " + format_element(f, a0) + " x^" +
                       std::to_string(q_sub) + " + " + format_element(f, a1) + " x";
    uniform(Claim::equal(2));
  } else if (family == "T7") {
    inst.field = detail::binary_field(r.natural("m"));
    const Field& f = *inst.field;
    const Index t = r.element(f, "t");
    auto b = build_T7(f, t);
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.description = "x^{q-2} with the images of 0 and " + format_element(f, t) + " swapped";
    uniform(Claim::at_most(3));
  } else if (family == "T8" || family == "T9" || family == "T10" || family == "T11" || family == "C2") {
    const auto q_sub = r.natural("q");
    const auto n = static_cast<std::uint32_t>(r.natural("n"));
    inst.field = detail::tower_field(q_sub, n);
    const Field& f = *inst.field;
    const auto g = parse_poly(f, r.str_or("g", "0"));
    const Index u = parse_element(f, r.str_or("u", "1"));
    AgwConstruction b;
    if (family == "T9") {
      b = build_T9(f, g, u, q_sub, n);
      inst.description = format_element(f, u) + " (x^" + std::to_string(q_sub) + " - x) + g(Tr(x)), g = " + format_poly(f, g);
    } else {
      const auto phi = detail::linearized_param(f, r, "phi", "x");
      const std::string ph = format_poly(f, to_sparse(f, phi));
      if (family == "T8") {
        b = build_T8(f, phi, g, u, q_sub, n);
        inst.description = format_element(f, u) + " (" + ph + ") + g(Tr(x))^q - g(Tr(x)), g = " + format_poly(f, g);
      } else if (family == "T10") {
        b = build_T10(f, phi, g, u, q_sub, n);
        inst.description = format_element(f, u) + " (" + ph + ") + g(Tr(x)), g = " + format_poly(f, g);
      } else {
        const auto ds = r.naturals("d");
        b = build_T11(f, phi, g, u, ds, q_sub, n);
        std::string dl;
        for (auto d : ds) dl += (dl.empty() ? "" : ",") + std::to_string(d);
        inst.description = format_element(f, u) + " (" + ph + ") + sum_d g(x^q - x)^{(q^n-1)/d}, d in {" + dl +
                           "}, g = " + format_poly(f, g);
        inst.diagnostics.emplace_back("phi permutes J", detail::yes_no(b.diagnostics.permutes_j));
        inst.diagnostics.emplace_back("phi 2-to-1 on GF(q)", detail::yes_no(b.diagnostics.two_to_one_on_subfield));
      }
    }
    inst.table = std::move(b.table);
    inst.valid = std::move(b.valid);
    inst.diagnostics.insert(inst.diagnostics.begin(),
                            {family == "T11" || family == "C2" ? "ker(phi) meets GF(q) in 0" : "ker(phi) meets ker(Tr) in 0",
                             detail::yes_no(b.diagnostics.kernel_condition)});
    inst.diagnostics.emplace_back("phi GF(q)-linear", detail::yes_no(b.diagnostics.phi_fq_linear));
    if (family == "T9") {
      uniform(Claim::equal(1));
    } else if (family == "T8" || family == "T10") {
      uniform(b.diagnostics.kernel_condition ? Claim::equal(1) : Claim::some_above_one());
    } else {
      const std::string branch = inst.valid.members.empty() ? "none" : inst.valid.members.front().branch;
      inst.diagnostics.emplace_back("branch", branch);
      uniform(branch == "PcN" ? Claim::equal(1) : branch == "APcN" ? Claim::equal(2) : Claim::some_above_one());
    }
  } else if (family == "MONO") {
    inst.field = detail::ambient_field(r);
    const Field& f = *inst.field;
    const auto e = r.natural("e");
    inst.table = build_MONO(f, e);
    inst.valid = {"MONO", {}};
    for (auto c : all_c(f)) inst.valid.members.push_back({c, "any c"});
    inst.description = "x^" + std::to_string(e);
    uniform(Claim::parse(r.str_or("claim", "none")));
  } else {
    throw Error(Errc::BadParameters, "unknown family '" + family + "'");
  }
  detail::select_c(inst, r);
  return inst;
}

struct VerifyRow {
  ValidC c;
  CDiffReport report;
  Claim claim;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool pass = true;
};

/// Sweeps every valid c. Equal / AtMost claims must hold at each c; a
/// SomeAboveOne claim passes when at least one c has delta > 1.
inline VerifyReport verify_instance(const Instance& inst, const SweepOptions& opts = {}) {
  const auto cs = inst.valid.cs();
  const auto spec = spectrum(*inst.field, inst.table, cs, opts);
  VerifyReport out;
  bool any_above_one = false, needs_above_one = false;
  for (std::size_t i = 0; i < inst.valid.members.size(); ++i) {
    const auto& rep = *spec.find(inst.valid.members[i].c);
    VerifyRow row{inst.valid.members[i], rep, inst.claims[i], inst.claims[i].holds(rep.delta)};
    if (row.claim.kind == Claim::Kind::SomeAboveOne) {
      needs_above_one = true;
      any_above_one = any_above_one || rep.delta > 1;
    } else if (!row.pass) {
      out.pass = false;
    }
    out.rows.push_back(std::move(row));
  }
  if (needs_above_one && !any_above_one) out.pass = false;
  return out;
}

}  // namespace cdiff
