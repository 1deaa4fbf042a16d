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

// Functions GF(q) -> GF(q): sparse polynomials, linearized polynomials and
// lookup tables, plus the structural predicates used by the constructions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "cdiff/field.hpp"

namespace cdiff {

struct Term {
  std::uint64_t exp;
  Index coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of coeff * x^exp with strictly increasing exponents and nonzero
/// coefficients. Exponents are kept exact; reduction mod x^q - x only
/// happens through reduced().
class SparsePoly {
 public:
  SparsePoly() = default;

  /// Sorts, merges equal exponents and drops zero coefficients.
  static SparsePoly from_terms(const Field& f, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    SparsePoly out;
    for (const auto& t : terms) {
      if (t.coeff >= f.q()) throw Error(Errc::FieldMismatch, "coefficient outside the field");
      if (!out.terms_.empty() && out.terms_.back().exp == t.exp)
        out.terms_.back().coeff = f.add(out.terms_.back().coeff, t.coeff);
      else
        out.terms_.push_back(t);
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coeff == 0; });
    return out;
  }

  static SparsePoly monomial(const Field& f, Index coeff, std::uint64_t exp) {
    return from_terms(f, {{exp, coeff}});
  }

  static SparsePoly identity(const Field& f) { return monomial(f, 1, 1); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Same function on GF(q) with every exponent in [0, q-1].
  SparsePoly reduced(const Field& f) const {
    const std::uint64_t n = f.q() - 1;
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({term.exp == 0 ? 0 : (term.exp - 1) % n + 1, term.coeff});
    return from_terms(f, std::move(t));
  }

  /// Every coefficient satisfies c^sub_order == c.
  bool coefficients_in(const Field& f, std::uint64_t sub_order) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return in_subfield(f, t.coeff, sub_order); });
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<Term> terms_;
};

inline SparsePoly poly_add(const Field& f, const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return SparsePoly::from_terms(f, std::move(t));
}

inline SparsePoly poly_scale(const Field& f, const SparsePoly& a, Index c) {
  std::vector<Term> t = a.terms();
  for (auto& term : t) term.coeff = f.mul(term.coeff, c);
  return SparsePoly::from_terms(f, std::move(t));
}

inline Index eval(const Field& f, const SparsePoly& g, Index x) {
  Index acc = 0;
  for (const auto& t : g.terms()) acc = f.add(acc, f.mul(t.coeff, f.pow(x, static_cast<std::int64_t>(t.exp))));
  return acc;
}

/// x -> sum_i coeffs[i] * x^{base_order^i}. Coefficients may live anywhere in
/// the field; with coefficients in GF(base_order) the map is GF(base_order)-linear.
struct LinearizedPoly {
  std::uint64_t base_order = 0;
  std::vector<Index> coeffs;

  static LinearizedPoly identity(std::uint64_t base) { return {base, {1}}; }

  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

inline Index eval(const Field& f, const LinearizedPoly& L, Index x) {
  Index acc = 0, y = x;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    if (i) y = f.pow(y, static_cast<std::int64_t>(L.base_order));
    acc = f.add(acc, f.mul(L.coeffs[i], y));
  }
  return acc;
}

inline SparsePoly to_sparse(const Field& f, const LinearizedPoly& L) {
  std::vector<Term> t;
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i, e *= L.base_order) t.push_back({e, L.coeffs[i]});
  return SparsePoly::from_terms(f, std::move(t));
}

/// Reads a sparse polynomial whose exponents are all powers of base.
inline LinearizedPoly linearized_from_sparse(const Field& f, const SparsePoly& g, std::uint64_t base) {
  f.subfield_degree(base);
  LinearizedPoly L{base, {}};
  for (const auto& t : g.terms()) {
    const int i = detail::exact_log(t.exp, base);
    if (i < 0)
      throw Error(Errc::ParseError, "exponent " + std::to_string(t.exp) + " is not a power of " + std::to_string(base));
    if (L.coeffs.size() <= static_cast<std::size_t>(i)) L.coeffs.resize(i + 1, 0);
    L.coeffs[i] = t.coeff;
  }
  return L;
}

/// Absolute or relative trace Tr_{sub_order}^{q} as a linearized polynomial.
inline LinearizedPoly trace_poly(const Field& f, std::uint64_t sub_order) {
  const std::uint32_t s = f.subfield_degree(sub_order);
  return {sub_order, std::vector<Index>(f.m() / s, 1)};
}

/// x^{sub_order} - x.
inline LinearizedPoly artin_schreier_poly(const Field& f, std::uint64_t sub_order) {
  f.subfield_degree(sub_order);
  return {sub_order, {f.neg(1), 1}};
}

// ---------------------------------------------------------------------------
// Lookup tables
// ---------------------------------------------------------------------------

struct FuncTable {
  std::vector<Index> values;

  std::size_t size() const noexcept { return values.size(); }
  Index operator[](Index x) const noexcept { return values[x]; }
  friend bool operator==(const FuncTable&, const FuncTable&) = default;
};

template <class Fn>
FuncTable tabulate(const Field& f, Fn&& fn) {
  FuncTable t;
  t.values.resize(f.q());
  for (Index x = 0; x < f.q(); ++x) t.values[x] = fn(x);
  return t;
}

inline FuncTable to_table(const Field& f, const SparsePoly& g) {
  // Exponents reduced once mod q-1 so each value is a single log lookup per term.
  const std::uint64_t n = f.q() - 1;
  struct Reduced {
    std::uint64_t exp_mod;
    bool constant;
    Index coeff;
  };
  std::vector<Reduced> rs;
  for (const auto& t : g.terms()) rs.push_back({t.exp % n, t.exp == 0, t.coeff});
  return tabulate(f, [&](Index x) {
    Index acc = 0;
    for (const auto& r : rs) {
      Index xe;
      if (r.constant)
        xe = 1;
      else if (x == 0)
        xe = 0;
      else
        xe = f.exp(static_cast<std::int64_t>(std::uint64_t{f.log(x)} * r.exp_mod % n));
      acc = f.add(acc, f.mul(r.coeff, xe));
    }
    return acc;
  });
}

inline FuncTable to_table(const Field& f, const LinearizedPoly& L) {
  return tabulate(f, [&](Index x) { return eval(f, L, x); });
}

inline bool is_permutation(const FuncTable& t) {
  std::vector<bool> seen(t.size(), false);
  for (auto v : t.values) {
    if (v >= t.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Preimage count of every attained value.
inline std::map<Index, std::uint32_t> image_histogram(const FuncTable& t) {
  std::map<Index, std::uint32_t> h;
  for (auto v : t.values) ++h[v];
  return h;
}

/// Every attained value has exactly two preimages.
inline bool is_2to1(const FuncTable& t) {
  const auto h = image_histogram(t);
  return !h.empty() && std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second == 2; });
}

inline std::uint32_t max_preimage_count(const FuncTable& t) {
  std::vector<std::uint32_t> cnt(t.size(), 0);
  std::uint32_t best = 0;
  for (auto v : t.values) best = std::max(best, ++cnt[v]);
  return best;
}

/// {x : L(x) = 0}, increasing.
inline std::vector<Index> kernel(const Field& f, const LinearizedPoly& L) {
  std::vector<Index> out;
  for (Index x = 0; x < f.q(); ++x)
    if (eval(f, L, x) == 0) out.push_back(x);
  return out;
}

inline std::vector<Index> kernel_intersection(const Field& f, const LinearizedPoly& a, const LinearizedPoly& b) {
  const auto ka = kernel(f, a), kb = kernel(f, b);
  std::vector<Index> out;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(out));
  return out;
}

/// Table of x -> t(L(x) + shift); the inner map must be a permutation.
inline FuncTable compose_affine(const Field& f, const FuncTable& t, const LinearizedPoly& L, Index shift) {
  const FuncTable inner = tabulate(f, [&](Index x) { return f.add(eval(f, L, x), shift); });
  if (!is_permutation(inner)) throw Error(Errc::NotAPermutation, "x -> L(x) + shift is not a permutation");
  return tabulate(f, [&](Index x) { return t[inner[x]]; });
}

}  // namespace cdiff
