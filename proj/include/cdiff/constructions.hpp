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

/**
 * @file constructions.hpp
 * @brief Builders for the PcN / APcN function families.
 *
 * Every builder takes the ambient field, checks the family's preconditions
 * (throwing the matching Errc), and returns the lookup table together with
 * the set of c values for which the family's hypotheses hold. The valid set
 * is found by testing every candidate c, never by solving the conditions.
 *
 * Families with a piecewise description are tabulated twice, once from the
 * closed formula and once from the case rule, and the two tables must agree.
 *
 * Family ids:
 *   T1   x (sum_{i=1}^{l-1} x^{(q-1)i/l} + u)                     cyclotomic
 *   T2   (x^{3^k} - x)^{(q-1)/2 + 3^{ik}} + a1 x + a2 x^{3^k} + a3 x^{3^{2k}}
 *   P1   f(x)(Tr(x) + 1) + f(x + gamma) Tr(x)                      switch
 *   C1   x + gamma Tr(x^{2^k+1}) over GF(2^{2m})
 *   T4   L(x) + L(gamma) Tr_q^{q^n}(x)^{q-1}
 *   T5   x^{2^k+1} + gamma Tr(x)
 *   T6   x^{q+1} + a0 x^q + a1 x over GF(q^2)
 *   T7   inverse function with the images of 0 and t swapped
 *   T8   u phi(x) + g(Tr(x))^q - g(Tr(x))
 *   T9   u (x^q - x) + g(Tr(x))
 *   T10  u phi(x) + g(Tr(x))
 *   T11  u phi(x) + sum_i g(x^q - x)^{(q^n-1)/d_i}  (C2 when several d_i)
 *   MONO x^e
 */
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdiff/analyzer.hpp"
#include "cdiff/poly.hpp"

namespace cdiff {

struct ValidC {
  Index c;
  /// Which hypothesis admitted c (e.g. "A", "B", "A+B" for T1).
  std::string branch;
  friend bool operator==(const ValidC&, const ValidC&) = default;
};

struct ValidCSet {
  std::string family;
  std::vector<ValidC> members;

  bool contains(Index c) const {
    return std::any_of(members.begin(), members.end(), [c](const ValidC& v) { return v.c == c; });
  }
  std::vector<Index> cs() const {
    std::vector<Index> out;
    for (const auto& v : members) out.push_back(v.c);
    return out;
  }
};

struct Construction {
  FuncTable table;
  ValidCSet valid;
};

namespace detail {

inline void require_same(const FuncTable& a, const FuncTable& b, const char* what) {
  if (a != b) throw std::logic_error(std::string("formula and piecewise tables differ for ") + what);
}

inline void require_char2(const Field& f) {
  if (f.p() != 2) throw Error(Errc::WrongCharacteristic, "family needs characteristic 2");
}

/// Checks that f is GF(sub_order^n).
inline void require_tower(const Field& f, std::uint64_t sub_order, std::uint32_t n) {
  const std::uint32_t s = f.subfield_degree(sub_order);
  if (std::uint64_t{s} * n != f.m())
    throw Error(Errc::BadTowerParameters,
                "field of order " + std::to_string(f.q()) + " is not GF(" + std::to_string(sub_order) + "^" +
                    std::to_string(n) + ")");
}

inline void require_unit_in_subfield(const Field& f, Index u, std::uint64_t sub_order) {
  if (u == 0 || !in_subfield(f, u, sub_order)) throw Error(Errc::BadU, "u must be a nonzero element of GF(q)");
}

/// All c != 1 in the subfield of order sub_order.
inline ValidCSet subfield_minus_one(const Field& f, std::uint64_t sub_order, std::string family) {
  ValidCSet v{std::move(family), {}};
  for (auto c : subfield_elements(f, sub_order))
    if (c != 1) v.members.push_back({c, "c in GF(" + std::to_string(sub_order) + ")"});
  return v;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace detail

// ---------------------------------------------------------------------------
// T1: cyclotomic construction
// ---------------------------------------------------------------------------

inline void t1_check(const Field& f, std::uint32_t l, Index u) {
  if (l <= 1 || (f.q() - 1) % l != 0) throw Error(Errc::BadDivisor, "l must be a divisor > 1 of q-1");
  if (u == 1 || u == f.from_int(1 - static_cast<std::int64_t>(l)))
    throw Error(Errc::ForbiddenU, "u must differ from 1 and from (1 - l) mod p");
}

/// x (sum_{i=1}^{l-1} x^{(q-1)i/l} + u) as a sparse polynomial.
inline SparsePoly t1_poly(const Field& f, std::uint32_t l, Index u) {
  t1_check(f, l, u);
  std::vector<Term> terms{{1, u}};
  const std::uint64_t step = (f.q() - 1) / l;
  for (std::uint32_t i = 1; i < l; ++i) terms.push_back({1 + step * i, 1});
  return SparsePoly::from_terms(f, std::move(terms));
}

/// 0 at 0, (u + l - 1) x on D_0, (u - 1) x elsewhere.
inline FuncTable t1_piecewise(const Field& f, std::uint32_t l, Index u) {
  t1_check(f, l, u);
  const Index on_d0 = f.add(u, f.from_int(static_cast<std::int64_t>(l) - 1));
  const Index off_d0 = f.sub(u, 1);
  return tabulate(f, [&](Index x) -> Index {
    if (x == 0) return 0;
    return f.mul(coset_index(f, x, l) == 0 ? on_d0 : off_d0, x);
  });
}

/// Branch A: 1 - l/((1-c)(u+l-1)) and 1 + l/((1-c)(u-1)) in D_0.
/// Branch B: 1 + cl/((1-c)(u+l-1)) and 1 - cl/((1-c)(u-1)) in D_0.
inline ValidCSet t1_valid_c(const Field& f, std::uint32_t l, Index u) {
  t1_check(f, l, u);
  const Index L = f.from_int(l);
  const Index ul1 = f.add(u, f.from_int(static_cast<std::int64_t>(l) - 1));
  const Index u1 = f.sub(u, 1);
  ValidCSet v{"T1", {}};
  for (Index c = 0; c < f.q(); ++c) {
    if (c == 1) continue;
    const Index one_c = f.sub(1, c);
    const Index d1 = f.mul(one_c, ul1), d2 = f.mul(one_c, u1);
    const bool a = in_d0(f, f.sub(1, f.div(L, d1)), l) && in_d0(f, f.add(1, f.div(L, d2)), l);
    const Index cl = f.mul(c, L);
    const bool b = in_d0(f, f.add(1, f.div(cl, d1)), l) && in_d0(f, f.sub(1, f.div(cl, d2)), l);
    if (a || b) v.members.push_back({c, a && b ? "A+B" : (a ? "A" : "B")});
  }
  return v;
}

inline Construction build_T1(const Field& f, std::uint32_t l, Index u) {
  FuncTable t = to_table(f, t1_poly(f, l, u));
  detail::require_same(t, t1_piecewise(f, l, u), "T1");
  return {std::move(t), t1_valid_c(f, l, u)};
}

// ---------------------------------------------------------------------------
// T2: characteristic 3, generalized exponent (q-1)/2 + 3^{ik}
// ---------------------------------------------------------------------------

struct T2Params {
  std::uint32_t d = 1, k = 1, i = 0;
  std::int64_t a1 = 0, a2 = 1, a3 = 1;
};

inline void t2_check(const Field& f, const T2Params& P) {
  if (f.p() != 3 || P.d == 0 || f.m() != 3 * P.d)
    throw Error(Errc::BadParameters, "T2 needs GF(3^m) with m = 3d");
  if (P.k != P.d && P.k != 2 * P.d) throw Error(Errc::BadParameters, "T2 needs k = d or k = 2d");
  if (P.i > 2) throw Error(Errc::BadParameters, "T2 needs 0 <= i <= 2");
  if (((P.a1 + P.a2 + P.a3) % 3 + 3) % 3 == 0) throw Error(Errc::BadParameters, "T2 needs a1 + a2 + a3 != 0 in GF(3)");
}

/// The linear part a1 x + a2 x^{3^k} + a3 x^{3^{2k}}.
inline Index t2_linear(const Field& f, const T2Params& P, Index x) {
  const auto pk = static_cast<std::int64_t>(detail::ipow(3, P.k));
  const Index xk = f.pow(x, pk), x2k = f.pow(xk, pk);
  return f.add(f.add(f.mul(f.from_int(P.a1), x), f.mul(f.from_int(P.a2), xk)), f.mul(f.from_int(P.a3), x2k));
}

inline FuncTable t2_formula(const Field& f, const T2Params& P) {
  t2_check(f, P);
  const auto pk = static_cast<std::int64_t>(detail::ipow(3, P.k));
  const auto e = static_cast<std::int64_t>((f.q() - 1) / 2 + detail::ipow(3, P.i * P.k));
  return tabulate(f, [&](Index x) { return f.add(f.pow(f.sub(f.pow(x, pk), x), e), t2_linear(f, P, x)); });
}

/// With T = x^{3^k} - x: 0 when T = 0, +T^{3^{ik}} when T is a square,
/// -T^{3^{ik}} otherwise; plus the linear part.
inline FuncTable t2_piecewise(const Field& f, const T2Params& P) {
  t2_check(f, P);
  const auto pk = static_cast<std::int64_t>(detail::ipow(3, P.k));
  const auto pik = static_cast<std::int64_t>(detail::ipow(3, P.i * P.k));
  return tabulate(f, [&](Index x) {
    const Index T = f.sub(f.pow(x, pk), x);
    Index head = 0;
    if (T != 0) {
      head = f.pow(T, pik);
      if (coset_index(f, T, 2) != 0) head = f.neg(head);
    }
    return f.add(head, t2_linear(f, P, x));
  });
}

/// The three-case rule for (a1, a2, a3) = (0, 1, 1) and i = 0:
/// 2x if T = 0; 2x + 2x^{3^k} + x^{3^{2k}} if T in D_0; x + x^{3^{2k}} if T in D_1.
inline FuncTable t2_three_case(const Field& f, std::uint32_t d, std::uint32_t k) {
  t2_check(f, {d, k, 0, 0, 1, 1});
  const auto pk = static_cast<std::int64_t>(detail::ipow(3, k));
  const Index two = f.from_int(2);
  return tabulate(f, [&](Index x) {
    const Index xk = f.pow(x, pk), x2k = f.pow(xk, pk);
    const Index T = f.sub(xk, x);
    if (T == 0) return f.mul(two, x);
    if (coset_index(f, T, 2) == 0) return f.add(f.add(f.mul(two, x), f.mul(two, xk)), x2k);
    return f.add(x, x2k);
  });
}

inline Construction build_T2(const Field& f, const T2Params& P) {
  FuncTable t = t2_formula(f, P);
  detail::require_same(t, t2_piecewise(f, P), "T2");
  if (P.i == 0 && ((P.a1 % 3 + 3) % 3) == 0 && ((P.a2 % 3 + 3) % 3) == 1 && ((P.a3 % 3 + 3) % 3) == 1)
    detail::require_same(t, t2_three_case(f, P.d, P.k), "T2 three-case rule");
  return {std::move(t), {"T2", {{f.neg(1), "c = -1"}}}};
}

// ---------------------------------------------------------------------------
// P1: switching on the trace hyperplane
// ---------------------------------------------------------------------------

inline FuncTable p1_formula(const Field& f, const FuncTable& g, Index gamma) {
  detail::require_char2(f);
  if (gamma == 0) throw Error(Errc::ZeroGamma, "gamma must be nonzero");
  return tabulate(f, [&](Index x) {
    const Index tr = abs_trace(f, x);
    return f.add(f.mul(g[x], f.add(tr, 1)), f.mul(g[f.add(x, gamma)], tr));
  });
}

inline FuncTable p1_piecewise(const Field& f, const FuncTable& g, Index gamma) {
  detail::require_char2(f);
  if (gamma == 0) throw Error(Errc::ZeroGamma, "gamma must be nonzero");
  return tabulate(f, [&](Index x) { return abs_trace(f, x) == 0 ? g[x] : g[f.add(x, gamma)]; });
}

/// Every c != 1; the branch records Tr(gamma), which selects the claim.
inline Construction build_P1(const Field& f, const FuncTable& g, Index gamma) {
  FuncTable t = p1_formula(f, g, gamma);
  detail::require_same(t, p1_piecewise(f, g, gamma), "P1");
  const std::string branch = abs_trace(f, gamma) == 0 ? "Tr(gamma) = 0" : "Tr(gamma) = 1";
  ValidCSet v{"P1", {}};
  for (auto c : all_c(f)) v.members.push_back({c, branch});
  return {std::move(t), std::move(v)};
}

// ---------------------------------------------------------------------------
// C1: x + gamma Tr(x^{2^k+1}) over GF(2^{2m})
// ---------------------------------------------------------------------------

inline std::uint64_t c1_d(std::uint32_t m, std::uint32_t k) {
  return std::gcd((std::uint64_t{1} << k) + 1, (std::uint64_t{1} << (2 * m)) - 1);
}

inline Construction build_C1(const Field& f, std::uint32_t m, std::uint32_t k, Index gamma) {
  detail::require_char2(f);
  if (m == 0 || f.m() != 2 * m) throw Error(Errc::BadParameters, "C1 lives in GF(2^{2m})");
  const std::uint64_t d = c1_d(m, k);
  if (f.pow(gamma, static_cast<std::int64_t>(d)) != 1)
    throw Error(Errc::GammaNotDthRoot, "gamma^d must be 1 for d = " + std::to_string(d));
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;

  FuncTable t = tabulate(f, [&](Index x) {
    return f.add(x, f.mul(gamma, abs_trace(f, f.pow(x, static_cast<std::int64_t>(e)))));
  });
  // Expanded: x + sum_i gamma x^{e 2^i}.
  std::vector<Term> terms{{1, 1}};
  for (std::uint32_t i = 0; i < f.m(); ++i) terms.push_back({e << i, gamma});
  detail::require_same(t, to_table(f, SparsePoly::from_terms(f, std::move(terms))), "C1");

  ValidCSet v{"C1", {{0, "c = 0"}}};
  for (Index c = 2; c < f.q(); ++c)
    if (f.pow(c, static_cast<std::int64_t>(d)) == 1) v.members.push_back({c, "c^d = 1"});
  return {std::move(t), std::move(v)};
}

// ---------------------------------------------------------------------------
// T4: L(x) + L(gamma) Tr(x)^{q-1}
// ---------------------------------------------------------------------------

inline Construction build_T4(const Field& f, const LinearizedPoly& L, Index gamma, std::uint64_t q_sub,
                             std::uint32_t n) {
  detail::require_tower(f, q_sub, n);
  for (auto c : L.coeffs)
    if (!in_subfield(f, c, q_sub)) throw Error(Errc::CoeffOutsideSubfield, "coefficients of L must lie in GF(q)");
  const FuncTable lt = to_table(f, L);
  if (!is_permutation(lt)) throw Error(Errc::NotAPermutation, "L must permute GF(q^n)");
  if (gamma == 0 || rel_trace(f, gamma, q_sub, n) != 0)
    throw Error(Errc::BadGamma, "gamma must be nonzero with zero relative trace");

  const Index lg = lt[gamma];
  const auto qm1 = static_cast<std::int64_t>(q_sub - 1);
  FuncTable t = tabulate(f, [&](Index x) { return f.add(lt[x], f.mul(lg, f.pow(rel_trace(f, x, q_sub, n), qm1))); });
  const FuncTable pw =
      tabulate(f, [&](Index x) { return rel_trace(f, x, q_sub, n) == 0 ? lt[x] : lt[f.add(x, gamma)]; });
  detail::require_same(t, pw, "T4");

  ValidCSet v{"T4", {}};
  for (Index c = 0; c < f.q(); ++c) {
    if (c == 1) continue;
    if (rel_trace(f, f.div(lg, f.sub(1, c)), q_sub, n) == 0) v.members.push_back({c, "Tr(L(gamma)/(1-c)) = 0"});
  }
  return {std::move(t), std::move(v)};
}

// ---------------------------------------------------------------------------
// T5: x^{2^k+1} + gamma Tr(x)
// ---------------------------------------------------------------------------

inline Construction build_T5(const Field& f, std::uint32_t k, Index gamma) {
  detail::require_char2(f);
  const std::uint32_t m = f.m();
  if (k == 0) throw Error(Errc::BadParameters, "k must be positive");
  const std::uint32_t d = std::gcd(m, k);
  if ((m / d) % 2 == 0) throw Error(Errc::EvenQuotient, "m / gcd(m, k) must be odd");
  if (gamma == 0) throw Error(Errc::ZeroGamma, "gamma must be nonzero");
  const auto e = static_cast<std::int64_t>((std::uint64_t{1} << k) + 1);
  FuncTable t = tabulate(f, [&](Index x) { return f.add(f.pow(x, e), f.mul(gamma, abs_trace(f, x))); });
  return {std::move(t), detail::subfield_minus_one(f, std::uint64_t{1} << d, "T5")};
}

// ---------------------------------------------------------------------------
// T6: x^{q+1} + a0 x^q + a1 x over GF(q^2)
// ---------------------------------------------------------------------------

inline Construction build_T6(const Field& f, std::uint64_t q_sub, Index a0, Index a1) {
  detail::require_tower(f, q_sub, 2);
  if (a1 == f.pow(a0, static_cast<std::int64_t>(q_sub)))
    throw Error(Errc::DegenerateCoefficients, "a1 must differ from a0^q");
  const auto poly = SparsePoly::from_terms(f, {{q_sub + 1, 1}, {q_sub, a0}, {1, a1}});
  return {to_table(f, poly), detail::subfield_minus_one(f, q_sub, "T6")};
}

// ---------------------------------------------------------------------------
// T7: inverse function with two swapped images
// ---------------------------------------------------------------------------

inline FuncTable t7_piecewise(const Field& f, Index t) {
  detail::require_char2(f);
  if (t == 0) throw Error(Errc::ZeroT, "t must be nonzero");
  const auto qm2 = static_cast<std::int64_t>(f.q()) - 2;
  return tabulate(f, [&](Index x) -> Index {
    if (x == t) return 0;
    if (x == 0) return f.pow(t, qm2);
    return f.pow(x, qm2);
  });
}

/// x^{q-2} + t^{q-2}(1 + x^{q-1}) + t^{q-2}(1 + (x + t)^{q-1}); the two
/// indicator terms move t^{-1} from t to 0.
inline FuncTable t7_formula(const Field& f, Index t) {
  detail::require_char2(f);
  if (t == 0) throw Error(Errc::ZeroT, "t must be nonzero");
  const auto q = static_cast<std::int64_t>(f.q());
  const Index tinv = f.pow(t, q - 2);
  return tabulate(f, [&](Index x) {
    const Index at_zero = f.add(1, f.pow(x, q - 1));
    const Index at_t = f.add(1, f.pow(f.add(x, t), q - 1));
    return f.add(f.pow(x, q - 2), f.add(f.mul(tinv, at_zero), f.mul(tinv, at_t)));
  });
}

inline Construction build_T7(const Field& f, Index t) {
  FuncTable tab = t7_piecewise(f, t);
  detail::require_same(tab, t7_formula(f, t), "T7");
  ValidCSet v{"T7", {}};
  for (Index c = 2; c < f.q(); ++c)
    if (abs_trace(f, c) == 1 && abs_trace(f, f.inv(c)) == 1) v.members.push_back({c, "Tr(c) = Tr(1/c) = 1"});
  return {std::move(tab), std::move(v)};
}

// ---------------------------------------------------------------------------
// T8 - T11: AGW-type families over GF(q^n)
// ---------------------------------------------------------------------------

struct KernelDiagnostics {
  /// ker(phi) and ker(Tr) (T8, T10) or ker(phi) and GF(q) (T11) meet only in 0.
  bool kernel_condition = false;
  /// T11 only: phi maps J = {x^q - x} onto J.
  bool permutes_j = false;
  /// T11 only: phi restricted to GF(q) is 2-to-1.
  bool two_to_one_on_subfield = false;
  /// phi has coefficients in GF(q) and exponents that are powers of q.
  bool phi_fq_linear = false;
};

namespace detail {

inline bool phi_is_fq_linear(const Field& f, const LinearizedPoly& phi, std::uint64_t q_sub) {
  // Term i is x^{base^i}; it is GF(q)-linear when base^i is a power of q.
  const int b = detail::exact_log(phi.base_order, f.p());
  const int s = detail::exact_log(q_sub, f.p());
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
    if (phi.coeffs[i] == 0) continue;
    if ((static_cast<int>(i) * b) % s != 0 || !in_subfield(f, phi.coeffs[i], q_sub)) return false;
  }
  return true;
}

inline void require_phi_one(const Field& f, const LinearizedPoly& phi) {
  if (eval(f, phi, 1) == 0) throw Error(Errc::PhiOneZero, "phi(1) must be nonzero");
}

}  // namespace detail

struct AgwConstruction {
  FuncTable table;
  ValidCSet valid;
  KernelDiagnostics diagnostics;
};

inline AgwConstruction build_T8(const Field& f, const LinearizedPoly& phi, const SparsePoly& g, Index u,
                                std::uint64_t q_sub, std::uint32_t n) {
  detail::require_tower(f, q_sub, n);
  detail::require_unit_in_subfield(f, u, q_sub);
  detail::require_phi_one(f, phi);
  const auto qe = static_cast<std::int64_t>(q_sub);
  FuncTable t = tabulate(f, [&](Index x) {
    const Index gt = eval(f, g, rel_trace(f, x, q_sub, n));
    return f.add(f.mul(u, eval(f, phi, x)), f.sub(f.pow(gt, qe), gt));
  });
  KernelDiagnostics diag;
  diag.kernel_condition = kernel_intersection(f, phi, trace_poly(f, q_sub)).size() == 1;
  diag.phi_fq_linear = detail::phi_is_fq_linear(f, phi, q_sub);
  return {std::move(t), detail::subfield_minus_one(f, q_sub, "T8"), diag};
}

inline AgwConstruction build_T9(const Field& f, const SparsePoly& g, Index u, std::uint64_t q_sub, std::uint32_t n) {
  detail::require_tower(f, q_sub, n);
  if (n % f.p() == 0) throw Error(Errc::BadN, "T9 needs p not dividing n");
  detail::require_unit_in_subfield(f, u, q_sub);
  const auto sub = subfield_elements(f, q_sub);
  std::vector<Index> img;
  for (auto y : sub) img.push_back(eval(f, g, y));
  std::sort(img.begin(), img.end());
  if (img != sub) throw Error(Errc::GNotSubfieldPermutation, "g must permute GF(q)");
  const auto qe = static_cast<std::int64_t>(q_sub);
  FuncTable t = tabulate(f, [&](Index x) {
    return f.add(f.mul(u, f.sub(f.pow(x, qe), x)), eval(f, g, rel_trace(f, x, q_sub, n)));
  });
  KernelDiagnostics diag;
  // phi = x^q - x here; its kernel GF(q) meets ker(Tr) in 0 exactly when p does not divide n.
  diag.kernel_condition = kernel_intersection(f, artin_schreier_poly(f, q_sub), trace_poly(f, q_sub)).size() == 1;
  diag.phi_fq_linear = true;
  return {std::move(t), detail::subfield_minus_one(f, q_sub, "T9"), diag};
}

inline AgwConstruction build_T10(const Field& f, const LinearizedPoly& phi, const SparsePoly& g, Index u,
                                 std::uint64_t q_sub, std::uint32_t n) {
  detail::require_tower(f, q_sub, n);
  if (n % f.p() != 0) throw Error(Errc::BadN, "T10 needs p dividing n");
  detail::require_unit_in_subfield(f, u, q_sub);
  detail::require_phi_one(f, phi);
  for (auto y : subfield_elements(f, q_sub))
    if (!in_subfield(f, eval(f, g, y), q_sub)) throw Error(Errc::GEscapesSubfield, "g must map GF(q) into GF(q)");
  FuncTable t = tabulate(f, [&](Index x) {
    return f.add(f.mul(u, eval(f, phi, x)), eval(f, g, rel_trace(f, x, q_sub, n)));
  });
  KernelDiagnostics diag;
  diag.kernel_condition = kernel_intersection(f, phi, trace_poly(f, q_sub)).size() == 1;
  diag.phi_fq_linear = detail::phi_is_fq_linear(f, phi, q_sub);
  return {std::move(t), detail::subfield_minus_one(f, q_sub, "T10"), diag};
}

/// The image J = {x^q - x : x in GF(q^n)}, increasing.
inline std::vector<Index> artin_schreier_image(const Field& f, std::uint64_t q_sub) {
  const auto qe = static_cast<std::int64_t>(q_sub);
  std::vector<bool> hit(f.q(), false);
  for (Index x = 0; x < f.q(); ++x) hit[f.sub(f.pow(x, qe), x)] = true;
  std::vector<Index> out;
  for (Index y = 0; y < f.q(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

/// The valid set is GF(q) \ {1}; its branch is "PcN" when ker(phi) meets
/// GF(q) trivially and phi permutes J, "APcN" for the characteristic-2
/// variant (phi 2-to-1 on GF(q) and permuting J), and "none" otherwise.
inline AgwConstruction build_T11(const Field& f, const LinearizedPoly& phi, const SparsePoly& g, Index u,
                                 const std::vector<std::uint64_t>& d_list, std::uint64_t q_sub, std::uint32_t n) {
  detail::require_tower(f, q_sub, n);
  if (d_list.empty()) throw Error(Errc::BadDivisorList, "need at least one divisor");
  for (auto d : d_list)
    if (d == 0 || (q_sub - 1) % d != 0)
      throw Error(Errc::BadDivisorList, std::to_string(d) + " does not divide q - 1");
  detail::require_unit_in_subfield(f, u, q_sub);

  const auto qe = static_cast<std::int64_t>(q_sub);
  const std::uint64_t qn1 = f.q() - 1;
  FuncTable t = tabulate(f, [&](Index x) {
    const Index s = f.sub(f.pow(x, qe), x);
    const Index gs = eval(f, g, s);
    Index acc = f.mul(u, eval(f, phi, x));
    for (auto d : d_list) acc = f.add(acc, f.pow(gs, static_cast<std::int64_t>(qn1 / d)));
    return acc;
  });

  KernelDiagnostics diag;
  const auto sub = subfield_elements(f, q_sub);
  const auto ker = kernel(f, phi);
  std::vector<Index> meet;
  std::set_intersection(ker.begin(), ker.end(), sub.begin(), sub.end(), std::back_inserter(meet));
  diag.kernel_condition = meet.size() == 1;
  const auto J = artin_schreier_image(f, q_sub);
  std::vector<Index> img;
  for (auto y : J) img.push_back(eval(f, phi, y));
  std::sort(img.begin(), img.end());
  diag.permutes_j = img == J;
  std::map<Index, std::uint32_t> hist;
  for (auto y : sub) ++hist[eval(f, phi, y)];
  diag.two_to_one_on_subfield =
      std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 2; });
  diag.phi_fq_linear = detail::phi_is_fq_linear(f, phi, q_sub);

  std::string branch = "none";
  if (diag.kernel_condition && diag.permutes_j)
    branch = "PcN";
  else if (f.p() == 2 && diag.two_to_one_on_subfield && diag.permutes_j)
    branch = "APcN";
  ValidCSet v = detail::subfield_minus_one(f, q_sub, d_list.size() > 1 ? "C2" : "T11");
  for (auto& m : v.members) m.branch = branch;
  return {std::move(t), std::move(v), diag};
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

inline FuncTable build_MONO(const Field& f, std::uint64_t e) {
  if (e == 0) throw Error(Errc::BadParameters, "exponent must be >= 1");
  return to_table(f, SparsePoly::monomial(f, 1, e));
}

}  // namespace cdiff
