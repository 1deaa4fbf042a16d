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
 * @file field.hpp
 * @brief Canonical GF(p^m) with dense element indices and discrete-log tables.
 *
 * An element is a dense index in [0, q): the base-p digits of the index are
 * the coefficients of its residue polynomial, constant term first. Index 0 is
 * the zero element and index 1 is the unit.
 *
 * The field is canonical. The modulus is the monic irreducible of degree m
 * whose non-leading coefficients, read as a base-p number (constant term least
 * significant), are smallest. The primitive element w is the generator of the
 * multiplicative group with the smallest index. For m = 1 the modulus is x and
 * elements are the residues mod p.
 *
 * Multiplication, inversion and powers go through log/antilog tables. Addition
 * is XOR in characteristic 2, plain modular addition in prime fields, and a
 * Zech-logarithm lookup otherwise.
 *
 * Subfields are never separate objects: the subfield of order Q inside GF(q)
 * is {x : x^Q = x}.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cdiff/error.hpp"

namespace cdiff {

using Index = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors of n, increasing.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns s with base^s == n, or -1 when n is not a power of base.
inline int exact_log(std::uint64_t n, std::uint64_t base) {
  if (base < 2 || n == 0) return -1;
  int s = 0;
  while (n % base == 0) {
    n /= base;
    ++s;
  }
  return n == 1 ? s : -1;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Dense polynomials over F_p, constant term first.
using PolyP = std::vector<std::uint32_t>;

inline void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of a modulo a monic divisor.
inline PolyP poly_rem(PolyP a, const PolyP& monic, std::uint32_t p) {
  trim(a);
  const std::size_t dg = monic.size() - 1;
  while (a.size() > dg) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = std::uint64_t{lead} * monic[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline PolyP digits_of(std::uint64_t idx, std::uint32_t p, std::size_t len) {
  PolyP d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return d;
}

inline std::uint64_t index_of(const PolyP& d, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const PolyP& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  if (f[0] == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t low = 0; low < count; ++low) {
      PolyP g = digits_of(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Schoolbook arithmetic on element indices; only used while building tables.
class SlowArith {
 public:
  SlowArith(std::uint32_t p, std::uint32_t m, PolyP modulus)
      : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (p_ == 2 && m_ > 1) {
      for (std::size_t i = 0; i < m_; ++i)
        if (modulus_[i]) reduction_mask_ |= std::uint64_t{1} << i;
    }
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return a * b % p_;
    if (p_ == 2) {
      std::uint64_t r = 0;
      for (std::uint32_t i = 0; i < m_; ++i)
        if ((b >> i) & 1) r ^= a << i;
      for (std::uint32_t i = 2 * m_; i-- > m_;)
        if ((r >> i) & 1) r ^= (std::uint64_t{1} << i) ^ (reduction_mask_ << (i - m_));
      return r;
    }
    const PolyP da = digits_of(a, p_, m_), db = digits_of(b, p_, m_);
    PolyP prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (!da[i]) continue;
      for (std::uint32_t j = 0; j < m_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
    PolyP r = poly_rem(std::move(prod), modulus_, p_);
    r.resize(m_, 0);
    return index_of(r, p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint32_t p_, m_;
  PolyP modulus_;
  std::uint64_t reduction_mask_ = 0;
};

}  // namespace detail

class Field {
 public:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  /// make_field: builds the canonical GF(p^m).
  Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!detail::is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::BadParameters, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxFieldOrder)
        throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    find_modulus();
    build_tables();
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, constant term first (length m + 1).
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  Index primitive() const noexcept { return primitive_; }
  std::uint32_t order() const noexcept { return q_ - 1; }

  bool contains(Index x) const noexcept { return x < q_; }

  Index add(Index x, Index y) const noexcept {
    if (p_ == 2) return x ^ y;
    if (m_ == 1) {
      const Index s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    if (x == 0) return y;
    if (y == 0) return x;
    const std::uint32_t lx = log_[x];
    std::uint32_t d = log_[y] + (q_ - 1) - lx;
    if (d >= q_ - 1) d -= q_ - 1;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[lx + z];
  }

  Index neg(Index x) const noexcept { return neg_[x]; }
  Index sub(Index x, Index y) const noexcept { return add(x, neg_[y]); }

  Index mul(Index x, Index y) const noexcept {
    if (x == 0 || y == 0) return 0;
    return exp_[log_[x] + log_[y]];
  }

  Index inv(Index x) const {
    if (x == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
  }

  Index div(Index x, Index y) const { return mul(x, inv(y)); }

  /// x^e for any integer e. Nonzero bases reduce e mod q-1; 0^0 = 1,
  /// 0^e = 0 for e > 0, and a negative power of 0 is a division by zero.
  Index pow(Index x, std::int64_t e) const {
    if (x == 0) {
      if (e == 0) return 1;
      if (e > 0) return 0;
      throw Error(Errc::DivisionByZero, "negative power of zero");
    }
    const std::int64_t n = q_ - 1;
    const std::uint64_t r = static_cast<std::uint64_t>(((e % n) + n) % n);
    return exp_[static_cast<std::uint32_t>(std::uint64_t{log_[x]} * r % static_cast<std::uint64_t>(n))];
  }

  /// w^k for the canonical primitive element.
  Index exp(std::int64_t k) const {
    const std::int64_t n = q_ - 1;
    return exp_[static_cast<std::uint32_t>(((k % n) + n) % n)];
  }

  /// Discrete log base w; x must be nonzero.
  std::uint32_t log(Index x) const {
    if (x == 0) throw Error(Errc::ZeroElement, "log of zero");
    return log_[x];
  }

  /// The integer k embedded as k * 1.
  Index from_int(std::int64_t k) const noexcept {
    const std::int64_t r = ((k % p_) + p_) % p_;
    return static_cast<Index>(r);
  }

  /// Base-p digits of an element (constant term first, length m).
  std::vector<std::uint32_t> digits(Index x) const { return detail::digits_of(x, p_, m_); }

  Index from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() > m_) throw Error(Errc::ParseError, "too many digits for GF(" + std::to_string(q_) + ")");
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p_) throw Error(Errc::ParseError, "digit out of range");
      idx = idx * p_ + d[i];
    }
    return static_cast<Index>(idx);
  }

  /// x^p.
  Index frobenius(Index x) const noexcept {
    if (x == 0) return 0;
    return exp_[static_cast<std::uint32_t>(std::uint64_t{log_[x]} * p_ % (q_ - 1))];
  }

  /// Checks that Q = p^s with s | m; returns s.
  std::uint32_t subfield_degree(std::uint64_t sub_order) const {
    const int s = detail::exact_log(sub_order, p_);
    if (s < 1 || m_ % static_cast<std::uint32_t>(s) != 0)
      throw Error(Errc::BadTowerParameters,
                  std::to_string(sub_order) + " is not the order of a subfield of GF(" + std::to_string(q_) + ")");
    return static_cast<std::uint32_t>(s);
  }

  bool operator==(const Field&) const = default;

 private:
  void find_modulus() {
    if (m_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    const std::uint64_t count = q_;
    for (std::uint64_t low = 0; low < count; ++low) {
      detail::PolyP f = detail::digits_of(low, p_, m_);
      f.push_back(1);
      if (detail::is_irreducible(f, p_)) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw Error(Errc::BadParameters, "no irreducible polynomial found");  // unreachable
  }

  void build_tables() {
    const detail::SlowArith slow(p_, m_, modulus_);
    const std::uint32_t n = q_ - 1;
    const auto factors = detail::prime_factors(n);
    primitive_ = 1;
    if (n > 1) {
      for (std::uint64_t g = 2; g < q_; ++g) {
        bool generator = true;
        for (auto r : factors) {
          if (slow.pow(g, n / r) == 1) {
            generator = false;
            break;
          }
        }
        if (generator) {
          primitive_ = static_cast<Index>(g);
          break;
        }
      }
    }

    exp_.assign(2 * std::size_t{n}, 0);
    log_.assign(q_, kNoLog);
    std::uint64_t cur = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
      exp_[k] = static_cast<Index>(cur);
      log_[cur] = k;
      cur = slow.mul(cur, primitive_);
    }
    for (std::uint32_t k = 0; k < n; ++k) exp_[n + k] = exp_[k];

    neg_.assign(q_, 0);
    for (std::uint32_t x = 0; x < q_; ++x) {
      auto d = detail::digits_of(x, p_, m_);
      for (auto& v : d) v = v ? p_ - v : 0;
      neg_[x] = static_cast<Index>(detail::index_of(d, p_));
    }

    if (p_ != 2 && m_ > 1) {
      // zech_[k] = log(1 + w^k); the constant term is the lowest base-p digit.
      zech_.assign(n, kNoLog);
      for (std::uint32_t k = 0; k < n; ++k) {
        const Index e = exp_[k];
        const std::uint32_t d0 = e % p_;
        const Index one_plus = e - d0 + (d0 + 1) % p_;
        zech_[k] = one_plus == 0 ? kNoLog : log_[one_plus];
      }
    }
  }

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Index primitive_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<Index> exp_;
  std::vector<std::uint32_t> zech_;
  std::vector<Index> neg_;
};

inline Field make_field(std::uint32_t p, std::uint32_t m) { return Field(p, m); }

/// Builds GF(q) from its order; q must be a prime power.
inline Field make_field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(Errc::BadParameters, "field order must be >= 2");
  const auto f = detail::prime_factors(q);
  if (f.size() != 1) throw Error(Errc::NonPrime, std::to_string(q) + " is not a prime power");
  const int m = detail::exact_log(q, f[0]);
  if (q > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, std::to_string(q) + " exceeds 2^20");
  return Field(static_cast<std::uint32_t>(f[0]), static_cast<std::uint32_t>(m));
}

// ---------------------------------------------------------------------------
// Element wrapper
// ---------------------------------------------------------------------------

/// An index bound to its field. Mixing elements of different fields throws
/// FieldMismatch. Hot loops use the raw Index API on Field instead.
class Element {
 public:
  Element(const Field& f, Index v) : f_(&f), v_(v) {
    if (v >= f.q()) throw Error(Errc::ParseError, "element index out of range");
  }

  const Field& field() const noexcept { return *f_; }
  Index index() const noexcept { return v_; }

  friend Element operator+(const Element& a, const Element& b) { return {a.check(b), a.f_->add(a.v_, b.v_)}; }
  friend Element operator-(const Element& a, const Element& b) { return {a.check(b), a.f_->sub(a.v_, b.v_)}; }
  friend Element operator*(const Element& a, const Element& b) { return {a.check(b), a.f_->mul(a.v_, b.v_)}; }
  friend Element operator/(const Element& a, const Element& b) { return {a.check(b), a.f_->div(a.v_, b.v_)}; }
  Element operator-() const { return {*f_, f_->neg(v_)}; }
  Element inv() const { return {*f_, f_->inv(v_)}; }
  Element pow(std::int64_t e) const { return {*f_, f_->pow(v_, e)}; }

  friend bool operator==(const Element& a, const Element& b) {
    a.check(b);
    return a.v_ == b.v_;
  }

 private:
  const Field& check(const Element& o) const {
    if (f_ != o.f_ && (f_->p() != o.f_->p() || f_->m() != o.f_->m()))
      throw Error(Errc::FieldMismatch, "operands live in different fields");
    return *f_;
  }

  const Field* f_;
  Index v_;
};

// ---------------------------------------------------------------------------
// Traces, subfields, cyclotomic cosets
// ---------------------------------------------------------------------------

/// Absolute trace sum_{i<m} x^{p^i}; lands in the prime subfield.
inline Index abs_trace(const Field& f, Index x) {
  Index acc = 0, y = x;
  for (std::uint32_t i = 0; i < f.m(); ++i) {
    acc = f.add(acc, y);
    y = f.frobenius(y);
  }
  return acc;
}

/// Relative trace from GF(sub_order^n) down to GF(sub_order).
inline Index rel_trace(const Field& f, Index x, std::uint64_t sub_order, std::uint32_t n) {
  const std::uint32_t s = f.subfield_degree(sub_order);
  if (std::uint64_t{s} * n != f.m())
    throw Error(Errc::BadTowerParameters, "sub_order^n must equal the field order");
  Index acc = 0, y = x;
  for (std::uint32_t i = 0; i < n; ++i) {
    acc = f.add(acc, y);
    y = f.pow(y, static_cast<std::int64_t>(sub_order));
  }
  return acc;
}

/// Membership in the subfield of order sub_order: x^Q == x.
inline bool in_subfield(const Field& f, Index x, std::uint64_t sub_order) {
  f.subfield_degree(sub_order);
  return f.pow(x, static_cast<std::int64_t>(sub_order)) == x;
}

/// All elements of the subfield of order sub_order, increasing index.
inline std::vector<Index> subfield_elements(const Field& f, std::uint64_t sub_order) {
  f.subfield_degree(sub_order);
  std::vector<Index> out;
  out.reserve(sub_order);
  for (Index x = 0; x < f.q(); ++x)
    if (f.pow(x, static_cast<std::int64_t>(sub_order)) == x) out.push_back(x);
  return out;
}

/// i with x in D_i = w^i <w^l>, i.e. log_w(x) mod l.
inline std::uint32_t coset_index(const Field& f, Index x, std::uint32_t l) {
  if (l <= 1 || (f.q() - 1) % l != 0)
    throw Error(Errc::BadDivisor, std::to_string(l) + " is not a divisor > 1 of q-1");
  if (x == 0) throw Error(Errc::ZeroElement, "0 lies in no cyclotomic coset");
  return f.log(x) % l;
}

/// Nonzero and an l-th power residue (D_0 membership).
inline bool in_d0(const Field& f, Index x, std::uint32_t l) { return x != 0 && coset_index(f, x, l) == 0; }

struct CyclotomicPartition {
  std::uint32_t l = 0;
  /// coset[x] = i for x in D_i; coset[0] is unused.
  std::vector<std::uint32_t> coset;

  std::vector<Index> members(std::uint32_t i) const {
    std::vector<Index> out;
    for (Index x = 1; x < coset.size(); ++x)
      if (coset[x] == i) out.push_back(x);
    return out;
  }
};

inline CyclotomicPartition cyclotomic_partition(const Field& f, std::uint32_t l) {
  if (l <= 1 || (f.q() - 1) % l != 0)
    throw Error(Errc::BadDivisor, std::to_string(l) + " is not a divisor > 1 of q-1");
  CyclotomicPartition part{l, std::vector<std::uint32_t>(f.q(), 0)};
  for (Index x = 1; x < f.q(); ++x) part.coset[x] = f.log(x) % l;
  return part;
}

/// Every generator of GF(q)*, increasing index.
inline std::vector<Index> generators(const Field& f) {
  std::vector<Index> out;
  const std::uint32_t n = f.q() - 1;
  for (std::uint32_t k = 0; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(f.exp(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cdiff
