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
 * @file analyzer.hpp
 * @brief Exact c-differential uniformity of a lookup table.
 *
 * For c != 1 the uniformity is
 *
 *     max over a, b in GF(q) of #{x : F(x + a) - c F(x) = b},
 *
 * with a = 0 included. The sweep builds, for every a, the histogram of the
 * c-derivative x -> F(x + a) - c F(x), so one value of c costs O(q^2).
 *
 * The inner loop never calls Field::add. Characteristic 2 uses XOR, prime
 * fields use modular addition, and every other field splits an index into a
 * few groups of base-p digits and adds group-wise through small tables.
 *
 * Work is split over a (within one c) or over c (within a spectrum). Partial
 * results merge by taking the larger count and, on ties, the smaller (a, b),
 * so the output never depends on the thread count.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

#include "cdiff/poly.hpp"

namespace cdiff {

enum class Classification { PcN, APcN, Other };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::PcN: return "PcN";
    case Classification::APcN: return "APcN";
    case Classification::Other: return "Other";
  }
  return "Other";
}

inline Classification classify(std::uint32_t delta) {
  if (delta == 1) return Classification::PcN;
  if (delta == 2) return Classification::APcN;
  return Classification::Other;
}

struct CDiffReport {
  Index c = 0;
  std::uint32_t delta = 0;
  /// Smallest (a, b) attaining delta.
  Index witness_a = 0;
  Index witness_b = 0;
  Classification classification = Classification::Other;

  friend bool operator==(const CDiffReport&, const CDiffReport&) = default;
};

/// Reports ordered by increasing c index.
struct SpectrumReport {
  std::vector<CDiffReport> results;

  const CDiffReport* find(Index c) const {
    for (const auto& r : results)
      if (r.c == c) return &r;
    return nullptr;
  }
  std::uint32_t max_delta() const {
    std::uint32_t m = 0;
    for (const auto& r : results) m = std::max(m, r.delta);
    return m;
  }
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Thread count from CDIFF_THREADS, else the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("CDIFF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

struct SweepOptions {
  unsigned threads = 1;
  /// Called after each completed c with (report, done, total).
  std::function<void(const CDiffReport&, std::size_t, std::size_t)> on_progress;
};

/// x -> F(x + a) - c F(x).
inline FuncTable c_derivative(const Field& f, const FuncTable& t, Index a, Index c) {
  return tabulate(f, [&](Index x) { return f.sub(t[f.add(x, a)], f.mul(c, t[x])); });
}

namespace detail {

inline constexpr int kMaxChunks = 4;

/// Groups of base-p digits with group-wise addition tables. sum[j] maps
/// (u * radix[j] + v) to place[j] * (u (+) v), where (+) is digit-wise
/// addition mod p.
struct DigitChunks {
  int count = 0;
  std::array<std::uint32_t, kMaxChunks> radix{}, place{};
  std::array<std::vector<std::uint32_t>, kMaxChunks> sum;

  explicit DigitChunks(const Field& f) {
    const std::uint32_t p = f.p(), m = f.m();
    // Largest group whose table has at most 2^16 entries.
    std::uint32_t h = 1;
    while (h < m && detail::ipow(p, 2 * (h + 1)) <= (1u << 16)) ++h;
    count = static_cast<int>((m + h - 1) / h);
    if (count > kMaxChunks) {
      h = (m + kMaxChunks - 1) / kMaxChunks;
      count = static_cast<int>((m + h - 1) / h);
    }
    std::uint32_t pl = 1;
    for (int j = 0; j < count; ++j) {
      const std::uint32_t len = std::min(h, m - static_cast<std::uint32_t>(j) * h);
      const auto B = static_cast<std::uint32_t>(detail::ipow(p, len));
      radix[j] = B;
      place[j] = pl;
      sum[j].resize(std::size_t{B} * B);
      for (std::uint32_t u = 0; u < B; ++u) {
        for (std::uint32_t v = 0; v < B; ++v) {
          std::uint32_t uu = u, vv = v, out = 0, w = 1;
          for (std::uint32_t d = 0; d < len; ++d) {
            out += ((uu % p + vv % p) % p) * w;
            uu /= p;
            vv /= p;
            w *= p;
          }
          sum[j][std::size_t{u} * B + v] = out * pl;
        }
      }
      pl *= B;
    }
  }

  std::uint32_t chunk(Index x, int j) const { return (x / place[j]) % radix[j]; }

  /// Per-chunk arrays; left operands are premultiplied by the radix.
  std::array<std::vector<std::uint32_t>, kMaxChunks> split(std::span<const Index> v, bool left) const {
    std::array<std::vector<std::uint32_t>, kMaxChunks> out;
    for (int j = 0; j < count; ++j) {
      out[j].resize(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[j][i] = chunk(v[i], j) * (left ? radix[j] : 1);
    }
    return out;
  }
};

struct RowBest {
  std::uint32_t count = 0;
  Index a = 0, b = 0;

  /// Larger count wins; ties go to the smaller (a, b).
  void merge(const RowBest& o) {
    if (o.count > count || (o.count == count && (o.a < a || (o.a == a && o.b < b)))) *this = o;
  }
};

/// Feeds every value of row a into sink.
struct XorKernel {
  const Index* F;
  const Index* N;
  std::uint32_t q;
  template <class Sink>
  void row(Index a, Sink&& sink) const {
    for (Index x = 0; x < q; ++x) sink(F[x ^ a] ^ N[x]);
  }
};

struct ModKernel {
  const Index* F;
  const Index* N;
  std::uint32_t p;
  template <class Sink>
  void row(Index a, Sink&& sink) const {
    for (Index x = 0; x < p; ++x) {
      Index y = x + a;
      if (y >= p) y -= p;
      Index v = F[y] + N[x];
      if (v >= p) v -= p;
      sink(v);
    }
  }
};

template <int K>
struct ChunkKernel {
  const DigitChunks* dc;
  std::array<const std::uint32_t*, K> X, FL, NR, S;
  std::uint32_t q;
  template <class Sink>
  void row(Index a, Sink&& sink) const {
    std::array<std::uint32_t, K> ac;
    for (int j = 0; j < K; ++j) ac[j] = dc->chunk(a, j);
    for (Index x = 0; x < q; ++x) {
      std::uint32_t y = 0;
      for (int j = 0; j < K; ++j) y += S[j][X[j][x] + ac[j]];
      std::uint32_t v = 0;
      for (int j = 0; j < K; ++j) v += S[j][FL[j][y] + NR[j][x]];
      sink(v);
    }
  }
};

/// Scans rows [a_begin, a_end) with a private histogram.
template <class Kernel>
RowBest sweep_rows(const Kernel& k, std::uint32_t q, Index a_begin, Index a_end) {
  std::vector<std::uint32_t> hist(q, 0);
  RowBest best;
  bool first = true;
  for (Index a = a_begin; a < a_end; ++a) {
    std::uint32_t row_max = 0;
    std::uint32_t* h = hist.data();
    k.row(a, [&](std::uint32_t v) {
      const std::uint32_t n = ++h[v];
      row_max = n > row_max ? n : row_max;
    });
    if (first || row_max > best.count) {
      Index b = 0;
      while (hist[b] != row_max) ++b;
      best = {row_max, a, b};
      first = false;
    }
    std::memset(hist.data(), 0, sizeof(std::uint32_t) * q);
  }
  return best;
}

/// Precomputed state for one table; reused across values of c.
class SweepEngine {
 public:
  SweepEngine(const Field& f, const FuncTable& t) : f_(f), t_(t) {
    if (t.size() != f.q()) throw Error(Errc::FieldMismatch, "table length differs from field order");
    if (f.p() != 2 && f.m() > 1) {
      chunks_.emplace_back(f);
      std::vector<Index> ids(f.q());
      for (Index x = 0; x < f.q(); ++x) ids[x] = x;
      xs_ = chunks_[0].split(ids, true);
      fl_ = chunks_[0].split(t.values, true);
    }
  }

  /// Best (count, a, b) over a in [a_first, q) for the multiplier c.
  RowBest run(Index c, Index a_first, unsigned threads) const {
    const std::uint32_t q = f_.q();
    std::vector<Index> n(q);
    for (Index x = 0; x < q; ++x) n[x] = f_.neg(f_.mul(c, t_[x]));

    if (f_.p() == 2) return parallel(XorKernel{t_.values.data(), n.data(), q}, a_first, threads);
    if (f_.m() == 1) return parallel(ModKernel{t_.values.data(), n.data(), q}, a_first, threads);
    const DigitChunks& dc = chunks_[0];
    const auto nr = dc.split(n, false);
    switch (dc.count) {
      case 1: return chunked<1>(dc, nr, a_first, threads);
      case 2: return chunked<2>(dc, nr, a_first, threads);
      case 3: return chunked<3>(dc, nr, a_first, threads);
      default: return chunked<4>(dc, nr, a_first, threads);
    }
  }

 private:
  template <int K>
  RowBest chunked(const DigitChunks& dc, const std::array<std::vector<std::uint32_t>, kMaxChunks>& nr, Index a_first,
                  unsigned threads) const {
    ChunkKernel<K> k{&dc, {}, {}, {}, {}, f_.q()};
    for (int j = 0; j < K; ++j) {
      k.X[j] = xs_[j].data();
      k.FL[j] = fl_[j].data();
      k.NR[j] = nr[j].data();
      k.S[j] = dc.sum[j].data();
    }
    return parallel(k, a_first, threads);
  }

  template <class Kernel>
  RowBest parallel(const Kernel& k, Index a_first, unsigned threads) const {
    const std::uint32_t q = f_.q();
    const std::uint32_t rows = q - a_first;
    threads = std::max(1u, std::min(threads, rows));
    if (threads == 1) return sweep_rows(k, q, a_first, q);
    std::vector<RowBest> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) {
      const Index lo = a_first + static_cast<Index>(std::uint64_t{rows} * i / threads);
      const Index hi = a_first + static_cast<Index>(std::uint64_t{rows} * (i + 1) / threads);
      pool.emplace_back([&, i, lo, hi] { parts[i] = sweep_rows(k, q, lo, hi); });
    }
    for (auto& th : pool) th.join();
    RowBest best = parts[0];
    for (unsigned i = 1; i < threads; ++i) best.merge(parts[i]);
    return best;
  }

  const Field& f_;
  const FuncTable& t_;
  std::vector<DigitChunks> chunks_;
  std::array<std::vector<std::uint32_t>, kMaxChunks> xs_, fl_;
};

inline void require_c(const Field& f, Index c) {
  if (c >= f.q()) throw Error(Errc::FieldMismatch, "c outside the field");
  if (c == 1) throw Error(Errc::CEqualsOne, "c = 1 is the classical derivative; use classical_uniformity");
}

inline CDiffReport to_report(Index c, const RowBest& b) { return {c, b.count, b.a, b.b, classify(b.count)}; }

}  // namespace detail

/// Exact c-differential uniformity for one c != 1.
inline CDiffReport delta_for_c(const Field& f, const FuncTable& t, Index c, const SweepOptions& opts = {}) {
  detail::require_c(f, c);
  const detail::SweepEngine engine(f, t);
  return detail::to_report(c, engine.run(c, 0, opts.threads));
}

/// delta_for_c for every c in cs (deduplicated, increasing).
inline SpectrumReport spectrum(const Field& f, const FuncTable& t, std::span<const Index> cs,
                               const SweepOptions& opts = {}) {
  std::vector<Index> order(cs.begin(), cs.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (auto c : order) detail::require_c(f, c);

  SpectrumReport rep;
  rep.results.resize(order.size());
  if (order.empty()) return rep;
  const detail::SweepEngine engine(f, t);
  const unsigned threads = std::max(1u, opts.threads);
  std::mutex progress_mu;
  std::size_t done = 0;
  auto finish = [&](std::size_t i, const detail::RowBest& b) {
    rep.results[i] = detail::to_report(order[i], b);
    if (opts.on_progress) {
      std::lock_guard lock(progress_mu);
      opts.on_progress(rep.results[i], ++done, order.size());
    }
  };

  if (threads == 1 || order.size() == 1) {
    for (std::size_t i = 0; i < order.size(); ++i) finish(i, engine.run(order[i], 0, threads));
    return rep;
  }
  // Workers take c values round-robin; each slot is written by one worker.
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads && w < order.size(); ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < order.size(); i += threads) finish(i, engine.run(order[i], 0, 1));
    });
  }
  for (auto& th : pool) th.join();
  return rep;
}

/// Every c in GF(q) except 1.
inline std::vector<Index> all_c(const Field& f) {
  std::vector<Index> cs;
  for (Index c = 0; c < f.q(); ++c)
    if (c != 1) cs.push_back(c);
  return cs;
}

/// True iff every c-derivative is a permutation (checked directly).
inline bool is_pcn_by_permutation(const Field& f, const FuncTable& t, Index c) {
  detail::require_c(f, c);
  for (Index a = 0; a < f.q(); ++a)
    if (!is_permutation(c_derivative(f, t, a, c))) return false;
  return true;
}

/// Classical differential uniformity: c = 1 and a != 0. Reported with c = 1.
inline CDiffReport classical_uniformity(const Field& f, const FuncTable& t, const SweepOptions& opts = {}) {
  const detail::SweepEngine engine(f, t);
  const auto best = engine.run(1, 1, opts.threads);
  return {1, best.count, best.a, best.b, classify(best.count)};
}

}  // namespace cdiff
