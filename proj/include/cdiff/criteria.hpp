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

// Executable forms of the supporting lemmas: root counting for char-2
// quadratics and the AGW permutation / 2-to-1 criteria. Each check computes
// the lemma's hypotheses and the conclusion independently so callers can
// test the implication.
#pragma once

#include <algorithm>
#include <vector>

#include "cdiff/poly.hpp"

namespace cdiff {

struct QuadRoots {
  std::uint32_t count = 0;
  /// Tr(b / a^2).
  Index trace = 0;
};

/// Roots of x^2 + a x + b counted by exhaustion, plus the trace predicate.
inline QuadRoots quad_root_count(const Field& f, Index a, Index b) {
  if (f.p() != 2) throw Error(Errc::WrongCharacteristic, "quadratic root count needs characteristic 2");
  if (a == 0) throw Error(Errc::ZeroA, "a must be nonzero");
  QuadRoots r;
  for (Index x = 0; x < f.q(); ++x)
    if (f.add(f.add(f.mul(x, x), f.mul(a, x)), b) == 0) ++r.count;
  r.trace = abs_trace(f, f.div(b, f.mul(a, a)));
  return r;
}

/// f(x) = h(psi(x)) phi(x) + g(psi(x)) on GF(q^n).
struct AgwInstance {
  LinearizedPoly phi, psi;
  SparsePoly g, h;
  std::uint64_t q_sub = 0;
};

struct AgwResult {
  bool condition1 = false;  ///< ker(phi) and ker(psi) meet only in 0
  bool condition2 = false;  ///< y -> h(y) phi(y) + psi(g(y)) permutes psi(GF(q^n))
  bool direct = false;      ///< f permutes GF(q^n)
};

struct Agw2to1Result {
  bool hypotheses = false;
  bool direct_2to1 = false;
};

namespace detail {

/// psi(GF(q^n)) as an increasing list; throws when h leaves GF(q)*.
inline std::vector<Index> agw_image(const Field& f, const AgwInstance& inst) {
  f.subfield_degree(inst.q_sub);
  std::vector<bool> hit(f.q(), false);
  for (Index x = 0; x < f.q(); ++x) hit[eval(f, inst.psi, x)] = true;
  std::vector<Index> img;
  for (Index y = 0; y < f.q(); ++y)
    if (hit[y]) img.push_back(y);
  for (auto y : img) {
    const Index hv = eval(f, inst.h, y);
    if (hv == 0 || !in_subfield(f, hv, inst.q_sub))
      throw Error(Errc::HRangeViolation, "h(psi(x)) must lie in GF(q)*");
  }
  return img;
}

inline bool bar_f_permutes(const Field& f, const AgwInstance& inst, const std::vector<Index>& image) {
  std::vector<Index> out;
  out.reserve(image.size());
  for (auto y : image)
    out.push_back(f.add(f.mul(eval(f, inst.h, y), eval(f, inst.phi, y)), eval(f, inst.psi, eval(f, inst.g, y))));
  std::sort(out.begin(), out.end());
  return out == image;
}

inline FuncTable agw_table(const Field& f, const AgwInstance& inst) {
  return tabulate(f, [&](Index x) {
    const Index y = eval(f, inst.psi, x);
    return f.add(f.mul(eval(f, inst.h, y), eval(f, inst.phi, x)), eval(f, inst.g, y));
  });
}

}  // namespace detail

inline FuncTable agw_function(const Field& f, const AgwInstance& inst) {
  detail::agw_image(f, inst);
  return detail::agw_table(f, inst);
}

inline AgwResult agw_permutation_check(const Field& f, const AgwInstance& inst) {
  const auto image = detail::agw_image(f, inst);
  AgwResult r;
  r.condition1 = kernel_intersection(f, inst.phi, inst.psi).size() == 1;
  r.condition2 = detail::bar_f_permutes(f, inst, image);
  r.direct = is_permutation(detail::agw_table(f, inst));
  return r;
}

inline Agw2to1Result agw_2to1_check(const Field& f, const AgwInstance& inst, Index alpha) {
  if (f.p() != 2) throw Error(Errc::WrongCharacteristic, "2-to-1 criterion needs characteristic 2");
  const auto image = detail::agw_image(f, inst);
  const auto meet = kernel_intersection(f, inst.phi, inst.psi);
  Agw2to1Result r;
  r.hypotheses = alpha != 0 && meet == std::vector<Index>{0, alpha} && detail::bar_f_permutes(f, inst, image);
  r.direct_2to1 = is_2to1(detail::agw_table(f, inst));
  return r;
}

}  // namespace cdiff
