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

// Seeded sampling of tables, polynomials and affine permutations for the
// randomized suites. Draws use mt19937_64 with a plain modulo reduction so
// sequences are identical across standard libraries.
#pragma once

#include <random>

#include "cdiff/poly.hpp"

namespace cdiff {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  Index element(const Field& f) { return static_cast<Index>(below(f.q())); }
  Index nonzero(const Field& f) { return static_cast<Index>(1 + below(f.q() - 1)); }
  bool coin() { return (gen_() & 1) != 0; }

  /// Element of the subfield of order sub_order.
  Index subfield_element(const Field& f, std::uint64_t sub_order) {
    f.subfield_degree(sub_order);
    const std::uint64_t step = (f.q() - 1) / (sub_order - 1);
    const std::uint64_t k = below(sub_order);
    return k == 0 ? 0 : f.exp(static_cast<std::int64_t>(step * (k - 1)));
  }

 private:
  std::mt19937_64 gen_;
};

inline FuncTable random_table(const Field& f, Rng& rng) {
  return tabulate(f, [&](Index) { return rng.element(f); });
}

/// Up to max_terms terms with exponents in [0, q-1].
inline SparsePoly random_sparse_poly(const Field& f, Rng& rng, std::size_t max_terms) {
  std::vector<Term> terms;
  const std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) terms.push_back({rng.below(f.q()), rng.element(f)});
  return SparsePoly::from_terms(f, std::move(terms));
}

/// sum_{i<len} c_i x^{base^i} with c_i drawn from the subfield coeff_order.
inline LinearizedPoly random_linearized(const Field& f, Rng& rng, std::uint64_t base, std::size_t len,
                                        std::uint64_t coeff_order) {
  LinearizedPoly L{base, {}};
  for (std::size_t i = 0; i < len; ++i) L.coeffs.push_back(rng.subfield_element(f, coeff_order));
  return L;
}

/// A p-linearized permutation L (resampled until bijective) and a shift.
struct AffineMap {
  LinearizedPoly linear;
  Index shift = 0;
};

inline AffineMap random_affine_permutation(const Field& f, Rng& rng) {
  for (;;) {
    LinearizedPoly L{f.p(), {}};
    for (std::uint32_t i = 0; i < f.m(); ++i) L.coeffs.push_back(rng.element(f));
    if (is_permutation(to_table(f, L))) return {std::move(L), rng.element(f)};
  }
}

}  // namespace cdiff
