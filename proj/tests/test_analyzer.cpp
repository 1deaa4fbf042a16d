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

#include <gtest/gtest.h>

#include "cdiff/analyzer.hpp"
#include "cdiff/random.hpp"
#include "oracle.hpp"

using namespace cdiff;

namespace {

std::uint32_t count_at(const Field& f, const FuncTable& t, Index a, Index b, Index c) {
  std::uint32_t n = 0;
  for (Index x = 0; x < f.q(); ++x)
    if (f.sub(t[f.add(x, a)], f.mul(c, t[x])) == b) ++n;
  return n;
}

/// Smallest (a, b) attaining the maximum, by exhaustion.
std::pair<Index, Index> oracle_witness(const Field& f, const FuncTable& t, Index c, std::uint32_t delta) {
  for (Index a = 0; a < f.q(); ++a)
    for (Index b = 0; b < f.q(); ++b)
      if (count_at(f, t, a, b, c) == delta) return {a, b};
  return {0, 0};
}

}  // namespace

TEST(CDerivative, Examples) {
  const Field f = make_field(3, 2);
  Rng rng(1);
  const auto t = random_table(f, rng);
  for (Index a = 0; a < f.q(); ++a) {
    const auto d = c_derivative(f, t, a, 0);
    for (Index x = 0; x < f.q(); ++x) EXPECT_EQ(d[x], t[f.add(x, a)]);
  }
  EXPECT_EQ(c_derivative(f, t, 0, 0), t);
  const auto id = to_table(f, SparsePoly::identity(f));
  for (Index c = 0; c < f.q(); ++c) {
    if (c == 1) continue;
    for (Index a = 0; a < f.q(); ++a) {
      const auto d = c_derivative(f, id, a, c);
      EXPECT_TRUE(is_permutation(d));
      for (Index x = 0; x < f.q(); ++x) EXPECT_EQ(d[x], f.add(f.mul(f.sub(1, c), x), a));
    }
  }
}

TEST(DeltaForC, SquareOverF5) {
  const Field f = make_field(5, 1);
  const auto t = to_table(f, SparsePoly::monomial(f, 1, 2));
  for (auto c : all_c(f)) {
    const auto r = delta_for_c(f, t, c);
    EXPECT_EQ(r.delta, 2u);
    EXPECT_EQ(r.classification, Classification::APcN);
  }
}

TEST(DeltaForC, IdentityIsPcN) {
  for (auto q : {7u, 8u, 9u, 16u, 25u}) {
    const Field f = make_field_of_order(q);
    const auto t = to_table(f, SparsePoly::identity(f));
    for (auto c : all_c(f)) EXPECT_EQ(delta_for_c(f, t, c).delta, 1u);
  }
}

TEST(DeltaForC, InverseOverF16MatchesOracle) {
  const Field f = make_field(2, 4);
  const auto t = to_table(f, SparsePoly::monomial(f, 1, f.q() - 2));
  for (Index c = 2; c < f.q(); ++c) {
    const auto d = delta_for_c(f, t, c).delta;
    EXPECT_EQ(d, oracle::delta(f, t, c));
    EXPECT_TRUE(d == 2 || d == 3);
  }
}

TEST(DeltaForC, ConstantTable) {
  const Field f = make_field(5, 1);
  const FuncTable t{std::vector<Index>(5, 3)};
  EXPECT_EQ(delta_for_c(f, t, 0).delta, 5u);
  EXPECT_EQ(oracle::delta(f, t, 0), 5u);
}

TEST(DeltaForC, RejectsCEqualsOne) {
  const Field f = make_field(2, 3);
  const auto t = to_table(f, SparsePoly::identity(f));
  try {
    delta_for_c(f, t, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CEqualsOne);
  }
  EXPECT_THROW(oracle::delta(f, t, 1), Error);
  const std::vector<Index> cs{0, 1};
  EXPECT_THROW(spectrum(f, t, cs), Error);
  EXPECT_THROW(is_pcn_by_permutation(f, t, 1), Error);
}

TEST(DeltaForC, OracleEquivalenceRandomTables) {
  Rng rng(11);
  for (auto q : {5u, 7u, 8u, 9u, 16u}) {
    const Field f = make_field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      const auto t = random_table(f, rng);
      for (auto c : all_c(f)) ASSERT_EQ(delta_for_c(f, t, c).delta, oracle::delta(f, t, c)) << "q=" << q;
    }
  }
}

TEST(DeltaForC, WitnessIsSmallestAndReproducesDelta) {
  Rng rng(3);
  for (auto q : {7u, 8u, 9u, 27u, 32u}) {
    const Field f = make_field_of_order(q);
    for (int i = 0; i < 10; ++i) {
      const auto t = random_table(f, rng);
      const Index c = static_cast<Index>(rng.below(q));
      if (c == 1) continue;
      const auto r = delta_for_c(f, t, c);
      EXPECT_GE(r.delta, 1u);
      EXPECT_LE(r.delta, q);
      EXPECT_EQ(count_at(f, t, r.witness_a, r.witness_b, c), r.delta);
      EXPECT_EQ(std::make_pair(r.witness_a, r.witness_b), oracle_witness(f, t, c, r.delta));
    }
  }
}

TEST(DeltaForC, RowMass) {
  Rng rng(17);
  const Field f = make_field(3, 3);
  const auto t = random_table(f, rng);
  for (Index c : {0u, 2u, 5u, 26u})
    for (Index a = 0; a < f.q(); ++a) {
      std::uint32_t total = 0;
      for (Index b = 0; b < f.q(); ++b) total += count_at(f, t, a, b, c);
      EXPECT_EQ(total, f.q());
    }
}

TEST(DeltaForC, CZeroIsMaxPreimageCount) {
  Rng rng(23);
  for (auto q : {8u, 9u, 25u, 64u, 81u}) {
    const Field f = make_field_of_order(q);
    for (int i = 0; i < 10; ++i) {
      const auto t = random_table(f, rng);
      EXPECT_EQ(delta_for_c(f, t, 0).delta, max_preimage_count(t));
    }
  }
}

TEST(DeltaForC, ThreadCountDoesNotChangeResult) {
  Rng rng(5);
  for (auto q : {64u, 81u, 125u, 243u, 1024u}) {
    const Field f = make_field_of_order(q);
    const auto t = random_table(f, rng);
    for (int i = 0; i < 3; ++i) {
      Index c = static_cast<Index>(rng.below(q));
      if (c == 1) c = 0;
      const auto one = delta_for_c(f, t, c, {1, {}});
      for (unsigned th : {2u, 3u, 7u}) EXPECT_EQ(delta_for_c(f, t, c, {th, {}}), one);
    }
    const auto cs = all_c(f);
    const std::vector<Index> some(cs.begin(), cs.begin() + std::min<std::size_t>(cs.size(), 20));
    EXPECT_EQ(spectrum(f, t, some, {4, {}}), spectrum(f, t, some, {1, {}}));
  }
}

TEST(DeltaForC, LargeFieldKernelsAgreeWithDirectCount) {
  // Exercises the chunked-digit path (p odd, m > 1) and the XOR path on
  // fields too big for the triple-loop oracle: checks the witness count and
  // that no (a, b) in a sampled set beats delta.
  Rng rng(8);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 7}, {5, 4}, {7, 3}, {2, 11}, {101, 2}, {257, 1}}) {
    const Field f = make_field(p, m);
    const auto t = random_table(f, rng);
    const Index c = f.exp(static_cast<std::int64_t>(rng.below(f.q() - 1)));
    if (c == 1) continue;
    const auto r = delta_for_c(f, t, c);
    EXPECT_EQ(count_at(f, t, r.witness_a, r.witness_b, c), r.delta);
    for (int i = 0; i < 20; ++i) {
      const Index a = rng.element(f);
      std::vector<std::uint32_t> hist(f.q(), 0);
      for (Index x = 0; x < f.q(); ++x) ++hist[f.sub(t[f.add(x, a)], f.mul(c, t[x]))];
      EXPECT_LE(*std::max_element(hist.begin(), hist.end()), r.delta);
    }
  }
}

TEST(Spectrum, Examples) {
  const Field f = make_field(2, 4);
  const auto perm = to_table(f, SparsePoly::monomial(f, 1, 7));
  ASSERT_TRUE(is_permutation(perm));
  const std::vector<Index> zero{0};
  EXPECT_EQ(spectrum(f, perm, zero).results.at(0).delta, 1u);
  EXPECT_TRUE(spectrum(f, perm, std::vector<Index>{}).results.empty());

  const Field f7 = make_field(7, 1);
  const auto cube = to_table(f7, SparsePoly::monomial(f7, 1, 3));
  const auto cs = all_c(f7);
  const auto s = spectrum(f7, cube, cs);
  ASSERT_EQ(s.results.size(), 6u);
  for (const auto& r : s.results) {
    EXPECT_NE(r.c, 1u);
    EXPECT_EQ(r.delta, oracle::delta(f7, cube, r.c));
  }
  // Ordered by c and deduplicated.
  const std::vector<Index> messy{5, 0, 5, 3};
  const auto s2 = spectrum(f7, cube, messy);
  ASSERT_EQ(s2.results.size(), 3u);
  EXPECT_EQ(s2.results[0].c, 0u);
  EXPECT_EQ(s2.results[2].c, 5u);
}

TEST(PcNByPermutation, Examples) {
  const Field f5 = make_field(5, 1);
  EXPECT_TRUE(is_pcn_by_permutation(f5, to_table(f5, SparsePoly::identity(f5)), 3));
  EXPECT_FALSE(is_pcn_by_permutation(f5, to_table(f5, SparsePoly::monomial(f5, 1, 2)), 0));
  const FuncTable not_bij{{0, 0, 1, 2, 3}};
  EXPECT_FALSE(is_pcn_by_permutation(f5, not_bij, 0));
}

TEST(PcNByPermutation, AgreesWithDelta) {
  Rng rng(31);
  for (auto q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field f = make_field_of_order(q);
    for (int i = 0; i < 20; ++i) {
      FuncTable t;
      // Mix permutations (often PcN for some c) with arbitrary tables.
      if (i % 2) {
        t = random_table(f, rng);
      } else {
        t.values.resize(q);
        std::iota(t.values.begin(), t.values.end(), 0);
        for (Index k = q - 1; k > 0; --k) std::swap(t.values[k], t.values[rng.below(k + 1)]);
      }
      for (auto c : all_c(f)) ASSERT_EQ(is_pcn_by_permutation(f, t, c), delta_for_c(f, t, c).delta == 1);
    }
  }
}

TEST(AffineInvariance, RightCompositionPreservesDelta) {
  Rng rng(41);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}}) {
    const Field f = make_field(p, m);
    for (int i = 0; i < 50; ++i) {
      const auto t = random_table(f, rng);
      const auto A = random_affine_permutation(f, rng);
      Index c = rng.element(f);
      if (c == 1) c = 0;
      const auto composed = compose_affine(f, t, A.linear, A.shift);
      EXPECT_EQ(delta_for_c(f, composed, c).delta, delta_for_c(f, t, c).delta);
    }
  }
}

TEST(Classical, InverseOverF16IsFour) {
  // x^{-1} on GF(2^4) has classical differential uniformity 4 (n even).
  const Field f = make_field(2, 4);
  const auto t = to_table(f, SparsePoly::monomial(f, 1, 14));
  std::uint32_t best = 0;
  for (Index a = 1; a < f.q(); ++a)
    for (Index b = 0; b < f.q(); ++b) best = std::max(best, count_at(f, t, a, b, 1));
  EXPECT_EQ(classical_uniformity(f, t).delta, best);
  EXPECT_EQ(best, 4u);
}

TEST(Classify, Buckets) {
  EXPECT_EQ(classify(1), Classification::PcN);
  EXPECT_EQ(classify(2), Classification::APcN);
  EXPECT_EQ(classify(3), Classification::Other);
  EXPECT_EQ(to_string(Classification::APcN), "APcN");
}

TEST(Threads, DefaultFromEnvironment) {
  setenv("CDIFF_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3u);
  setenv("CDIFF_THREADS", "0", 1);
  EXPECT_GE(default_thread_count(), 1u);
  unsetenv("CDIFF_THREADS");
  EXPECT_GE(default_thread_count(), 1u);
}
