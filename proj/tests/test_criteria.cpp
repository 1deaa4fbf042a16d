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

#include "cdiff/criteria.hpp"
#include "cdiff/random.hpp"

using namespace cdiff;

namespace {

SparsePoly constant(const Field& f, Index c) { return SparsePoly::from_terms(f, {{0, c}}); }

// g is zero, a constant or a short random polynomial, by turn.
SparsePoly sample_g(const Field& f, Rng& rng, int i) {
  switch (i % 3) {
    case 0:
      return SparsePoly::from_terms(f, {});
    case 1:
      return constant(f, rng.element(f));
    default:
      return random_sparse_poly(f, rng, 4);
  }
}

AgwInstance random_instance(const Field& f, Rng& rng, std::uint64_t q, std::uint32_t n, int i) {
  AgwInstance inst;
  inst.q_sub = q;
  inst.phi = random_linearized(f, rng, q, n, q);
  inst.psi = random_linearized(f, rng, q, n, q);
  Index hv = 0;
  while (hv == 0) hv = rng.subfield_element(f, q);
  inst.h = constant(f, hv);
  inst.g = sample_g(f, rng, i);
  return inst;
}

}  // namespace

TEST(QuadRoots, Examples) {
  const Field f4 = make_field(2, 2);
  const auto r = quad_root_count(f4, 1, 0);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.trace, 0u);

  const Field f8 = make_field(2, 3);
  for (Index b = 0; b < 8; ++b)
    if (abs_trace(f8, b) == 1) {
      EXPECT_EQ(quad_root_count(f8, 1, b).count, 0u);
    }
}

TEST(QuadRoots, ExhaustiveF16) {
  const Field f = make_field(2, 4);
  int pairs = 0;
  for (Index a = 1; a < 16; ++a)
    for (Index b = 0; b < 16; ++b) {
      const auto r = quad_root_count(f, a, b);
      EXPECT_EQ(r.count, r.trace == 0 ? 2u : 0u);
      ++pairs;
    }
  EXPECT_EQ(pairs, 240);
}

TEST(QuadRoots, ExhaustiveUpToM8) {
  for (std::uint32_t m = 2; m <= 8; ++m) {
    const Field f = make_field(2, m);
    for (Index a = 1; a < f.q(); ++a)
      for (Index b = 0; b < f.q(); ++b) {
        const auto r = quad_root_count(f, a, b);
        ASSERT_EQ(r.count == 2, r.trace == 0) << m << " " << a << " " << b;
        ASSERT_TRUE(r.count == 0 || r.count == 2);
      }
  }
}

TEST(QuadRoots, Errors) {
  EXPECT_THROW(quad_root_count(make_field(2, 3), 0, 1), Error);
  EXPECT_THROW(quad_root_count(make_field(3, 2), 1, 1), Error);
}

TEST(Agw, IdentityInstance) {
  const Field f = make_field(2, 6);
  AgwInstance inst{LinearizedPoly::identity(4), LinearizedPoly::identity(4), SparsePoly::from_terms(f, {}),
                   constant(f, 1), 4};
  const auto r = agw_permutation_check(f, inst);
  EXPECT_TRUE(r.condition1);
  EXPECT_TRUE(r.condition2);
  EXPECT_TRUE(r.direct);
  EXPECT_EQ(agw_function(f, inst), to_table(f, SparsePoly::identity(f)));
}

TEST(Agw, TraceWithVanishingG) {
  // psi = Tr: GF(64) -> GF(4), g = x^4 + x vanishes on GF(4).
  const Field f = make_field(2, 6);
  AgwInstance inst{LinearizedPoly::identity(4), trace_poly(f, 4),
                   SparsePoly::from_terms(f, {{4, 1}, {1, 1}}), constant(f, 1), 4};
  const auto r = agw_permutation_check(f, inst);
  EXPECT_EQ(r.condition1 && r.condition2, r.direct);
  EXPECT_TRUE(r.direct);
}

TEST(Agw, HRangeViolation) {
  const Field f = make_field(2, 6);
  AgwInstance inst{LinearizedPoly::identity(4), LinearizedPoly::identity(4), SparsePoly::from_terms(f, {}),
                   constant(f, f.primitive()), 4};
  try {
    agw_permutation_check(f, inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HRangeViolation);
  }
  inst.h = SparsePoly::from_terms(f, {});
  EXPECT_THROW(agw_function(f, inst), Error);
}

TEST(Agw, RandomBiconditional) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{4, 3}, {3, 4}}) {
    const Field f = make_field_of_order(detail::ipow(q, n));
    Rng rng(200 + q);
    int perm = 0;
    for (int i = 0; i < 50; ++i) {
      const auto inst = random_instance(f, rng, q, n, i);
      const auto r = agw_permutation_check(f, inst);
      EXPECT_EQ(r.condition1 && r.condition2, r.direct) << "q=" << q << " i=" << i;
      perm += r.direct;
    }
    // Both sides of the biconditional occur.
    EXPECT_GT(perm, 0);
    EXPECT_LT(perm, 50);
  }
}

TEST(Agw2to1, Example) {
  const Field f = make_field(2, 6);
  AgwInstance inst{{2, {0, 1, 1}}, artin_schreier_poly(f, 4), SparsePoly::from_terms(f, {}), constant(f, 1), 4};
  const auto r = agw_2to1_check(f, inst, 1);
  EXPECT_TRUE(r.hypotheses);
  EXPECT_TRUE(r.direct_2to1);
  // Wrong alpha: hypotheses false, no claim.
  EXPECT_FALSE(agw_2to1_check(f, inst, f.primitive()).hypotheses);
  EXPECT_FALSE(agw_2to1_check(f, inst, 0).hypotheses);
}

TEST(Agw2to1, RandomImplication) {
  const Field f = make_field(2, 6);
  Rng rng(300);
  int held = 0;
  for (int i = 0; i < 50; ++i) {
    AgwInstance inst;
    inst.q_sub = 2;
    // Half the phis are forced to vanish at 1 so the kernel meet can be {0, alpha}.
    inst.phi = random_linearized(f, rng, 2, 6, 2);
    if (i % 2 == 0 && eval(f, inst.phi, 1) != 0) inst.phi.coeffs[0] ^= 1;
    inst.psi = random_linearized(f, rng, 2, 6, 2);
    inst.h = constant(f, 1);
    inst.g = sample_g(f, rng, i);
    const auto meet = kernel_intersection(f, inst.phi, inst.psi);
    const Index alpha = meet.size() == 2 ? meet[1] : 1;
    const auto r = agw_2to1_check(f, inst, alpha);
    if (r.hypotheses) {
      EXPECT_TRUE(r.direct_2to1) << i;
      ++held;
    }
  }
  EXPECT_GT(held, 0);
}

TEST(Agw2to1, RequiresCharacteristicTwo) {
  const Field f = make_field(3, 2);
  AgwInstance inst{LinearizedPoly::identity(3), LinearizedPoly::identity(3), SparsePoly::from_terms(f, {}),
                   constant(f, 1), 3};
  EXPECT_THROW(agw_2to1_check(f, inst, 1), Error);
}
