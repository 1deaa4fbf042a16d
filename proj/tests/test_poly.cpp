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

#include <sstream>

#include "cdiff/literal.hpp"
#include "cdiff/random.hpp"
#include "oracle.hpp"

using namespace cdiff;

TEST(Eval, Examples) {
  const Field f5 = make_field(5, 1);
  for (Index x = 0; x < 5; ++x) EXPECT_EQ(eval(f5, SparsePoly::identity(f5), x), x);
  EXPECT_EQ(eval(f5, SparsePoly::monomial(f5, 1, 2), 3), 4u);
  const Field f8 = make_field(2, 3);
  EXPECT_EQ(eval(f8, LinearizedPoly{2, {1, 1}}, 1), 0u);
}

TEST(ToTable, Examples) {
  const Field f = make_field(3, 2);
  EXPECT_EQ(to_table(f, SparsePoly{}).values, std::vector<Index>(9, 0));
  const auto t = to_table(f, SparsePoly::monomial(f, 1, f.q() - 1));
  EXPECT_EQ(t[0], 0u);
  for (Index x = 1; x < f.q(); ++x) EXPECT_EQ(t[x], 1u);

  const Field f4 = make_field(2, 2);
  const auto inv = to_table(f4, SparsePoly::monomial(f4, 1, 2));
  for (Index x = 1; x < 4; ++x) EXPECT_EQ(oracle::mul(f4, x, inv[x]), 1u);
  EXPECT_EQ(inv[0], 0u);
  const Index w = f4.primitive();
  EXPECT_EQ(inv.values, (std::vector<Index>{0, 1, f4.mul(w, w), w}));
}

TEST(ToTable, AgreesWithHornerOracle) {
  Rng rng(2024);
  for (auto q : {5u, 8u, 9u, 27u}) {
    const Field f = make_field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      auto g = random_sparse_poly(f, rng, 6);
      // Also exercise exponents beyond q - 1.
      if (i % 3 == 0) g = poly_add(f, g, SparsePoly::monomial(f, rng.nonzero(f), 5 * q + rng.below(3 * q)));
      const auto t = to_table(f, g);
      for (Index x = 0; x < f.q(); ++x) {
        ASSERT_EQ(t[x], oracle::horner(f, g, x)) << "q=" << q << " poly " << format_poly(f, g);
        ASSERT_EQ(t[x], eval(f, g, x));
      }
      EXPECT_EQ(to_table(f, g.reduced(f)), t);
    }
  }
}

TEST(SparsePoly, Normalisation) {
  const Field f = make_field(3, 1);
  const auto g = SparsePoly::from_terms(f, {{2, 1}, {0, 2}, {2, 2}, {1, 0}});
  ASSERT_EQ(g.terms().size(), 1u);
  EXPECT_EQ(g.terms()[0], (Term{0, 2}));
  EXPECT_TRUE(SparsePoly::from_terms(f, {{4, 1}, {4, 2}}).is_zero());
  EXPECT_THROW(SparsePoly::from_terms(f, {{1, 7}}), Error);
  // x^9 on GF(9) reduces to x.
  const Field g9 = make_field(3, 2);
  EXPECT_EQ(SparsePoly::monomial(g9, 1, 9).reduced(g9), SparsePoly::identity(g9));
  EXPECT_EQ(SparsePoly::monomial(g9, 1, 8).reduced(g9), SparsePoly::monomial(g9, 1, 8));
}

TEST(Linearized, AdditiveAndHomogeneous) {
  Rng rng(99);
  struct Case {
    std::uint32_t p, m;
    std::uint64_t base;
  };
  for (auto c : std::vector<Case>{{2, 6, 2}, {2, 6, 4}, {3, 6, 9}, {3, 6, 3}, {3, 4, 9}, {5, 2, 5}, {2, 9, 8}}) {
    const Field f = make_field(c.p, c.m);
    if (f.q() > 729) continue;
    const auto L = random_linearized(f, rng, c.base, 1 + rng.below(4), c.base);
    const auto t = to_table(f, L);
    const auto sub = subfield_elements(f, c.base);
    for (Index x = 0; x < f.q(); ++x) {
      for (Index y = 0; y < f.q(); ++y) ASSERT_EQ(t[f.add(x, y)], f.add(t[x], t[y]));
      for (Index lam : sub) ASSERT_EQ(t[f.mul(lam, x)], f.mul(lam, t[x]));
    }
    EXPECT_EQ(to_table(f, to_sparse(f, L)), t);
  }
}

TEST(Linearized, FromSparse) {
  const Field f = make_field(2, 6);
  const auto L = linearized_from_sparse(f, parse_poly(f, "x^16 + w x"), 4);
  EXPECT_EQ(L.coeffs, (std::vector<Index>{f.primitive(), 0, 1}));
  EXPECT_THROW(linearized_from_sparse(f, parse_poly(f, "x^3"), 2), Error);
  EXPECT_EQ(trace_poly(f, 4).coeffs.size(), 3u);
  for (Index x = 0; x < f.q(); ++x) EXPECT_EQ(eval(f, trace_poly(f, 4), x), rel_trace(f, x, 4, 3));
}

TEST(Predicates, Permutation) {
  const Field f7 = make_field(7, 1), f5 = make_field(5, 1);
  EXPECT_TRUE(is_permutation(to_table(f7, SparsePoly::identity(f7))));
  const auto cube7 = to_table(f7, SparsePoly::monomial(f7, 1, 3));
  EXPECT_EQ(std::set<Index>(cube7.values.begin(), cube7.values.end()), (std::set<Index>{0, 1, 6}));
  EXPECT_FALSE(is_permutation(cube7));
  EXPECT_TRUE(is_permutation(to_table(f5, SparsePoly::monomial(f5, 1, 3))));
}

TEST(Predicates, PermutationMatchesHistogram) {
  Rng rng(5);
  const Field f = make_field(2, 3);
  for (int i = 0; i < 200; ++i) {
    FuncTable t;
    if (i % 2)
      t = random_table(f, rng);
    else {
      t.values.resize(f.q());
      std::iota(t.values.begin(), t.values.end(), 0);
      for (Index k = f.q() - 1; k > 0; --k) std::swap(t.values[k], t.values[rng.below(k + 1)]);
    }
    const auto h = image_histogram(t);
    const bool all_one = std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second == 1; }) &&
                         h.size() == f.q();
    EXPECT_EQ(is_permutation(t), all_one);
  }
}

TEST(Predicates, TwoToOne) {
  const Field f4 = make_field(2, 2);
  EXPECT_FALSE(is_2to1(to_table(f4, SparsePoly::monomial(f4, 1, 2))));
  const auto t = to_table(f4, LinearizedPoly{2, {1, 1}});
  EXPECT_TRUE(is_2to1(t));
  EXPECT_EQ(image_histogram(t).size(), f4.q() / 2);
  EXPECT_FALSE(is_2to1(to_table(f4, SparsePoly::identity(f4))));
  const Field f = make_field(2, 6);
  const auto t2 = to_table(f, LinearizedPoly{2, {f.primitive(), 1}});  // x^2 + w x
  EXPECT_TRUE(is_2to1(t2));
  EXPECT_EQ(image_histogram(t2).size(), f.q() / 2);
}

TEST(Kernel, Examples) {
  const Field f = make_field(2, 6);
  EXPECT_EQ(kernel(f, LinearizedPoly::identity(2)), std::vector<Index>{0});
  EXPECT_EQ(kernel(f, artin_schreier_poly(f, 4)), subfield_elements(f, 4));
  EXPECT_EQ(kernel(f, LinearizedPoly{2, {1, 1}}), (std::vector<Index>{0, 1}));
  const Field g = make_field(3, 4);
  EXPECT_EQ(kernel(g, artin_schreier_poly(g, 9)), subfield_elements(g, 9));
  // Tr_3^81 vanishes on GF(3) because 4 = 1 mod 3 is not 0; the meet with
  // the subfield kernel is {0}.
  EXPECT_EQ(kernel_intersection(g, artin_schreier_poly(g, 3), trace_poly(g, 3)), std::vector<Index>{0});
}

TEST(ComposeAffine, Examples) {
  const Field f = make_field(5, 1);
  const auto sq = to_table(f, SparsePoly::monomial(f, 1, 2));
  EXPECT_EQ(compose_affine(f, sq, LinearizedPoly::identity(5), 0), sq);
  for (Index a = 0; a < 5; ++a) {
    const auto t = compose_affine(f, sq, LinearizedPoly::identity(5), a);
    for (Index x = 0; x < 5; ++x) EXPECT_EQ(t[x], f.mul(f.add(x, a), f.add(x, a)));
  }
  try {
    compose_affine(f, sq, LinearizedPoly{5, {0}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAPermutation);
  }
}

TEST(Literal, Elements) {
  const Field f = make_field(3, 3);
  EXPECT_EQ(parse_element(f, "0"), 0u);
  EXPECT_EQ(parse_element(f, "w"), f.primitive());
  EXPECT_EQ(parse_element(f, "w^5"), f.exp(5));
  EXPECT_EQ(parse_element(f, "w^-1"), f.inv(f.primitive()));
  EXPECT_EQ(parse_element(f, "[1,2,0]"), 1u + 2u * 3u);
  EXPECT_EQ(parse_element(f, "2"), 2u);
  EXPECT_EQ(parse_element(f, "-1"), 2u);
  EXPECT_EQ(parse_element(f, "4"), 1u);
  EXPECT_THROW(parse_element(f, "[1,2,0,1]"), Error);
  EXPECT_THROW(parse_element(f, "[3]"), Error);
  EXPECT_THROW(parse_element(f, "v"), Error);
  EXPECT_THROW(parse_element(f, "w^2x"), Error);
  for (Index x = 0; x < f.q(); ++x) EXPECT_EQ(parse_element(f, format_element(f, x)), x);
  EXPECT_EQ(parse_element_list(f, "w^3,[1,1],-1"), (std::vector<Index>{f.exp(3), 4, 2}));
}

TEST(Literal, Polynomials) {
  const Field f = make_field(2, 4);
  const auto g = parse_poly(f, "w^3 x^17 + x + w^0");
  ASSERT_EQ(g.terms().size(), 3u);
  EXPECT_EQ(g.terms()[0], (Term{0, 1}));
  EXPECT_EQ(g.terms()[1], (Term{1, 1}));
  EXPECT_EQ(g.terms()[2], (Term{17, f.exp(3)}));
  EXPECT_EQ(parse_poly(f, "w*x^2 - x"), SparsePoly::from_terms(f, {{2, f.primitive()}, {1, 1}}));
  EXPECT_EQ(parse_poly(f, format_poly(f, g)), g);
  EXPECT_TRUE(parse_poly(f, "0").is_zero());
  EXPECT_THROW(parse_poly(f, ""), Error);
  EXPECT_THROW(parse_poly(f, "x^"), Error);
  EXPECT_THROW(parse_poly(f, "x x"), Error);
  const Field g5 = make_field(5, 1);
  EXPECT_EQ(parse_poly(g5, "x^2 - 2x + 3"), SparsePoly::from_terms(g5, {{2, 1}, {1, 3}, {0, 3}}));
}

TEST(Literal, TableCsvRoundTrip) {
  const Field f = make_field(2, 4);
  const auto t = to_table(f, SparsePoly::monomial(f, 1, 14));
  std::stringstream ss;
  write_table_csv(f, t, ss);
  EXPECT_EQ(read_table_csv(f, ss), t);

  std::stringstream bad_header("x,y\n0,0\n");
  EXPECT_THROW(read_table_csv(f, bad_header), Error);
  std::stringstream short_table("x,Fx\n0,0\n");
  EXPECT_THROW(read_table_csv(f, short_table), Error);
  std::stringstream dup("x,Fx\n0,0\n0,1\n");
  EXPECT_THROW(read_table_csv(f, dup), Error);
}
