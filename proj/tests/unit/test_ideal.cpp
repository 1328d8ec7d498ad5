/*
   Copyright 2026 The idealpack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "idealpack/catalog.hpp"
#include "idealpack/ideal.hpp"

using namespace idealpack;

namespace {

FieldRef quartic() { return make_field({1, 1, -1, -1, 1}); }

FieldElement element(std::size_t m, std::initializer_list<long> c) {
    std::vector<Rational> v(m, 0);
    std::size_t i = 0;
    for (long x : c) v[i++] = x;
    return FieldElement(v);
}

}  // namespace

TEST(Ideal, QuarticPrimeAboveThree) {
    auto K = quartic();
    auto fs = factor_prime(K, Integer(3));
    ASSERT_EQ(fs.size(), 1u);
    const auto& P = fs[0];
    EXPECT_EQ(P.e, 2u);
    EXPECT_EQ(P.f_deg, 2u);
    EXPECT_EQ(P.q, 9);
    EXPECT_EQ(P.g, IntPolynomial({2, 1, 1}));
    EXPECT_EQ(P.hnf.basis(), (IntMatrix{{1, 0, 1, 2}, {0, 1, 2, 2}, {0, 0, 3, 0}, {0, 0, 0, 3}}));
    EXPECT_EQ(ideal_norm(ideal_power(P.hnf, 3)), 729);
    EXPECT_EQ(P.hnf.min_integer(), 3);
}

TEST(Ideal, GeneratorSelectionMatchesFactorization) {
    auto K = quartic();
    auto P = select_prime(K, Integer(7), 0, IntVector{4, 1});
    EXPECT_EQ(P.q, 7);
    EXPECT_TRUE(contains(P.hnf, IntVector{4, 1, 0, 0}));
    EXPECT_TRUE(contains(P.hnf, IntVector{7, 0, 0, 0}));
    // (7, 1 + alpha) is not prime: 1 + alpha has norm 1 - 1 - 1 - 1 + 1 = -1, a unit
    EXPECT_THROW(select_prime(K, Integer(7), 0, IntVector{1, 1}), Error);
    EXPECT_THROW(select_prime(K, Integer(7), 9, std::nullopt), Error);
}

TEST(Ideal, ProductOfPrimePowersIsP) {
    for (const auto& rf : reference_fields()) {
        auto K = make_field(to_polynomial(rf.f));
        for (long p : {2, 3, 5, 7, 11, 13}) {
            IdealHNF prod = IdealHNF::unit(K);
            unsigned long ef = 0;
            for (const auto& P : factor_prime(K, Integer(p))) {
                prod = ideal_product(prod, ideal_power(P.hnf, P.e));
                ef += P.e * P.f_deg;
                EXPECT_EQ(ideal_norm(P.hnf), P.q);
            }
            EXPECT_EQ(ef, K->m);
            EXPECT_EQ(prod, hnf_from_generators(K, Integer(p), FieldElement::constant(K->m, 0)));
        }
    }
}

TEST(Ideal, NormIsMultiplicative) {
    auto K = quartic();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int t = 0; t < 40; ++t) {
        auto a = element(4, {c(rng), c(rng), c(rng), c(rng)});
        auto b = element(4, {c(rng), c(rng), c(rng), c(rng)});
        if (element_norm(*K, a) == 0 || element_norm(*K, b) == 0) continue;
        auto I = hnf_from_generators(K, 0, a), J = hnf_from_generators(K, 0, b);
        EXPECT_EQ(ideal_norm(I), abs(element_norm(*K, a).get_num()));
        EXPECT_EQ(ideal_norm(ideal_product(I, J)), ideal_norm(I) * ideal_norm(J));
    }
}

TEST(Ideal, Membership) {
    auto K = quartic();
    auto P = factor_prime(K, Integer(3))[0];
    EXPECT_TRUE(contains(P.hnf, IntVector{3, 0, 0, 0}));
    EXPECT_FALSE(contains(P.hnf, IntVector{1, 0, 0, 0}));
    EXPECT_TRUE(contains(P.hnf, element(4, {2, 1, 1})));
    EXPECT_THROW(contains(P.hnf, FieldElement(std::vector<Rational>{Rational(1, 3), 0, 0, 0})), Error);
}

TEST(Ideal, ZeroAndBadInput) {
    auto K = quartic();
    try {
        hnf_from_generators(K, 0, FieldElement::zero(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroIdeal);
    }
    EXPECT_THROW(factor_prime(K, Integer(15)), Error);
}

TEST(Ideal, AlphabetSets) {
    auto K = quartic();
    auto P = factor_prime(K, Integer(3))[0];
    for (unsigned i = 0; i <= 4; ++i) {
        auto S = alphabet_set(P, i);
        ASSERT_EQ(S.elements.size(), 9u);
        auto here = ideal_power(P.hnf, i), next = ideal_power(P.hnf, i + 1);
        EXPECT_EQ(S.elements[0], IntVector(4, 0));
        for (std::size_t a = 0; a < 9; ++a) {
            EXPECT_TRUE(contains(here, S.elements[a]));
            for (std::size_t b = a + 1; b < 9; ++b) {
                IntVector d(4);
                for (std::size_t k = 0; k < 4; ++k) d[k] = S.elements[a][k] - S.elements[b][k];
                EXPECT_FALSE(contains(next, d));
            }
        }
    }
}

TEST(Ideal, ResidueRepresentativesAreDistinctModP) {
    auto K = make_field({-1, 0, 1, 1});
    for (const auto& P : factor_prime(K, Integer(5))) {
        auto reps = residue_representatives(P);
        ASSERT_EQ(Integer(static_cast<unsigned long>(reps.size())), P.q);
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b) {
                IntVector d(3);
                for (std::size_t k = 0; k < 3; ++k) d[k] = reps[a][k] - reps[b][k];
                EXPECT_FALSE(contains(P.hnf, d));
            }
    }
}
