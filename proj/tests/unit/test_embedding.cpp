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
#include "idealpack/embedding.hpp"

using namespace idealpack;

namespace {

// sum over all m complex embeddings of |sigma(x)|^2, straight from the roots
Real direct_squared_length(const EmbeddingContext& ctx, const IntVector& x) {
    const long prec = ctx.working_precision();
    Real total(prec);
    for (const auto& z : ctx.roots().roots) {
        Complex acc(prec), pw(Real(1, prec), Real(0, prec));
        for (const auto& c : x) {
            acc += pw * Real(c, prec);
            pw = pw * z;
        }
        total += acc.norm();
    }
    return total;
}

}  // namespace

TEST(Embedding, SquaredLengthMatchesAllEmbeddings) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-50, 50);
    for (const auto& rf : reference_fields()) {
        auto K = make_field(to_polynomial(rf.f));
        auto ctx = make_embedding(K, 192);
        for (int t = 0; t < 30; ++t) {
            IntVector x(K->m);
            for (auto& v : x) v = c(rng);
            Real direct = direct_squared_length(*ctx, x);
            auto got = ctx->squared_length(x);
            auto num = ctx->numeric_squared_length(x);
            Real tol = direct * Real::exp2i(-150, 192);
            EXPECT_LE(abs(got.value - direct), tol + got.error) << rf.name;
            EXPECT_LE(abs(num.value - direct), tol + num.error) << rf.name;
            RealVector v = ctx->embed(x);
            Real sq(192);
            for (const auto& e : v) sq += e * e;
            EXPECT_LE(abs(sq - direct), tol) << rf.name;
        }
    }
}

TEST(Embedding, ExactGramOnlyForTotallyRealOrCm) {
    EXPECT_TRUE(make_embedding(make_field({-1, -2, 1, 1}), 192)->exact_gram().has_value());
    EXPECT_TRUE(make_embedding(make_field({1, 0, 0, 1, 0, 0, 1}), 192)->exact_gram().has_value());
    EXPECT_TRUE(make_embedding(make_field({1, 0, 1}), 192)->exact_gram().has_value());
    EXPECT_FALSE(make_embedding(make_field({1, 1, -1, -1, 1}), 192)->exact_gram().has_value());
    EXPECT_FALSE(make_embedding(make_field({-1, 0, 1, 1}), 192)->exact_gram().has_value());
}

TEST(Embedding, GramOfUnitIsTrace) {
    // |tau(1)|^2 = m
    for (const auto& rf : reference_fields()) {
        auto K = make_field(to_polynomial(rf.f));
        auto ctx = make_embedding(K, 192);
        IntVector one(K->m, 0);
        one[0] = 1;
        auto r = ctx->squared_length(one);
        EXPECT_LE(abs(r.value - static_cast<long>(K->m)), Real::exp2i(-150, 192)) << rf.name;
    }
}

TEST(Embedding, DeterminantLaw) {
    for (const auto& rf : reference_fields()) {
        auto K = make_field(to_polynomial(rf.f));
        auto ctx = make_embedding(K, 192);
        for (const auto& P : factor_prime(K, Integer(2))) {
            IdealHNF I = IdealHNF::unit(K);
            for (unsigned i = 0; i <= 5; ++i) {
                auto b = lattice_basis(ctx, I);
                Real expected = Real(ideal_norm(I), 192) * sqrt(Real(K->abs_disc(), 192));
                EXPECT_LE(abs(lattice_determinant(b) - expected) / expected, Real::exp2i(-48, 192));
                I = ideal_product(I, P.hnf);
            }
        }
    }
}

TEST(Embedding, OrderingDoesNotChangeLengths) {
    auto K = make_field({1, 0, 0, 1, 0, 0, 1});
    EmbeddingOptions o;
    o.pair_order = {2, 0, 1};
    o.conjugate_pair = {true, false, true};
    auto a = make_embedding(K, 192), b = make_embedding(K, 192, o);
    IntVector x{3, -1, 4, 1, -5, 9};
    EXPECT_LE(abs(a->numeric_squared_length(x).value - b->numeric_squared_length(x).value), Real::exp2i(-150, 192));
}

TEST(Embedding, InjectedFaultIsDetected) {
    auto K = make_field({1, 1, -1, -1, 1});
    EmbeddingOptions o;
    o.inject_precision_fault = true;
    auto ctx = make_embedding(K, 192, o);
    try {
        lattice_basis(ctx, factor_prime(K, Integer(3))[0].hnf);
        FAIL() << "expected DeterminantMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DeterminantMismatch);
    }
}

TEST(Embedding, DefaultPrecisionGrowsWithLevel) {
    EXPECT_EQ(default_precision(4, 9, 3), 192);
    EXPECT_GE(default_precision(4, 9, 1000), static_cast<long>(1000 * std::log2(9.0) / 2));
}
