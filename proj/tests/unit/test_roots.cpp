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

#include "idealpack/roots.hpp"

using namespace idealpack;

namespace {

const std::vector<IntPolynomial>& polys() {
    static const std::vector<IntPolynomial> p{
        {1, 1, -1, -1, 1}, {-1, -2, 1, 1}, {-1, 0, 1, 1}, {1, 0, 0, 1, 0, 0, 1}, {1, 0, 1}, {-2, 0, 1}};
    return p;
}

}  // namespace

TEST(Roots, VietaSumAndProduct) {
    for (const auto& f : polys()) {
        auto K = define_field(f);
        auto R = complex_roots(K, 256);
        ASSERT_EQ(R.roots.size(), K.m);
        const long prec = R.precision;
        Complex sum(prec), prod(Real(1, prec), Real(0, prec));
        for (const auto& z : R.roots) {
            sum += z;
            prod = prod * z;
        }
        const auto tol = Real::exp2i(-200, prec);
        const long m = static_cast<long>(K.m);
        EXPECT_LE(abs(sum.re + Real(f[static_cast<std::size_t>(m - 1)], prec)), tol);
        EXPECT_LE(abs(sum.im), tol);
        Real expected_prod = Real(f[0], prec) * (m % 2 ? -1 : 1);
        EXPECT_LE(abs(prod.re - expected_prod), tol);
        EXPECT_LE(abs(prod.im), tol);
    }
}

TEST(Roots, CanonicalOrderAndCertificate) {
    for (const auto& f : polys()) {
        auto K = define_field(f);
        auto R = complex_roots(K, 192);
        for (std::size_t i = 0; i < R.s; ++i) {
            EXPECT_TRUE(R.roots[i].im.is_zero());
            if (i) {
                EXPECT_LT(R.roots[i - 1].re, R.roots[i].re);
            }
        }
        for (std::size_t j = 0; j < R.t; ++j) {
            const auto& z = R.roots[R.s + 2 * j];
            const auto& w = R.roots[R.s + 2 * j + 1];
            EXPECT_GT(z.im, 0);
            EXPECT_EQ(w.re, z.re);
            EXPECT_EQ(w.im, -z.im);
            if (j) {
                EXPECT_LE(R.roots[R.s + 2 * j - 2].re, z.re);
            }
        }
        EXPECT_LE(R.radius, Real::exp2i(-96, R.precision));
        for (const auto& z : R.roots) EXPECT_LE(f.evaluate(z).abs(), Real::exp2i(-150, R.precision));
    }
}

TEST(Roots, KnownValues) {
    auto K = define_field({-2, 0, 1});
    auto R = complex_roots(K, 128);
    EXPECT_LE(abs(R.roots[1].re - sqrt(Real(2, R.precision))), Real::exp2i(-120, R.precision));
    auto G = define_field({1, 0, 1});
    auto S = complex_roots(G, 128);
    EXPECT_LE(abs(S.roots[0].im - 1), Real::exp2i(-120, S.precision));
}

TEST(Roots, RejectsLowPrecision) { EXPECT_THROW(complex_roots(define_field({1, 0, 1}), 32), Error); }
