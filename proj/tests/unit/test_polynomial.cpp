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

#include "idealpack/polynomial.hpp"

using namespace idealpack;

namespace {

// Sylvester-matrix discriminant by Bareiss elimination, written independently of poly::discriminant.
Integer sylvester_discriminant(const IntPolynomial& f) {
    const long m = f.degree();
    IntPolynomial df = f.derivative();
    const long n = 2 * m - 1;
    std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n, 0));
    for (long r = 0; r < m - 1; ++r)
        for (long k = 0; k <= m; ++k) s[r][r + k] = f[static_cast<std::size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= m - 1; ++k) s[m - 1 + r][r + k] = df[static_cast<std::size_t>(m - 1 - k)];
    Integer prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (s[k][k] == 0) {
            long piv = k + 1;
            while (piv < n && s[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(s[piv], s[k]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
        prev = s[k][k];
    }
    Integer res = sign * s[n - 1][n - 1];
    // disc = (-1)^(m(m-1)/2) res(f, f')
    return (m * (m - 1) / 2) % 2 ? Integer(-res) : res;
}

}  // namespace

TEST(Polynomial, ParseAndPrint) {
    auto f = IntPolynomial::parse("1, 1,-1,-1,+1");
    EXPECT_EQ(f.degree(), 4);
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f.to_csv(), "1,1,-1,-1,1");
    EXPECT_EQ(f.to_string(), "x^4 - x^3 - x^2 + x + 1");
    EXPECT_THROW(IntPolynomial::parse("1,,2"), Error);
    EXPECT_THROW(IntPolynomial::parse("1,a"), Error);
}

TEST(Polynomial, TrimsLeadingZeros) {
    IntPolynomial f({1, 2, 0, 0});
    EXPECT_EQ(f.degree(), 1);
    EXPECT_EQ(IntPolynomial({}).degree(), -1);
}

TEST(Polynomial, Derivative) { EXPECT_EQ(IntPolynomial({5, 3, 0, 2}).derivative(), IntPolynomial({3, 0, 6})); }

TEST(Polynomial, ReferenceDiscriminants) {
    EXPECT_EQ(poly::discriminant({1, 1, -1, -1, 1}), 117);
    EXPECT_EQ(poly::discriminant({-1, -2, 1, 1}), 49);
    EXPECT_EQ(poly::discriminant({-1, 0, 1, 1}), -23);
    EXPECT_EQ(poly::discriminant({1, 0, 0, 1, 0, 0, 1}), -19683);
}

TEST(Polynomial, DiscriminantMatchesSylvesterOracle) {
    const std::vector<IntPolynomial> fs{{1, 0, 1}, {-2, 0, 1}, {-8, -2, -1, 1}, {3, -5, 2, 7, 1}, {1, 1, 1, 1, 1, 1}};
    for (const auto& f : fs) EXPECT_EQ(poly::discriminant(f), sylvester_discriminant(f)) << f.to_string();
}

TEST(Polynomial, RealRootCounts) {
    EXPECT_EQ(poly::count_real_roots({1, 1, -1, -1, 1}), 0);
    EXPECT_EQ(poly::count_real_roots({-1, -2, 1, 1}), 3);
    EXPECT_EQ(poly::count_real_roots({-1, 0, 1, 1}), 1);
    EXPECT_EQ(poly::count_real_roots({1, 0, 0, 1, 0, 0, 1}), 0);
    EXPECT_EQ(poly::count_real_roots({-2, 0, 1}), 2);
}
