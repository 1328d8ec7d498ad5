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

#include "idealpack/modp.hpp"

using namespace idealpack;

namespace {

// Irreducibility by trial division over every monic polynomial of degree <= deg/2.
bool irreducible_by_search(const FpPoly& f) {
    const auto p = f.modulus();
    const long n = f.degree();
    for (long d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FpPoly::Coeff> c(static_cast<std::size_t>(d + 1), 0);
            std::uint64_t r = idx;
            for (long i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = r % p;
                r /= p;
            }
            c[static_cast<std::size_t>(d)] = 1;
            if ((f % FpPoly(p, c)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Modp, FactorizationReproducesPolynomial) {
    const std::vector<IntPolynomial> fs{{1, 1, -1, -1, 1}, {-1, -2, 1, 1}, {-1, 0, 1, 1}, {1, 0, 0, 1, 0, 0, 1}};
    for (const auto& f : fs)
        for (FpPoly::Coeff p : {2, 3, 5, 7, 11, 13}) {
            auto fp = FpPoly::reduce(f, p);
            FpPoly prod(p, {1});
            for (const auto& fac : modp::factor(fp)) {
                EXPECT_TRUE(irreducible_by_search(fac.factor)) << f.to_string() << " mod " << p;
                for (unsigned k = 0; k < fac.multiplicity; ++k) prod = prod * fac.factor;
            }
            EXPECT_EQ(prod, fp) << f.to_string() << " mod " << p;
        }
}

TEST(Modp, KnownSplittings) {
    // x^4 - x^3 - x^2 + x + 1 = (x^2 + x + 2)^2 mod 3
    auto fs = modp::factor(FpPoly::reduce({1, 1, -1, -1, 1}, 3));
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].multiplicity, 2u);
    EXPECT_EQ(fs[0].factor, FpPoly(3, {2, 1, 1}));
    // the ninth cyclotomic polynomial is (x - 1)^6 mod 3
    auto g = modp::factor(FpPoly::reduce({1, 0, 0, 1, 0, 0, 1}, 3));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].multiplicity, 6u);
    EXPECT_EQ(g[0].factor, FpPoly(3, {2, 1}));
}

TEST(Modp, RabinAgreesWithSearch) {
    for (FpPoly::Coeff p : {2, 3, 5})
        for (std::uint64_t idx = 0; idx < p * p * p * p; ++idx) {
            std::vector<FpPoly::Coeff> c(5, 0);
            std::uint64_t r = idx;
            for (int i = 0; i < 4; ++i) {
                c[static_cast<std::size_t>(i)] = r % p;
                r /= p;
            }
            c[4] = 1;
            FpPoly f(p, c);
            EXPECT_EQ(modp::is_irreducible(f), irreducible_by_search(f)) << idx << " mod " << p;
        }
}

TEST(Modp, SeedDoesNotChangeResult) {
    auto f = FpPoly::reduce({-1, 0, 0, 0, 0, 0, 0, 0, 1}, 17);  // x^8 - 1 splits completely
    auto a = modp::factor(f, 1), b = modp::factor(f, 99);
    ASSERT_EQ(a.size(), 8u);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].factor, b[i].factor);
}

TEST(Modp, PrimeTest) {
    EXPECT_TRUE(modp::is_prime(Integer(2)));
    EXPECT_TRUE(modp::is_prime(Integer(2147483647)));
    EXPECT_FALSE(modp::is_prime(Integer(1)));
    EXPECT_FALSE(modp::is_prime(Integer(91)));
}
