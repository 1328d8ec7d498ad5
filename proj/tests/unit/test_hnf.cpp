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

#include <array>
#include <set>

#include <random>

#include "idealpack/hnf.hpp"

using namespace idealpack;

namespace {

// Plain Euclidean row reduction without modular shortcuts.
IntMatrix naive_hnf(IntMatrix rows, std::size_t width) {
    IntMatrix h;
    for (std::size_t j = 0; j < width; ++j) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r][j] != 0 && (best == rows.size() || abs(rows[r][j]) < abs(rows[best][j]))) best = r;
            if (best == rows.size()) break;
            bool done = true;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == best || rows[r][j] == 0) continue;
                Integer q = rows[r][j] / rows[best][j];
                for (std::size_t k = 0; k < width; ++k) rows[r][k] -= q * rows[best][k];
                if (rows[r][j] != 0) done = false;
            }
            if (done) {
                IntVector piv = rows[best];
                rows.erase(rows.begin() + static_cast<long>(best));
                if (piv[j] < 0)
                    for (auto& x : piv) x = -x;
                h.push_back(piv);
                break;
            }
        }
    }
    for (std::size_t i = 1; i < h.size(); ++i)
        for (std::size_t k = 0; k < i; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h[k][i].get_mpz_t(), h[i][i].get_mpz_t());
            for (std::size_t c = 0; c < width; ++c) h[k][c] -= q * h[i][c];
        }
    return h;
}

}  // namespace

TEST(Hnf, MatchesNaiveReductionOnRandomLattices) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-40, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const Integer modulus = 1 + static_cast<long>(rng() % 60);
        IntMatrix gens(1 + rng() % 5, IntVector(n));
        for (auto& r : gens)
            for (auto& x : r) x = coef(rng);
        IntMatrix all = gens;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n, 0);
            e[i] = modulus;
            all.push_back(e);
        }
        EXPECT_EQ(hnf::hnf_modular(gens, modulus, n), naive_hnf(all, n)) << "trial " << trial;
    }
}

TEST(Hnf, ShapeAndDeterminant) {
    IntMatrix gens{{2, 4, 6}, {0, 3, 3}};
    auto h = hnf::hnf_modular(gens, 12, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_GT(h[i][i], 0);
        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h[i][j], 0);
        for (std::size_t k = 0; k < i; ++k) {
            EXPECT_GE(h[k][i], 0);
            EXPECT_LT(h[k][i], h[i][i]);
        }
    }
    // index in Z^3 = 12^3 / #(residues reached mod 12)
    std::set<std::array<long, 3>> reached;
    for (long a = 0; a < 12; ++a)
        for (long b = 0; b < 12; ++b) reached.insert({(2 * a) % 12, (4 * a + 3 * b) % 12, (6 * a + 3 * b) % 12});
    EXPECT_EQ(hnf::determinant(h), static_cast<long>(12 * 12 * 12 / reached.size()));
}

TEST(Hnf, SolveTriangularMembership) {
    IntMatrix h{{2, 1}, {0, 3}};
    bool ok = false;
    auto c = hnf::solve_triangular(h, {4, 5}, &ok);
    ASSERT_TRUE(ok);
    EXPECT_EQ(c, (IntVector{2, 1}));
    hnf::solve_triangular(h, {1, 0}, &ok);
    EXPECT_FALSE(ok);
}

TEST(Hnf, SmallestIntegerMultiple) {
    EXPECT_EQ(hnf::smallest_first_axis_multiple({{1, 0, 1, 2}, {0, 1, 2, 2}, {0, 0, 3, 0}, {0, 0, 0, 3}}), 3);
    EXPECT_EQ(hnf::smallest_first_axis_multiple({{2, 1}, {0, 3}}), 6);
}

TEST(Hnf, Errors) {
    EXPECT_THROW(hnf::hnf_modular({{1, 2}}, 0, 2), Error);
    EXPECT_THROW(hnf::hnf_modular({{1, 2, 3}}, 5, 2), Error);
}
