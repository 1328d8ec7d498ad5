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

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "idealpack/codes.hpp"

using namespace idealpack;

namespace {

double entropy_oracle(double q, double x) {
    return (x * std::log(q - 1) - x * std::log(x) - (1 - x) * std::log(1 - x)) / std::log(q);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CodeTable parse(const std::string& text) {
    std::istringstream in(text);
    return load_code_table(in, "inline");
}

}  // namespace

TEST(Entropy, PeaksAtOneOverQComplement) {
    for (long q : {2L, 3L, 5L, 7L, 8L, 9L}) {
        double r = static_cast<double>(q - 1) / static_cast<double>(q);
        EXPECT_NEAR(entropy(q, r), 1.0, 1e-12) << q;
        Real rr(Rational(q - 1, q), 256);
        EXPECT_LE(abs(entropy(q, rr) - 1), Real::exp2i(-240, 256)) << q;
    }
}

TEST(Entropy, MatchesClosedForm) {
    for (long q : {2L, 3L, 9L, 49L})
        for (int i = 1; i < 100; ++i) {
            double x = i / 100.0;
            EXPECT_NEAR(entropy(q, x), entropy_oracle(static_cast<double>(q), x), 1e-13);
        }
}

TEST(Entropy, GvRateMonotoneAndClamp) {
    for (long q : {2L, 3L, 5L, 9L}) {
        const double top = static_cast<double>(q - 1) / static_cast<double>(q);
        double prev = 1.0;
        for (int i = 1; i < 1000; ++i) {
            double x = top * i / 1000.0;
            double r = gv_rate(q, x);
            EXPECT_LT(r, prev);
            EXPECT_GE(r, 0.0);
            prev = r;
        }
        EXPECT_EQ(entropy_clamped(q, top), 1.0);
        EXPECT_EQ(entropy_clamped(q, 0.999), 1.0);
        EXPECT_DOUBLE_EQ(entropy_clamped(q, top / 2), entropy(q, top / 2));
    }
}

TEST(Entropy, DomainErrors) {
    EXPECT_THROW(entropy(1, 0.5), Error);
    EXPECT_THROW(entropy(2, 0.0), Error);
    EXPECT_THROW(entropy(2, 1.0), Error);
    EXPECT_THROW(gv_rate(2, 0.5), Error);
    EXPECT_THROW(entropy_clamped(3, -0.1), Error);
}

TEST(Levels, MaxLevelsByExactPowers) {
    for (unsigned long m = 2; m <= 6; ++m)
        for (unsigned long q : {2UL, 3UL, 4UL, 5UL, 7UL, 8UL, 9UL})
            for (unsigned long n = 2; n <= 130; n += 7) {
                Integer nm = 1, acc = 1;
                for (unsigned long i = 0; i < m; ++i) nm *= n;
                unsigned long l = 0;
                while (acc * q * q <= nm) {
                    acc *= q * q;
                    ++l;
                }
                EXPECT_EQ(max_levels(m, q, n), l);
            }
    EXPECT_EQ(max_levels(4, 9, 64), 3u);
    EXPECT_THROW(max_levels(4, 9, 1), Error);
}

TEST(Levels, CertifiedCeiling) {
    const long p = 128;
    Certified exact108{Real(108, p), Real(p)}, exact4{Real(4, p), Real(p)}, exact12{Real(12, p), Real(p)};
    EXPECT_EQ(*certified_ceiling(exact108, exact4), 27);
    EXPECT_EQ(*certified_ceiling(exact108, exact12), 9);
    Certified fuzzy{Real(108, p), Real::exp2i(-10, p)};
    EXPECT_FALSE(certified_ceiling(fuzzy, exact4).has_value());
    Certified inner{Real::from_double(107.5, p), Real::exp2i(-10, p)};
    EXPECT_EQ(*certified_ceiling(inner, exact4), 27);
    auto d = required_distances({exact4, exact12, Certified{Real(36, p), Real(p)}, exact108});
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], 27);
    EXPECT_EQ(d[1], 9);
    EXPECT_EQ(d[2], 3);
    try {
        required_distances({exact4, fuzzy});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AmbiguousCeiling);
    }
}

TEST(CodeTable, BundledSnapshotMatchesDataFile) {
    EXPECT_EQ(slurp(std::string(IDEALPACK_SOURCE_DIR) + "/data/codetable_snapshot.txt"), kBundledCodeTable);
    auto t = bundled_code_table();
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.best_dimension(9, 64, 27), 25u);
    EXPECT_EQ(t.best_dimension(9, 64, 10), 25u);
    EXPECT_EQ(t.best_dimension(9, 64, 9), 49u);
    EXPECT_EQ(t.best_dimension(9, 64, 3), 61u);
    EXPECT_EQ(t.best_dimension(9, 64, 1), 64u);
    EXPECT_NE(t.provenance(9, 64, 9).find("[64,49,9]"), std::string::npos);
}

TEST(CodeTable, MissingEntryNamesTheTriple) {
    auto t = bundled_code_table();
    try {
        t.best_dimension(9, 64, 28);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingEntry);
        EXPECT_NE(std::string(e.what()).find("(9, 64, 28)"), std::string::npos);
    }
    EXPECT_THROW(t.best_dimension(7, 64, 3), Error);
}

TEST(CodeTable, ParseErrors) {
    auto kind = [](const std::string& text) -> std::optional<ErrorKind> {
        try {
            parse(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return std::optional<ErrorKind>{};
    };
    EXPECT_EQ(kind("9 64 25\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind("9 64 x 3\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind("9 64 -1 3\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind("9 10 8 4\n"), ErrorKind::ParseError);      // Singleton
    EXPECT_EQ(kind("9 10 3 5\n9 10 4 6\n"), ErrorKind::ParseError);  // k grows with d
    EXPECT_EQ(kind("1 10 3 5\n"), ErrorKind::ParseError);
    auto t = parse("# comment only\n\n5 20 10 8 # my source\n");
    EXPECT_EQ(t.best_dimension(5, 20, 8), 10u);
    EXPECT_EQ(t.provenance(5, 20, 8), "my source");
}

TEST(GaloisField, FieldAxioms) {
    for (unsigned long q : {2UL, 3UL, 4UL, 5UL, 8UL, 9UL, 16UL, 25UL, 27UL}) {
        GaloisField F(q);
        EXPECT_EQ(std::pow(F.p(), F.degree()), q);
        for (unsigned long a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, 0), a);
            EXPECT_EQ(F.mul(a, 1), a);
            unsigned long inv = 0, neg = 0;
            for (unsigned long b = 0; b < q; ++b) {
                inv += F.mul(a, b) == 1;
                neg += F.add(a, b) == 0;
                EXPECT_EQ(F.add(a, b), F.add(b, a));
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
                for (unsigned long c = 0; c < q; c += 1 + q / 8) {
                    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
                    EXPECT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
                }
            }
            EXPECT_EQ(neg, 1u);
            EXPECT_EQ(inv, a == 0 ? 0u : 1u);
            if (a) {
                EXPECT_EQ(F.pow(a, q - 1), 1u);
            }
        }
    }
    EXPECT_THROW(GaloisField(6), Error);
    EXPECT_THROW(GaloisField(1), Error);
}

TEST(DemoCodes, DistanceByExhaustiveSearch) {
    struct C {
        unsigned long q, n, k;
    };
    for (auto c : {C{9, 9, 3}, C{9, 8, 4}, C{7, 7, 2}, C{5, 5, 3}, C{4, 4, 2}, C{3, 7, 1}, C{8, 6, 3}}) {
        GaloisField F(c.q);
        auto code = demo_code(F, c.n, c.k);
        // independent weight count over every message
        std::vector<unsigned long> msg(c.k, 0);
        unsigned long best = c.n + 1, count = 0;
        for (;;) {
            std::vector<unsigned long> w(c.n, 0);
            for (unsigned long i = 0; i < c.k; ++i)
                for (unsigned long j = 0; j < c.n; ++j) w[j] = F.add(w[j], F.mul(msg[i], code.generator[i][j]));
            unsigned long wt = 0;
            for (auto x : w) wt += x != 0;
            if (wt) best = std::min(best, wt);
            ++count;
            std::size_t i = 0;
            while (i < c.k && msg[i] == c.q - 1) msg[i++] = 0;
            if (i == c.k) break;
            ++msg[i];
        }
        EXPECT_EQ(best, code.d) << c.q << " " << c.n << " " << c.k;
        EXPECT_EQ(minimum_weight(F, code), code.d);
        EXPECT_EQ(all_codewords(F, code).size(), count);
    }
    EXPECT_THROW(demo_code(3, 7, 2), Error);
    EXPECT_THROW(demo_code(3, 3, 0), Error);
}
