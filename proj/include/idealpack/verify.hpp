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

/**
 * @file verify.hpp
 * @brief Seeded property suites over the reference fields and tiny explicit packings.
 */

#ifndef IDEALPACK_VERIFY_HPP
#define IDEALPACK_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "codes.hpp"
#include "embedding.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "numfield.hpp"
#include "packing.hpp"

namespace idealpack {

struct SuiteResult {
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed;
    std::size_t norm_pairs = 1000;
    std::size_t tiny_instances = 24;
    std::size_t negative_controls = 6;
    unsigned determinant_levels = 5;
    unsigned svp_levels = 3;
    unsigned alphabet_levels = 4;
    EmbeddingOptions embedding;  // fault injection for the determinant suite
};

/// Distinct (field, prime) pairs from the reference rows.
inline std::vector<std::pair<FieldRef, PrimeIdealFactor>> reference_primes() {
    std::vector<std::pair<FieldRef, PrimeIdealFactor>> out;
    std::map<std::string, FieldRef> fields;
    std::set<std::pair<std::string, long>> seen;
    for (const auto& row : reference_rows()) {
        if (!seen.insert({row.field, row.p}).second) continue;
        auto& K = fields[row.field];
        if (!K) K = make_field(to_polynomial(reference_field(row.field).f));
        out.emplace_back(K, reference_prime(K, row));
    }
    return out;
}

inline std::vector<FieldRef> reference_field_refs() {
    std::vector<FieldRef> out;
    for (const auto& f : reference_fields()) out.push_back(make_field(to_polynomial(f.f)));
    return out;
}

inline std::string describe(const PrimeIdealFactor& P) {
    return "f=" + P.hnf.K().f.to_string() + " p=" + P.p.get_str() + " g=" + P.g.to_string();
}

/// |det tau(p^i)| = q^i sqrt|D_K| to relative error 2^(-P/4).
inline SuiteResult suite_determinant_law(const VerifyOptions& o) {
    SuiteResult r("determinant law");
    for (auto& [K, P] : reference_primes()) {
        auto ctx = make_embedding(K, 192, o.embedding);
        IdealHNF I = IdealHNF::unit(K);
        for (unsigned i = 0; i <= o.determinant_levels; ++i) {
            // lattice_from_coords raises DeterminantMismatch past the tolerance
            auto b = lattice_basis(ctx, I);
            Real det = lattice_determinant(b);
            Real expected = Real(ideal_norm(I), 256) * sqrt(Real(K->abs_disc(), 256));
            r.expect(ideal_norm(I) == [&] {
                Integer q;
                mpz_pow_ui(q.get_mpz_t(), P.q.get_mpz_t(), i);
                return q;
            }(), "N(p^i) != q^i for " + describe(P));
            r.expect(abs(det - expected) / expected <= Real::exp2i(-(ctx->precision() / 4), 256),
                     "determinant off at level " + std::to_string(i) + " for " + describe(P));
            I = ideal_product(I, P.hnf);
        }
    }
    return r;
}

/// min_sq(tau(O_K)) = m with witness +-1.
inline SuiteResult suite_unit_minimum(const VerifyOptions&) {
    SuiteResult r("minimum of O_K");
    for (const auto& K : reference_field_refs()) {
        auto ctx = make_embedding(K, 192);
        auto res = ideal_minimum(lll_reduce(lattice_basis(ctx, IdealHNF::unit(K))));
        Real m(static_cast<long>(K->m), 192);
        r.expect(abs(res.value() - m) / m <= Real::from_double(1e-12, 192), "minimum differs from m for " + K->f.to_string());
        bool unit_tied = false;
        for (const auto& e : res.tied_elements) {
            bool is_one = ::abs(e[0]) == 1;
            for (std::size_t i = 1; i < e.size(); ++i) is_one = is_one && e[i] == 0;
            unit_tied = unit_tied || is_one;
        }
        r.expect(unit_tied, "tau(1) not among the shortest vectors for " + K->f.to_string());
    }
    return r;
}

/// Sum e f = m and prod p_i^(e_i) = (p).
inline SuiteResult suite_factorization(const VerifyOptions& o) {
    SuiteResult r("prime factorization");
    for (const auto& K : reference_field_refs())
        for (long p : {2, 3, 5, 7, 11, 13}) {
            auto fs = factor_prime(K, Integer(p), o.seed);
            unsigned long ef = 0;
            IdealHNF prod = IdealHNF::unit(K);
            for (const auto& P : fs) {
                ef += static_cast<unsigned long>(P.e) * P.f_deg;
                prod = ideal_product(prod, ideal_power(P.hnf, P.e));
            }
            std::vector<Rational> pc(K->m, 0);
            pc[0] = p;
            IdealHNF pp = hnf_from_generators(K, Integer(p), FieldElement(pc));
            r.expect(ef == K->m, "sum e f != m for p=" + std::to_string(p) + " over " + K->f.to_string());
            r.expect(prod == pp, "product of prime powers != (p) for p=" + std::to_string(p) + " over " + K->f.to_string());
        }
    return r;
}

/// N(ab) = N(a) N(b) on seeded random pairs with rational coordinates.
inline SuiteResult suite_norm_multiplicativity(const VerifyOptions& o) {
    SuiteResult r("norm multiplicativity");
    std::mt19937_64 rng(o.seed);
    auto fields = reference_field_refs();
    std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
    for (std::size_t k = 0; k < o.norm_pairs; ++k) {
        const auto& K = fields[k % fields.size()];
        auto random_element = [&] {
            std::vector<Rational> c(K->m);
            for (auto& x : c) {
                const long a = num(rng);
                x = Rational(a, den(rng));
                x.canonicalize();
            }
            return FieldElement(std::move(c));
        };
        FieldElement a = random_element(), b = random_element();
        r.expect(element_norm(*K, element_product(*K, a, b)) == element_norm(*K, a) * element_norm(*K, b),
                 "N(ab) != N(a)N(b) in " + K->f.to_string());
    }
    return r;
}

/// shortest_vector agrees with exhaustive search over [-8, 8]^m on tau(p^i), rank <= 4.
inline SuiteResult suite_svp_oracle(const VerifyOptions& o) {
    SuiteResult r("SVP oracle equivalence");
    for (auto& [K, P] : reference_primes()) {
        if (K->m > 4) continue;
        auto ctx = make_embedding(K, 192);
        IdealHNF I = IdealHNF::unit(K);
        for (unsigned i = 0; i <= o.svp_levels; ++i) {
            auto red = lll_reduce(lattice_basis(ctx, I));
            SvpResult s = ideal_minimum(red);
            Real bf = brute_force_min(red, 8);
            Real tol = s.min_sq.error + bf * Real::exp2i(-(ctx->precision() / 2), bf.precision());
            r.expect(abs(bf - s.value()) <= tol, "SVP " + s.value().str(15) + " vs exhaustive " + bf.str(15) +
                                                     " at level " + std::to_string(i) + " for " + describe(P));
            I = ideal_product(I, P.hnf);
        }
    }
    return r;
}

/// S_i has q elements, all in p^i, pairwise distinct mod p^(i+1), S_i[0] = 0.
inline SuiteResult suite_alphabets(const VerifyOptions& o) {
    SuiteResult r("alphabet sets");
    for (auto& [K, P] : reference_primes()) {
        IdealHNF here = IdealHNF::unit(K);
        for (unsigned i = 0; i <= o.alphabet_levels; ++i) {
            IdealHNF next = ideal_product(here, P.hnf);
            AlphabetSet S = alphabet_set(P, i);
            r.expect(Integer(static_cast<unsigned long>(S.elements.size())) == P.q, "|S_i| != q for " + describe(P));
            bool zero_first = true;
            for (const auto& x : S.elements[0]) zero_first = zero_first && x == 0;
            r.expect(zero_first, "S_i[0] != 0 for " + describe(P));
            bool inside = true, distinct = true;
            for (std::size_t a = 0; a < S.elements.size(); ++a) {
                inside = inside && contains(here, S.elements[a]);
                for (std::size_t b = a + 1; b < S.elements.size(); ++b) {
                    IntVector d(K->m);
                    for (std::size_t c = 0; c < K->m; ++c) d[c] = S.elements[a][c] - S.elements[b][c];
                    distinct = distinct && !contains(next, d);
                }
            }
            r.expect(inside, "S_" + std::to_string(i) + " not inside p^i for " + describe(P));
            r.expect(distinct, "S_" + std::to_string(i) + " has congruent elements mod p^(i+1) for " + describe(P));
            here = std::move(next);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------------------------------------------
// tiny explicit packings

struct TinyInstance {
    TinyInstance(FieldRef k, PrimeIdealFactor p) : K(std::move(k)), P(std::move(p)) {}

    FieldRef K;
    PrimeIdealFactor P;
    unsigned long n = 0;
    std::vector<LevelCode> levels;
    std::vector<unsigned long> code_distances;
    std::vector<Real> min_sqs;  // L_0..L_l
    bool satisfies_condition = true;
};

inline std::vector<std::vector<long>> tiny_field_polys() {
    return {{1, 0, 1}, {1, 1, 1}, {-2, 0, 1}, {2, 0, 1}, {-1, -1, 1}, {2, 1, 1}, {-3, 0, 1}, {3, 1, 1}};
}

/// A seeded tiny instance (m = 2, n <= 4, l <= 2). `negative` replaces every code by the full space (d = 1).
inline std::optional<TinyInstance> make_tiny_instance(std::mt19937_64& rng, bool negative) {
    auto polys = tiny_field_polys();
    auto K = make_field(to_polynomial(polys[rng() % polys.size()]));
    const long primes[] = {2, 3, 5};
    auto factors = factor_prime(K, Integer(primes[rng() % 3]));
    PrimeIdealFactor P = factors[rng() % factors.size()];
    const unsigned long q = P.q.get_ui();
    TinyInstance t(K, P);
    t.n = 2 + rng() % 3;
    unsigned long l = 1 + rng() % 2;
    if (negative) {
        // full-space codes: keep the codeword product small
        while (l > 1 && std::pow(static_cast<double>(q), static_cast<double>(t.n * l)) > 2e3) --l;
        while (t.n > 2 && std::pow(static_cast<double>(q), static_cast<double>(t.n * l)) > 2e3) --t.n;
    }
    auto ctx = make_embedding(K, 192);
    IdealHNF I = IdealHNF::unit(K);
    for (unsigned long i = 0; i <= l; ++i) {
        t.min_sqs.push_back(ideal_minimum(lll_reduce(lattice_basis(ctx, I))).value());
        I = ideal_product(I, P.hnf);
    }
    GaloisField F(q);
    double combos = 1;
    for (unsigned long i = 0; i < l; ++i) {
        LinearCode code{q, t.n, 0, 0, {}};
        if (negative) {
            code.k = t.n;
            code.d = 1;
            for (unsigned long j = 0; j < t.n; ++j) {
                std::vector<unsigned long> row(t.n, 0);
                row[j] = 1;
                code.generator.push_back(row);
            }
        } else {
            // largest supported k with d * min_sq(L_i) >= min_sq(L_l)
            std::optional<LinearCode> best;
            for (unsigned long k = 1; k <= t.n; ++k) {
                if (k > 1 && t.n > q) break;
                LinearCode c = demo_code(F, t.n, k);
                if (t.min_sqs[i] * static_cast<long>(c.d) >= t.min_sqs[l]) best = c;
            }
            if (!best) return std::nullopt;
            code = *best;
        }
        combos *= std::pow(static_cast<double>(q), static_cast<double>(code.k));
        t.code_distances.push_back(code.d);
        t.levels.push_back({code, alphabet_set(P, static_cast<unsigned>(i))});
    }
    if (combos > 2e3) return std::nullopt;
    for (unsigned long i = 0; i < l; ++i)
        if (t.min_sqs[i] * static_cast<long>(t.code_distances[i]) < t.min_sqs[l]) t.satisfies_condition = false;
    if (negative && t.satisfies_condition) return std::nullopt;
    return t;
}

/// Lattice points of tau(p^l) near -shift counted by an exhaustive coefficient box (the box is widened until no
/// point lies on its boundary).
inline std::size_t count_by_box(const EmbeddingContext& ctx, const IntMatrix& coords, const IntVector& shift,
                                const Real& radius_sq, std::vector<Real>& lengths) {
    const std::size_t m = coords.size();
    for (long B = 4;; B *= 2) {
        lengths.clear();
        bool boundary = false;
        std::vector<long> x(m, -B);
        for (;;) {
            IntVector v = shift;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) v[j] += coords[i][j] * x[i];
            Real len = ctx.squared_length(v).value;
            if (len <= radius_sq) {
                lengths.push_back(len);
                for (auto c : x) boundary = boundary || c == B || c == -B;
            }
            std::size_t i = 0;
            while (i < m && x[i] == B) x[i++] = -B;
            if (i == m) break;
            ++x[i];
        }
        if (!boundary) return lengths.size();
        require(B < 1024, ErrorKind::ScaleTooLarge, "coefficient box too large");
    }
}

/// Minimum distance equals min(L_l) on positive instances, a closer pair on negative controls, and the point-count identity.
inline std::vector<SuiteResult> suite_tiny_packings(const VerifyOptions& o) {
    SuiteResult eq("tiny packings: minimum distance");
    SuiteResult neg("tiny packings: negative controls");
    SuiteResult cnt("tiny packings: point count");
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t pos_done = 0, neg_done = 0;
    for (std::size_t attempt = 0; attempt < 2000 && (pos_done < o.tiny_instances || neg_done < o.negative_controls);
         ++attempt) {
        bool negative = pos_done >= o.tiny_instances;
        auto inst = make_tiny_instance(rng, negative);
        if (!inst) continue;
        auto ctx = make_embedding(inst->K, 192);
        const Real top = inst->min_sqs.back();
        const Real radius = top * 5 / 4;
        PointSet ps = enumerate_packing_points(ctx, inst->P, inst->levels, inst->n, radius);
        ClosestPair cp = closest_pair(ps);
        std::string tag = describe(inst->P) + " n=" + std::to_string(inst->n) + " l=" + std::to_string(inst->levels.size());
        if (!negative) {
            eq.expect(cp.exact && cp.min_sq == top, "min distance " + cp.min_sq.str(12) + " != " + top.str(12) + " (" + tag + ")");
            // count identity: sum over codeword shifts of lattice points in the shifted ball
            const std::size_t m = inst->K->m;
            IdealHNF topI = ideal_power(inst->P.hnf, inst->levels.size());
            std::vector<std::vector<IntVector>> shifts{std::vector<IntVector>(inst->n, IntVector(m, 0))};
            for (const auto& lc : inst->levels) {
                GaloisField F(lc.code.q);
                std::vector<std::vector<IntVector>> next;
                for (const auto& s : shifts)
                    for (const auto& w : all_codewords(F, lc.code)) {
                        auto t = s;
                        for (std::size_t j = 0; j < inst->n; ++j)
                            for (std::size_t c = 0; c < m; ++c) t[j][c] += lc.alphabet.elements[w[j]][c];
                        next.push_back(std::move(t));
                    }
                shifts = std::move(next);
            }
            std::size_t expected = 0;
            for (const auto& s : shifts) {
                std::vector<std::vector<Real>> per(inst->n);
                for (std::size_t j = 0; j < inst->n; ++j) count_by_box(*ctx, topI.basis(), s[j], radius, per[j]);
                std::function<std::size_t(std::size_t, Real)> tuples = [&](std::size_t j, Real used) -> std::size_t {
                    if (j == inst->n) return 1;
                    std::size_t c = 0;
                    for (const auto& len : per[j])
                        if (used + len <= radius) c += tuples(j + 1, used + len);
                    return c;
                };
                expected += tuples(0, Real(192));
            }
            cnt.expect(expected == ps.points.size(), "point count " + std::to_string(ps.points.size()) +
                                                         " != " + std::to_string(expected) + " (" + tag + ")");
            ++pos_done;
        } else {
            neg.expect(cp.min_sq < top, "no pair closer than min_sq(L_l) (" + tag + ")");
            ++neg_done;
        }
    }
    eq.expect(pos_done >= o.tiny_instances, "only " + std::to_string(pos_done) + " positive instances generated");
    neg.expect(neg_done >= o.negative_controls, "only " + std::to_string(neg_done) + " negative controls generated");
    return {eq, neg, cnt};
}

/// Every suite in a fixed order.
inline std::vector<SuiteResult> run_all_suites(const VerifyOptions& o) {
    std::vector<SuiteResult> out;
    out.push_back(suite_determinant_law(o));
    out.push_back(suite_unit_minimum(o));
    out.push_back(suite_factorization(o));
    out.push_back(suite_norm_multiplicativity(o));
    out.push_back(suite_svp_oracle(o));
    out.push_back(suite_alphabets(o));
    for (auto& s : suite_tiny_packings(o)) out.push_back(std::move(s));
    return out;
}

}  // namespace idealpack

#endif
