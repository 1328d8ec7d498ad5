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
 * @file ideal.hpp
 * @brief Integral ideals of a monogenic order in Hermite normal form, prime decomposition, alphabet sets.
 *
 * An ideal is stored as the row HNF of its Z-basis over the power basis. Products are formed from all pairwise
 * products of basis rows and reduced modulo a(I) * a(J), where a(.) is the smallest positive integer of the ideal;
 * a(I) a(J) lies in IJ, so entries never exceed it. Prime ideals come from Dedekind-Kummer:
 * p O_K = prod (p, g_i(alpha))^(e_i) where f = prod g_i^(e_i) mod p.
 */

#ifndef IDEALPACK_IDEAL_HPP
#define IDEALPACK_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hnf.hpp"
#include "modp.hpp"
#include "numfield.hpp"

namespace idealpack {

class IdealHNF {
  public:
    IdealHNF(FieldRef field, IntMatrix basis) : field_(std::move(field)), basis_(std::move(basis)) {
        require(field_ != nullptr, ErrorKind::InvalidArgument, "ideal without a field");
        require(basis_.size() == field_->m, ErrorKind::DimensionMismatch, "HNF must be m x m");
        min_integer_ = hnf::smallest_first_axis_multiple(basis_);
    }

    static IdealHNF unit(FieldRef field) {
        const std::size_t m = field->m;
        IntMatrix id(m, IntVector(m, 0));
        for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
        return IdealHNF(std::move(field), std::move(id));
    }

    const FieldRef& field() const { return field_; }
    const NumberField& K() const { return *field_; }
    const IntMatrix& basis() const { return basis_; }
    std::size_t degree() const { return basis_.size(); }
    /// Smallest positive rational integer contained in the ideal.
    const Integer& min_integer() const { return min_integer_; }

    friend bool operator==(const IdealHNF& a, const IdealHNF& b) {
        return a.field_->f == b.field_->f && a.basis_ == b.basis_;
    }

  private:
    FieldRef field_;
    IntMatrix basis_;
    Integer min_integer_;
};

struct PrimeIdealFactor {
    Integer p;
    IntPolynomial g;  // monic lift (coefficients in [0, p)) of an irreducible factor of f mod p
    unsigned e = 1;   // ramification index
    unsigned f_deg = 1;
    Integer q;  // p^f_deg
    IdealHNF hnf;

    /// The second generator g(alpha) as an element of O_K.
    FieldElement generator() const {
        std::vector<Rational> c(hnf.degree(), 0);
        for (std::size_t i = 0; i < g.coefficients().size(); ++i) {
            if (i < c.size()) {
                c[i] = g[i];
            }
        }
        // g has degree f_deg <= m; if f_deg == m the element is g reduced mod f
        if (g.coefficients().size() > c.size()) {
            std::vector<Rational> full;
            for (const auto& v : g.coefficients()) full.emplace_back(v);
            numfield::reduce_mod(full, hnf.K().f);
            c = full;
        }
        return FieldElement(std::move(c));
    }
};

/// Alphabet S_i: q elements of p^i, pairwise incongruent modulo p^(i+1), first element 0.
struct AlphabetSet {
    unsigned level = 0;
    std::vector<IntVector> elements;
};

/// HNF of the ideal generated by p and g (as a Z-module: p alpha^j, g alpha^j).
inline IdealHNF hnf_from_generators(const FieldRef& K, const Integer& p, const FieldElement& g) {
    const std::size_t m = K->m;
    require(g.size() == m, ErrorKind::DimensionMismatch, "generator length differs from degree");
    IntVector gi = g.integer_coords();
    bool g_zero = std::all_of(gi.begin(), gi.end(), [](const Integer& x) { return x == 0; });
    require(!(p == 0 && g_zero), ErrorKind::ZeroIdeal, "both generators are zero");
    Integer modulus = ::abs(p);
    if (modulus == 0) modulus = ::abs(element_norm(*K, g).get_num());
    IntMatrix gens;
    IntVector row = gi;
    for (std::size_t j = 0; j < m; ++j) {
        gens.push_back(row);
        row = numfield::multiply_by_generator(row, K->f);
    }
    return IdealHNF(K, hnf::hnf_modular(std::move(gens), modulus, m));
}

inline IdealHNF ideal_product(const IdealHNF& a, const IdealHNF& b) {
    require(a.K().f == b.K().f, ErrorKind::InvalidArgument, "ideals over different fields");
    const auto& f = a.K().f;
    IntMatrix gens;
    gens.reserve(a.degree() * b.degree());
    for (const auto& ra : a.basis())
        for (const auto& rb : b.basis()) gens.push_back(numfield::multiply(ra, rb, f));
    return IdealHNF(a.field(), hnf::hnf_modular(std::move(gens), a.min_integer() * b.min_integer(), a.degree()));
}

inline IdealHNF ideal_power(const IdealHNF& ideal, unsigned long k) {
    IdealHNF result = IdealHNF::unit(ideal.field());
    if (k == 0) return result;
    IdealHNF base = ideal;
    bool first = true;
    while (k > 0) {
        if (k & 1UL) {
            result = first ? base : ideal_product(result, base);
            first = false;
        }
        k >>= 1;
        if (k) base = ideal_product(base, base);
    }
    return result;
}

inline Integer ideal_norm(const IdealHNF& ideal) { return hnf::determinant(ideal.basis()); }

inline bool contains(const IdealHNF& ideal, const IntVector& x) {
    require(x.size() == ideal.degree(), ErrorKind::DimensionMismatch, "element length differs from degree");
    bool ok = false;
    hnf::solve_triangular(ideal.basis(), x, &ok);
    return ok;
}

inline bool contains(const IdealHNF& ideal, const FieldElement& x) {
    require(x.is_integral(), ErrorKind::NotIntegral, "membership is only defined for integral elements");
    return contains(ideal, x.integer_coords());
}

/// Prime ideals above p, ordered by (residue degree, g constant-term-first).
inline std::vector<PrimeIdealFactor> factor_prime(const FieldRef& K, const Integer& p, std::uint64_t seed = 0x5eed) {
    require(modp::is_prime(p), ErrorKind::NotPrime, p.get_str() + " is not prime");
    require(p < Integer(static_cast<unsigned long>(modp::kMaxPrime)), ErrorKind::Unsupported, "prime too large");
    const unsigned long pp = p.get_ui();
    auto factors = modp::factor(FpPoly::reduce(K->f, pp), seed);
    std::vector<PrimeIdealFactor> out;
    for (const auto& fac : factors) {
        IntPolynomial g = fac.factor.lift();
        std::vector<Rational> coords(K->m, 0);
        if (static_cast<std::size_t>(g.degree()) < K->m) {
            for (std::size_t i = 0; i < g.coefficients().size(); ++i) coords[i] = g[i];
        } else {
            // inert with residue degree m: g = f mod p, so g(alpha) is divisible by p
            std::vector<Rational> full;
            for (const auto& v : g.coefficients()) full.emplace_back(v);
            numfield::reduce_mod(full, K->f);
            coords = full;
        }
        IdealHNF h = hnf_from_generators(K, p, FieldElement(coords));
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(g.degree()));
        require(ideal_norm(h) == q, ErrorKind::InvariantViolation, "prime ideal norm differs from p^f");
        out.push_back({p, g, fac.multiplicity, static_cast<unsigned>(g.degree()), q, std::move(h)});
    }
    unsigned long total = 0;
    for (const auto& P : out) total += static_cast<unsigned long>(P.e) * P.f_deg;
    require(total == K->m, ErrorKind::InvariantViolation, "sum of e*f differs from the degree");
    return out;
}

/// Selects the prime above p whose HNF equals that of (p, g).
inline PrimeIdealFactor prime_from_generators(const FieldRef& K, const Integer& p, const FieldElement& g,
                                              std::uint64_t seed = 0x5eed) {
    IdealHNF target = hnf_from_generators(K, p, g);
    for (auto& P : factor_prime(K, p, seed))
        if (P.hnf == target) return P;
    fail(ErrorKind::InvalidArgument, "(" + p.get_str() + ", g) is not a prime ideal above " + p.get_str());
}

/// Residue representatives {h(alpha) : deg h < f_deg, coefficients in [0, p)}, indexed by the base-p digits of
/// their coefficients (constant term least significant). Index 0 is 0.
inline std::vector<IntVector> residue_representatives(const PrimeIdealFactor& P) {
    const std::size_t m = P.hnf.degree();
    const unsigned long p = P.p.get_ui();
    const unsigned long count = P.q.get_ui();
    std::vector<IntVector> reps;
    reps.reserve(count);
    for (unsigned long idx = 0; idx < count; ++idx) {
        IntVector v(m, 0);
        unsigned long rest = idx;
        for (unsigned d = 0; d < P.f_deg; ++d) {
            v[d] = rest % p;
            rest /= p;
        }
        reps.push_back(std::move(v));
    }
    return reps;
}

inline AlphabetSet alphabet_set(const PrimeIdealFactor& P, unsigned level) {
    require(P.q.fits_ulong_p() && P.q <= 1u << 20, ErrorKind::Unsupported, "residue field too large for an alphabet");
    IdealHNF here = ideal_power(P.hnf, level);
    IdealHNF next = ideal_product(here, P.hnf);
    const IntVector* pi = nullptr;
    for (const auto& row : here.basis()) {
        if (!contains(next, row)) {
            pi = &row;
            break;
        }
    }
    if (pi == nullptr) fail(ErrorKind::DegenerateLevel, "no basis row of p^i escapes p^(i+1)");
    AlphabetSet S;
    S.level = level;
    for (const auto& r : residue_representatives(P)) S.elements.push_back(numfield::multiply(*pi, r, P.hnf.K().f));
    return S;
}

}  // namespace idealpack

#endif
