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
 * @file modp.hpp
 * @brief Polynomials over a prime field F_p and their factorization.
 *
 * Factorization is the classical pipeline: squarefree decomposition (Yun, with p-th root extraction for
 * characteristic-p derivatives), distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
 * The equal-degree step is randomized; callers pass a seed and the returned factors are sorted, so the output
 * does not depend on the random path taken.
 */

#ifndef IDEALPACK_MODP_HPP
#define IDEALPACK_MODP_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace idealpack {

class FpPoly {
  public:
    using Coeff = std::uint64_t;

    explicit FpPoly(Coeff p) : p_(p) {}
    FpPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& v : c_) v %= p_;
        trim();
    }
    static FpPoly reduce(const IntPolynomial& f, Coeff p) {
        std::vector<Coeff> c;
        Integer pp(static_cast<unsigned long>(p));
        for (const auto& v : f.coefficients()) {
            Integer r = v % pp;
            if (r < 0) r += pp;
            c.push_back(r.get_ui());
        }
        return FpPoly(p, std::move(c));
    }
    static FpPoly monomial(Coeff p, std::size_t degree, Coeff coeff = 1) {
        std::vector<Coeff> c(degree + 1, 0);
        c[degree] = coeff;
        return FpPoly(p, std::move(c));
    }

    Coeff modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<Coeff>& coefficients() const { return c_; }
    Coeff coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Coeff lead() const { return c_.empty() ? 0 : c_.back(); }

    /// Lift to Z with coefficients in [0, p).
    IntPolynomial lift() const {
        std::vector<Integer> c;
        for (auto v : c_) c.emplace_back(static_cast<unsigned long>(v));
        return IntPolynomial(std::move(c));
    }

    Coeff mul(Coeff a, Coeff b) const { return (a * b) % p_; }
    Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
    Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
    Coeff pow(Coeff a, std::uint64_t e) const {
        Coeff r = 1 % p_;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Coeff inverse(Coeff a) const {
        require(a % p_ != 0, ErrorKind::DomainError, "inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    FpPoly monic() const {
        if (c_.empty()) return *this;
        Coeff inv = inverse(lead());
        FpPoly r(*this);
        for (auto& v : r.c_) v = mul(v, inv);
        return r;
    }

    FpPoly derivative() const {
        std::vector<Coeff> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul(c_[i], i % p_));
        return FpPoly(p_, std::move(d));
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.add(a.coefficient(i), b.coefficient(i));
        return FpPoly(a.p_, std::move(c));
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.sub(a.coefficient(i), b.coefficient(i));
        return FpPoly(a.p_, std::move(c));
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = a.add(c[i + j], a.mul(a.c_[i], b.c_[j]));
        return FpPoly(a.p_, std::move(c));
    }

    /// (quotient, remainder) of a by b.
    friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
        require(!b.is_zero(), ErrorKind::DomainError, "polynomial division by zero");
        FpPoly r(a);
        if (a.degree() < b.degree()) return {FpPoly(a.p_), r};
        std::vector<Coeff> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        Coeff inv = a.inverse(b.lead());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Coeff factor = a.mul(r.lead(), inv);
            q[shift] = factor;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] = a.sub(r.c_[shift + i], a.mul(factor, b.c_[i]));
            r.trim();
        }
        return {FpPoly(a.p_, std::move(q)), r};
    }
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

    friend FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// base^e mod modulus.
    friend FpPoly powmod(FpPoly base, Integer e, const FpPoly& modulus) {
        FpPoly result(base.p_, {1});
        result = result % modulus;
        base = base % modulus;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % modulus;
            base = (base * base) % modulus;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Constant-term-first lexicographic order on coefficient vectors of equal degree; lower degree first.
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Coeff p_;
    std::vector<Coeff> c_;
};

struct FpFactor {
    FpPoly factor;  // monic irreducible
    unsigned multiplicity;
};

namespace modp {

/// Maximum supported characteristic (products of residues must fit in 64 bits).
inline constexpr std::uint64_t kMaxPrime = (1ULL << 31);

inline bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

/// p-th root of a polynomial whose derivative vanishes (only exponents divisible by p occur).
inline FpPoly pth_root(const FpPoly& f) {
    const auto p = f.modulus();
    std::vector<FpPoly::Coeff> c;
    for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
    return FpPoly(p, std::move(c));  // a^p = a in F_p
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<std::pair<FpPoly, unsigned>> squarefree(const FpPoly& f_in) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    const auto p = f_in.modulus();
    FpPoly f = f_in.monic();
    if (f.degree() < 1) return out;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, e] : squarefree(pth_root(f))) out.emplace_back(g, e * static_cast<unsigned>(p));
        return out;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree(pth_root(c.monic()))) out.emplace_back(g, e * static_cast<unsigned>(p));
    }
    return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: (product of all degree-d factors, d).
inline std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    const auto p = f.modulus();
    FpPoly x = FpPoly::monomial(p, 1);
    FpPoly h = x % f;
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
inline void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f.monic());
        return;
    }
    const auto p = f.modulus();
    std::uniform_int_distribution<FpPoly::Coeff> coeff(0, p - 1);
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    for (;;) {
        std::vector<FpPoly::Coeff> c(static_cast<std::size_t>(f.degree()));
        for (auto& v : c) v = coeff(rng);
        FpPoly a(p, std::move(c));
        if (a.degree() < 1) continue;
        FpPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
        FpPoly b(p);
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(kd-1)) with kd = deg f
            FpPoly t = a % f;
            b = t;
            for (long i = 1; i < f.degree(); ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            b = powmod(a, (q - 1) / 2, f) - FpPoly(p, {1});
        }
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

/// Complete factorization of a nonzero polynomial into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients constant-term-first).
inline std::vector<FpFactor> factor(const FpPoly& f, std::uint64_t seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    std::vector<FpFactor> out;
    for (auto& [part, mult] : squarefree(f)) {
        for (auto& [block, d] : distinct_degree(part)) {
            std::vector<FpPoly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& g : pieces) out.push_back({g, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    return out;
}

/// Rabin's irreducibility test for a monic polynomial of degree n >= 1.
inline bool is_irreducible(const FpPoly& f_in) {
    FpPoly f = f_in.monic();
    const long n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const auto p = f.modulus();
    FpPoly x = FpPoly::monomial(p, 1);
    std::vector<long> prime_divisors;
    long m = n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_divisors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_divisors.push_back(m);
    for (long r : prime_divisors) {
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n / r));
        FpPoly h = powmod(x, e, f) - x;
        if (gcd(f, h).degree() > 0) return false;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n));
    return ((powmod(x, e, f) - x) % f).is_zero();
}

}  // namespace modp
}  // namespace idealpack

#endif
