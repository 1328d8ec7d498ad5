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
 * @file numfield.hpp
 * @brief Monogenic number fields K = Q[x]/(f) with O_K = Z[alpha].
 *
 * A field is accepted only with three certificates attached:
 *  - irreducibility: no integer root, and f irreducible modulo some prime p <= 100 with p not dividing disc(f)
 *    (or an explicit caller override);
 *  - signature (s, t): number of real roots from a Sturm chain;
 *  - maximality of Z[alpha]: Dedekind's criterion at every prime p with p^2 | disc(f).
 *
 * Elements are coordinate vectors over the power basis 1, alpha, ..., alpha^(m-1).
 */

#ifndef IDEALPACK_NUMFIELD_HPP
#define IDEALPACK_NUMFIELD_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "modp.hpp"
#include "polynomial.hpp"
#include "real.hpp"

namespace idealpack {

struct DedekindCheck {
    Integer p;
    bool maximal;
};

struct MaximalityCertificate {
    std::vector<DedekindCheck> checks;  // one per prime p with p^2 | disc(f)
};

struct IrreducibilityCertificate {
    std::optional<unsigned long> prime;  // f irreducible modulo this prime; empty when overridden
    bool overridden = false;
};

struct NumberField {
    IntPolynomial f;
    std::size_t m = 0;
    std::size_t s = 0;  // real embeddings
    std::size_t t = 0;  // complex-conjugate pairs
    Integer disc;       // disc(f) = D_K (Z[alpha] is maximal)
    MaximalityCertificate maximality;
    IrreducibilityCertificate irreducibility;

    Integer abs_disc() const { return ::abs(disc); }
};

using FieldRef = std::shared_ptr<const NumberField>;

/// Element of K over the power basis.
class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(std::vector<Rational> coords) : c_(std::move(coords)) {}
    static FieldElement zero(std::size_t m) { return FieldElement(std::vector<Rational>(m, 0)); }
    static FieldElement constant(std::size_t m, const Rational& v) {
        auto e = zero(m);
        e.c_[0] = v;
        return e;
    }
    static FieldElement from_integers(const IntVector& v) {
        std::vector<Rational> c;
        for (const auto& x : v) c.emplace_back(x);
        return FieldElement(std::move(c));
    }

    std::size_t size() const { return c_.size(); }
    const std::vector<Rational>& coords() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    bool is_integral() const {
        for (const auto& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    IntVector integer_coords() const {
        require(is_integral(), ErrorKind::NotIntegral, "element has non-integral coordinates");
        IntVector v;
        for (const auto& x : c_) v.push_back(x.get_num());
        return v;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require(a.size() == b.size(), ErrorKind::DimensionMismatch, "element sizes differ");
        FieldElement r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require(a.size() == b.size(), ErrorKind::DimensionMismatch, "element sizes differ");
        FieldElement r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

  private:
    std::vector<Rational> c_;
};

namespace numfield {

/// Reduce a coefficient vector (any length) modulo monic f, in place; result has length m.
template <class T>
void reduce_mod(std::vector<T>& v, const IntPolynomial& f) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    for (std::size_t k = v.size(); k-- > m;) {
        if (v[k] == 0) continue;
        T lead = v[k];
        for (std::size_t i = 0; i < m; ++i) v[k - m + i] -= lead * f[i];
        v[k] = 0;
    }
    v.resize(m, T(0));
}

/// Product in Z[x]/(f) for integer coordinate vectors.
inline IntVector multiply(const IntVector& a, const IntVector& b, const IntPolynomial& f) {
    std::vector<Integer> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    reduce_mod(prod, f);
    return prod;
}

/// alpha * a in Z[x]/(f).
inline IntVector multiply_by_generator(const IntVector& a, const IntPolynomial& f) {
    IntVector shifted(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) shifted[i + 1] = a[i];
    reduce_mod(shifted, f);
    return shifted;
}

inline IntPolynomial to_polynomial(const IntVector& v) { return IntPolynomial(v); }

/// Dedekind's criterion: is Z[alpha] maximal at p?
inline bool dedekind_maximal_at(const IntPolynomial& f, unsigned long p, std::uint64_t seed = 0x5eed) {
    FpPoly fbar = FpPoly::reduce(f, p);
    auto factors = modp::factor(fbar, seed);
    FpPoly g(p, {1}), h(p, {1});
    for (const auto& fac : factors) {
        g = g * fac.factor;
        for (unsigned i = 1; i < fac.multiplicity; ++i) h = h * fac.factor;
    }
    // F = (g h - f) / p over Z, with g, h lifted with coefficients in [0, p)
    IntPolynomial gl = g.lift(), hl = h.lift();
    std::vector<Integer> gh(gl.coefficients().size() + hl.coefficients().size(), 0);
    for (std::size_t i = 0; i < gl.coefficients().size(); ++i)
        for (std::size_t j = 0; j < hl.coefficients().size(); ++j) gh[i + j] += gl[i] * hl[j];
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) gh[i] -= f[i];
    Integer pp(p);
    for (auto& c : gh) {
        if (!mpz_divisible_p(c.get_mpz_t(), pp.get_mpz_t()))
            fail(ErrorKind::InvariantViolation, "g*h - f not divisible by p in Dedekind test");
        c /= pp;
    }
    FpPoly F = FpPoly::reduce(IntPolynomial(gh), p);
    FpPoly common = gcd(gcd(F, g), h);
    return common.degree() == 0;
}

/// Prime factors of |n| whose square divides n. Trial division to 10^6, then certified by primality and
/// perfect-square tests on the cofactor.
inline std::vector<Integer> square_prime_divisors(Integer n) {
    n = ::abs(n);
    std::vector<Integer> out;
    for (unsigned long d = 2; d <= 1000000 && Integer(d) * d <= n; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned k = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                n /= d;
                ++k;
            }
            if (k >= 2) out.emplace_back(d);
        }
    }
    if (n > 1 && !modp::is_prime(n)) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r = sqrt(n);
            if (modp::is_prime(r)) {
                out.push_back(r);
                return out;
            }
        }
        fail(ErrorKind::Unsupported, "cannot certify the square part of the discriminant cofactor " + n.get_str());
    }
    return out;
}

}  // namespace numfield

struct DefineOptions {
    bool assume_irreducible = false;  // skip the modular irreducibility certificate
    std::uint64_t seed = 0x5eed;
};

/// Validates f and builds the certified field.
inline NumberField define_field(const IntPolynomial& f, const DefineOptions& options = {}) {
    require(f.degree() >= 2, ErrorKind::InvalidArgument, "degree must be at least 2");
    require(f.is_monic(), ErrorKind::NotMonic, "leading coefficient of " + f.to_string() + " is not 1");
    NumberField K;
    K.f = f;
    K.m = static_cast<std::size_t>(f.degree());

    // integer roots divide the constant term and are bounded by the Cauchy bound
    if (f[0] == 0) fail(ErrorKind::Reducible, "x divides " + f.to_string());
    {
        Integer bound = ::abs(f[0]);
        Integer cauchy = 1;
        for (std::size_t i = 0; i + 1 < f.coefficients().size(); ++i)
            cauchy = std::max<Integer>(cauchy, Integer(::abs(f[i])) + 1);
        bound = std::min(bound, cauchy);
        require(bound <= 1000000, ErrorKind::Unsupported, "coefficients too large for the rational-root test");
        for (Integer r = 1; r <= bound; ++r) {
            if (!mpz_divisible_p(f[0].get_mpz_t(), r.get_mpz_t())) continue;
            for (const Integer& cand : {r, Integer(-r)})
                if (f.evaluate(cand) == 0)
                    fail(ErrorKind::Reducible, "x - (" + cand.get_str() + ") divides " + f.to_string());
        }
    }

    K.disc = poly::discriminant(f);
    require(K.disc != 0, ErrorKind::Reducible, "f has a repeated factor");

    if (options.assume_irreducible) {
        K.irreducibility.overridden = true;
    } else {
        for (unsigned long p = 2; p <= 100; ++p) {
            if (!modp::is_prime(Integer(p))) continue;
            if (mpz_divisible_ui_p(K.disc.get_mpz_t(), p)) continue;
            if (modp::is_irreducible(FpPoly::reduce(f, p))) {
                K.irreducibility.prime = p;
                break;
            }
        }
        if (!K.irreducibility.prime)
            fail(ErrorKind::IrreducibilityUnknown,
                 "no prime p <= 100 certifies irreducibility of " + f.to_string() + "; pass an override to accept it");
    }

    const int real_roots = poly::count_real_roots(f);
    K.s = static_cast<std::size_t>(real_roots);
    K.t = (K.m - K.s) / 2;
    require(K.s + 2 * K.t == K.m, ErrorKind::InvariantViolation, "signature does not add up to the degree");

    for (const auto& p : numfield::square_prime_divisors(K.disc)) {
        require(p < Integer(static_cast<unsigned long>(modp::kMaxPrime)), ErrorKind::Unsupported,
                "prime " + p.get_str() + " too large for the Dedekind test");
        bool ok = numfield::dedekind_maximal_at(f, p.get_ui(), options.seed);
        K.maximality.checks.push_back({p, ok});
        if (!ok)
            fail(ErrorKind::NotMaximal,
                 "Z[alpha] is not maximal at p=" + p.get_str() + " (Dedekind criterion fails); f=" + f.to_string());
    }
    return K;
}

inline FieldRef make_field(const IntPolynomial& f, const DefineOptions& options = {}) {
    return std::make_shared<const NumberField>(define_field(f, options));
}

/// Product reduced modulo f.
inline FieldElement element_product(const NumberField& K, const FieldElement& a, const FieldElement& b) {
    require(a.size() == K.m && b.size() == K.m, ErrorKind::DimensionMismatch, "element length differs from degree");
    std::vector<Rational> prod(2 * K.m, 0);
    for (std::size_t i = 0; i < K.m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < K.m; ++j) prod[i + j] += a[i] * b[j];
    }
    numfield::reduce_mod(prod, K.f);
    return FieldElement(std::move(prod));
}

/// Norm_{K/Q}(a) = res(f, a) for monic f.
inline Rational element_norm(const NumberField& K, const FieldElement& a) {
    require(a.size() == K.m, ErrorKind::DimensionMismatch, "element length differs from degree");
    if (a.is_zero()) return 0;
    Integer den = 1;
    for (const auto& c : a.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num;
    for (const auto& c : a.coords()) num.push_back(Integer(c * den));
    Integer r = poly::resultant(K.f, IntPolynomial(std::move(num)));
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), K.m);
    Rational out(r, scale);
    out.canonicalize();
    return out;
}

}  // namespace idealpack

#endif
