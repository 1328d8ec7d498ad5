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
 * @file roots.hpp
 * @brief Certified complex roots of the defining polynomial.
 *
 * Aberth iteration at 128 bits from a perturbed circle, then Newton at the working precision. Each root z_i is
 * certified by the inclusion radius r_i = m |f(z_i)| / prod_{j != i} |z_i - z_j|; pairwise disjoint disks each hold
 * exactly one root.
 */

#ifndef IDEALPACK_ROOTS_HPP
#define IDEALPACK_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "numfield.hpp"
#include "polynomial.hpp"
#include "real.hpp"

namespace idealpack {

/// Roots in canonical order: s real roots ascending, then for each complex pair the representative with positive
/// imaginary part followed by its conjugate, pairs by ascending real part.
struct RootSet {
    long precision = 0;  // bits carried by every root
    std::size_t s = 0, t = 0;
    std::vector<Complex> roots;
    Real radius;  // largest certified inclusion radius

    const Real& real_root(std::size_t i) const { return roots[i].re; }
    const Complex& pair_root(std::size_t j) const { return roots[s + 2 * j]; }
};

namespace roots_detail {

inline Complex eval_ratio(const IntPolynomial& f, const IntPolynomial& df, const Complex& z) {
    return f.evaluate(z) / df.evaluate(z);
}

/// Bound on sum |c_k| |z|^k, used for evaluation rounding error.
inline Real magnitude_sum(const IntPolynomial& f, const Real& abs_z) {
    Real acc(abs_z.precision());
    for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it)
        acc = acc * abs_z + Real(Integer(::abs(*it)), abs_z.precision());
    return acc;
}

inline std::vector<Complex> aberth(const IntPolynomial& f, long bits) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    IntPolynomial df = f.derivative();
    // Fujiwara-type radius for the starting circle
    double radius = 0;
    for (std::size_t k = 0; k < m; ++k) {
        double c = std::abs(f[k].get_d());
        if (c > 0) radius = std::max(radius, 2 * std::pow(c, 1.0 / static_cast<double>(m - k)));
    }
    radius = std::max(radius, 1.0);
    std::vector<Complex> z;
    Real pi = Real::pi(bits);
    for (std::size_t k = 0; k < m; ++k) {
        Real angle = pi * 2 * static_cast<long>(k) / static_cast<long>(m) + Real::from_double(0.4, bits);
        Real rad = Real::from_double(radius * (1.0 + 0.01 * static_cast<double>(k)), bits);
        z.emplace_back(rad * cos(angle), rad * sin(angle));
    }
    const Real tol = Real::exp2i(-(bits - 24), bits);
    for (int iter = 0; iter < 1000; ++iter) {
        Real worst(bits);
        for (std::size_t i = 0; i < m; ++i) {
            Complex ratio = eval_ratio(f, df, z[i]);
            Complex sum(bits);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) sum += Complex(Real(1, bits), Real(0, bits)) / (z[i] - z[j]);
            Complex denom = Complex(Real(1, bits), Real(0, bits)) - ratio * sum;
            Complex w = ratio / denom;
            z[i] -= w;
            Real rel = w.abs() / (z[i].abs() + 1);
            if (rel > worst) worst = rel;
        }
        if (worst.is_finite() && worst < tol) return z;
    }
    fail(ErrorKind::PrecisionExhausted, "root iteration did not converge for " + f.to_string());
}

inline Real newton_real(const IntPolynomial& f, const IntPolynomial& df, Real x, long bits) {
    x = x.with_precision(bits);
    const Real tol = Real::exp2i(-(bits - 8), bits);
    for (int iter = 0; iter < 200; ++iter) {
        Real fx(bits), dfx(bits);
        for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) fx = fx * x + Real(*it, bits);
        for (auto it = df.coefficients().rbegin(); it != df.coefficients().rend(); ++it)
            dfx = dfx * x + Real(*it, bits);
        Real step = fx / dfx;
        x -= step;
        if (abs(step) <= tol * (abs(x) + 1)) return x;
    }
    fail(ErrorKind::PrecisionExhausted, "Newton refinement of a real root stalled");
}

inline Complex newton_complex(const IntPolynomial& f, const IntPolynomial& df, Complex z, long bits) {
    z = Complex(z.re.with_precision(bits), z.im.with_precision(bits));
    const Real tol = Real::exp2i(-(bits - 8), bits);
    for (int iter = 0; iter < 200; ++iter) {
        Complex step = eval_ratio(f, df, z);
        z -= step;
        if (step.abs() <= tol * (z.abs() + 1)) return z;
    }
    fail(ErrorKind::PrecisionExhausted, "Newton refinement of a complex root stalled");
}

}  // namespace roots_detail

/// All m roots of f, each certified within 2^(-precision_bits/2). Roots are carried at precision_bits + 64.
inline RootSet complex_roots(const NumberField& K, long precision_bits) {
    require(precision_bits >= 64, ErrorKind::InvalidArgument, "root precision must be at least 64 bits");
    const IntPolynomial& f = K.f;
    const IntPolynomial df = f.derivative();
    const std::size_t m = K.m;
    const long work = precision_bits + 64;

    std::vector<Complex> approx = roots_detail::aberth(f, 128);
    std::sort(approx.begin(), approx.end(), [](const Complex& a, const Complex& b) { return abs(a.im) < abs(b.im); });

    RootSet out;
    out.precision = work;
    out.s = K.s;
    out.t = K.t;
    std::vector<Real> reals;
    for (std::size_t i = 0; i < K.s; ++i) reals.push_back(roots_detail::newton_real(f, df, approx[i].re, work));
    std::vector<Complex> reps;
    for (std::size_t i = K.s; i < m; ++i)
        if (approx[i].im > 0) reps.push_back(roots_detail::newton_complex(f, df, approx[i], work));
    if (reps.size() != K.t) fail(ErrorKind::PrecisionExhausted, "could not separate conjugate root pairs");
    for (auto& z : reps)
        if (z.im < 0) z = z.conj();
    std::sort(reals.begin(), reals.end());
    std::sort(reps.begin(), reps.end(), [](const Complex& a, const Complex& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    for (auto& x : reals) out.roots.emplace_back(x, Real(0, work));
    for (auto& z : reps) {
        out.roots.push_back(z);
        out.roots.push_back(z.conj());
    }

    // inclusion disks, padded for the rounding error of evaluating f
    std::vector<Real> radii;
    const Real eps = Real::exp2i(-(work - 4), work) * static_cast<long>(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Real num = f.evaluate(out.roots[i]).abs() + eps * roots_detail::magnitude_sum(f, out.roots[i].abs());
        Real den(1, work);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) den *= (out.roots[i] - out.roots[j]).abs();
        if (den.is_zero()) fail(ErrorKind::PrecisionExhausted, "coincident root approximations");
        radii.push_back(num * static_cast<long>(m) / den * (1 + Real::exp2i(-(work - 16), work)));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if ((out.roots[i] - out.roots[j]).abs() <= radii[i] + radii[j])
                fail(ErrorKind::PrecisionExhausted, "root inclusion disks overlap");
    out.radius = Real(work);
    for (const auto& r : radii)
        if (r > out.radius) out.radius = r;
    if (out.radius > Real::exp2i(-(precision_bits / 2), work))
        fail(ErrorKind::PrecisionExhausted, "roots not certified to 2^-" + std::to_string(precision_bits / 2));
    return out;
}

}  // namespace idealpack

#endif
