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

#ifndef IDEALPACK_POLYNOMIAL_HPP
#define IDEALPACK_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "real.hpp"

namespace idealpack {

/// Dense univariate polynomial over Z, constant term first. The zero polynomial has no coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }
    IntPolynomial(std::initializer_list<long> coefficients) {
        for (long v : coefficients) c_.emplace_back(v);
        trim();
    }

    /// Parses "c0,c1,...,cm" (constant term first).
    static IntPolynomial parse(std::string_view text) {
        std::vector<Integer> coeffs;
        std::string token;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, token, ',')) {
            auto first = token.find_first_not_of(" \t");
            auto last = token.find_last_not_of(" \t");
            if (first == std::string::npos) fail(ErrorKind::ParseError, "empty coefficient in '" + std::string(text) + "'");
            token = token.substr(first, last - first + 1);
            Integer v;
            if (v.set_str(token[0] == '+' ? token.substr(1) : token, 10) != 0)
                fail(ErrorKind::ParseError, "bad coefficient '" + token + "'");
            coeffs.push_back(v);
        }
        if (coeffs.empty()) fail(ErrorKind::ParseError, "empty polynomial");
        return IntPolynomial(std::move(coeffs));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    Integer coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

    Integer evaluate(const Integer& x) const {
        Integer acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Complex evaluate(const Complex& z) const {
        Complex acc(z.precision());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * z;
            acc.re += Real(*it, z.precision());
        }
        return acc;
    }

    IntPolynomial derivative() const {
        std::vector<Integer> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return IntPolynomial(std::move(d));
    }

    /// Sum of absolute values of the coefficients.
    Integer l1_norm() const {
        Integer s = 0;
        for (const auto& v : c_) s += ::abs(v);
        return s;
    }

    /// Comma-separated coefficients, constant term first.
    std::string to_csv() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ',';
            out += c_[i].get_str();
        }
        return out.empty() ? "0" : out;
    }

    /// Human notation, highest degree first, variable `x`.
    std::string to_string(std::string_view var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Integer& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            bool neg = v < 0;
            Integer a = ::abs(v);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0 || a != 1) out += a.get_str();
            if (i >= 1) out += std::string(var);
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Rational polynomials as plain coefficient vectors (constant term first, trimmed).
using QPoly = std::vector<Rational>;

namespace poly {

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly to_rational(const IntPolynomial& f) {
    QPoly p;
    for (const auto& c : f.coefficients()) p.emplace_back(c);
    return p;
}

/// Remainder of a modulo b (b nonzero).
inline QPoly rem(QPoly a, const QPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline int sign_at_infinity(const QPoly& p, bool positive) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

/// Number of distinct real roots via a Sturm chain (exact rational arithmetic).
inline int count_real_roots(const IntPolynomial& f) {
    std::vector<QPoly> chain;
    chain.push_back(to_rational(f));
    chain.push_back(to_rational(f.derivative()));
    while (!chain.back().empty()) {
        QPoly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool positive) {
        int count = 0, last = 0;
        for (const auto& p : chain) {
            int s = sign_at_infinity(p, positive);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Resultant res(f, g) = lc(f)^deg(g) * prod g(roots of f), via the Sylvester matrix.
inline Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const long m = f.degree(), n = g.degree();
    if (n == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    if (m == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    IntMatrix s(size, IntVector(size, 0));
    // n rows of f coefficients, m rows of g coefficients; highest degree first.
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) s[r][r + i] = f[static_cast<std::size_t>(m - i)];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) s[n + r][r + i] = g[static_cast<std::size_t>(n - i)];
    return determinant(std::move(s));
}

/// disc(f) = (-1)^(m(m-1)/2) res(f, f') for monic f.
inline Integer discriminant(const IntPolynomial& f) {
    const long m = f.degree();
    Integer r = resultant(f, f.derivative());
    if (((m * (m - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

}  // namespace poly
}  // namespace idealpack

#endif
