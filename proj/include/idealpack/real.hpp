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
 * @file real.hpp
 * @brief Arbitrary-precision binary floats (MPFR) and exact integers/rationals (GMP).
 *
 * `Real` is a value type owning one `mpfr_t`. Every value carries its own precision in bits; binary operations
 * produce a result at the larger of the two operand precisions, rounded to nearest. No global precision state is
 * consulted, so values built at different precisions can be mixed safely from several threads.
 *
 * `Certified` pairs a value with an absolute error bound and is used wherever a quantity feeds an integer decision
 * (ceilings of minima ratios).
 */

#ifndef IDEALPACK_REAL_HPP
#define IDEALPACK_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace idealpack {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr long kDefaultPrecision = 192;

class Real {
  public:
    explicit Real(long precision = kDefaultPrecision) {
        mpfr_init2(v_, clamp(precision));
        mpfr_set_zero(v_, 1);
    }
    Real(long value, long precision) {
        mpfr_init2(v_, clamp(precision));
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(const Integer& value, long precision) {
        mpfr_init2(v_, clamp(precision));
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Rational& value, long precision) {
        mpfr_init2(v_, clamp(precision));
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    static Real from_double(double value, long precision = kDefaultPrecision) {
        Real r(precision);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }
    static Real from_string(const std::string& text, long precision) {
        Real r(precision);
        mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN);
        return r;
    }
    static Real infinity(long precision = kDefaultPrecision) {
        Real r(precision);
        mpfr_set_inf(r.v_, 1);
        return r;
    }
    static Real pi(long precision) {
        Real r(precision);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^exponent, exact.
    static Real exp2i(long exponent, long precision) {
        Real r(precision);
        mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
        return r;
    }

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }

    /// Same value re-rounded to `bits`.
    Real with_precision(long bits) const {
        Real r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    /// Binary exponent e with 0.5 <= |x|/2^e < 1; LONG_MIN for zero.
    long exponent() const noexcept { return is_zero() ? LONG_MIN : static_cast<long>(mpfr_get_exp(v_)); }

    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    Integer round() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }
    Integer floor() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }
    Integer ceil() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
        return z;
    }

    /// Decimal rendering with `digits` significant digits.
    std::string str(int digits = 20) const {
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        if (mpfr_nan_p(v_)) return "nan";
        char* buffer = nullptr;
        mpfr_asprintf(&buffer, "%.*Rg", digits, v_);
        std::string out(buffer);
        mpfr_free_str(buffer);
        return out;
    }
    /// Fixed-point rendering with `decimals` digits after the point.
    std::string fixed(int decimals) const {
        if (!is_finite()) return str();
        char* buffer = nullptr;
        mpfr_asprintf(&buffer, "%.*Rf", decimals, v_);
        std::string out(buffer);
        mpfr_free_str(buffer);
        return out;
    }

    Real& operator+=(const Real& o) {
        widen(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        widen(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        widen(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        widen(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator+=(long o) {
        mpfr_add_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(long o) {
        mpfr_sub_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long o) {
        mpfr_mul_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long o) {
        mpfr_div_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Integer& o) {
        mpfr_mul_z(v_, v_, o.get_mpz_t(), MPFR_RNDN);
        return *this;
    }

    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator+(Real a, long b) { return a += b; }
    friend Real operator-(Real a, long b) { return a -= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }
    friend Real operator*(long a, Real b) { return b *= a; }
    friend Real operator+(long a, Real b) { return b += a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(Real a, const Integer& b) { return a *= b; }
    friend Real operator*(const Integer& a, Real b) { return b *= a; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

  private:
    static mpfr_prec_t clamp(long precision) {
        return static_cast<mpfr_prec_t>(std::max<long>(precision, MPFR_PREC_MIN));
    }
    void widen(const Real& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }

    mpfr_t v_;
};

namespace detail {
template <class F>
Real unary(const Real& x, F&& f) {
    Real r(x.precision());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real log(const Real& x) { return detail::unary(x, mpfr_log); }
inline Real log2(const Real& x) { return detail::unary(x, mpfr_log2); }
inline Real log1p(const Real& x) { return detail::unary(x, mpfr_log1p); }
inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp); }
inline Real sin(const Real& x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::unary(x, mpfr_cos); }
inline Real lgamma(const Real& x) { return detail::unary(x, mpfr_lngamma); }
inline Real square(const Real& x) { return detail::unary(x, mpfr_sqr); }

inline Real pow(const Real& x, long k) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
/// x * 2^k, exact.
inline Real ldexp(const Real& x, long k) {
    Real r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

/// A constant of the same precision as `like`; lets numeric templates run on `double` and `Real`.
inline Real constant_like(const Real& like, long value) { return Real(value, like.precision()); }
inline double constant_like(double, long value) { return static_cast<double>(value); }

/// Complex number over `Real`.
struct Complex {
    Real re;
    Real im;

    explicit Complex(long precision = kDefaultPrecision) : re(precision), im(precision) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    long precision() const { return std::max(re.precision(), im.precision()); }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    Complex conj() const { return Complex(re, -im); }
    /// |z|^2
    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
};

/// A value together with an absolute error bound: the true quantity lies in [value - error, value + error].
struct Certified {
    Real value;
    Real error;

    Real lower() const { return value - error; }
    Real upper() const { return value + error; }
    Real relative_error() const { return value.is_zero() ? Real::infinity() : error / abs(value); }
};

/// Enclosure of a/b for positive intervals.
inline Certified certified_ratio(const Certified& a, const Certified& b) {
    Real lo = a.lower() / b.upper();
    Real hi = a.upper() / (b.lower());
    Real mid = (lo + hi) / 2;
    return {a.value / b.value, max(abs(hi - mid), abs(mid - lo)) + abs(mid - a.value / b.value)};
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntVector = std::vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RealVector = std::vector<Real>;
using RealMatrix = Matrix<Real>;

inline long ceil_log2(const Integer& x) {
    if (x <= 1) return 0;
    Integer y = x - 1;
    return static_cast<long>(mpz_sizeinbase(y.get_mpz_t(), 2));
}

}  // namespace idealpack

#endif
