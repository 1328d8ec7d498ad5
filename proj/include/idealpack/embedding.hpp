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
 * @file embedding.hpp
 * @brief Canonical embedding tau: K -> R^m and ideal lattices L_I = tau(I).
 *
 * tau(x) = (rho_1(x), ..., rho_s(x), sqrt2 Re sigma_1(x), sqrt2 Im sigma_1(x), ..., sqrt2 Im sigma_t(x)), so
 * |tau(x)|^2 is the sum of |sigma(x)|^2 over all m complex embeddings.
 *
 * When complex conjugation restricts to an automorphism c of K (totally real fields, CM fields), the same quantity
 * equals Tr(x c(x)), an integer quadratic form on Z[alpha]. The context detects this and keeps the integer Gram
 * matrix so squared lengths of lattice vectors are exact.
 */

#ifndef IDEALPACK_EMBEDDING_HPP
#define IDEALPACK_EMBEDDING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "numfield.hpp"
#include "real.hpp"
#include "roots.hpp"

namespace idealpack {

namespace linalg {

/// Determinant by Gaussian elimination with partial pivoting.
inline Real determinant(RealMatrix a, long precision) {
    const std::size_t n = a.size();
    Real det(1, precision);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
        if (a[piv][c].is_zero()) return Real(precision);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Real factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

/// Solves the complex system A x = b; A is consumed.
inline std::vector<Complex> solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (a[r][c].norm() > a[piv][c].norm()) piv = r;
        if (a[piv][c].norm().is_zero()) fail(ErrorKind::PrecisionExhausted, "singular complex system");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
            b[r] -= factor * b[c];
        }
    }
    std::vector<Complex> x(n, Complex(b[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace linalg

struct EmbeddingOptions {
    // Perturbs the roots after certification while keeping the certificate; any determinant check must then fail.
    bool inject_precision_fault = false;
    // Optional reorderings of the real roots and of the complex pairs, and per-pair choice of the conjugate
    // representative. Squared lengths must not depend on them.
    std::vector<std::size_t> real_order;
    std::vector<std::size_t> pair_order;
    std::vector<bool> conjugate_pair;
};

/// Default working precision for a tower reaching level `level` of a prime of norm q.
inline long default_precision(std::size_t m, const Integer& q, unsigned long level) {
    const double bits = std::ceil(2.0 * static_cast<double>(level) / static_cast<double>(m) *
                                  std::log2(q.get_d())) + 96.0;
    return std::max<long>(kDefaultPrecision, static_cast<long>(bits));
}

class EmbeddingContext {
  public:
    EmbeddingContext(FieldRef field, long precision_bits, EmbeddingOptions options = {})
        : field_(std::move(field)), precision_(precision_bits), options_(std::move(options)) {
        require(precision_ >= 64, ErrorKind::InvalidArgument, "precision must be at least 64 bits");
        roots_ = complex_roots(*field_, precision_);
        work_ = roots_.precision;
        apply_order();
        if (options_.inject_precision_fault)
            for (auto& z : roots_.roots) {
                z.re = z.re.with_precision(24).with_precision(work_) * (1 + Real::exp2i(-20, work_));
                z.im = z.im.with_precision(24).with_precision(work_);
            }
        const std::size_t m = field_->m;
        for (std::size_t i = 0; i < roots_.s + roots_.t; ++i) {
            const Complex& theta = i < roots_.s ? roots_.roots[i] : roots_.pair_root(i - roots_.s);
            std::vector<Complex> pw;
            Complex acc(Real(1, work_), Real(0, work_));
            for (std::size_t k = 0; k < m; ++k) {
                pw.push_back(acc);
                acc = acc * theta;
            }
            powers_.push_back(std::move(pw));
            Real a = theta.abs() + roots_.radius;
            std::vector<Real> ap;
            Real cur(1, work_);
            for (std::size_t k = 0; k < m; ++k) {
                ap.push_back(cur);
                cur *= a;
            }
            abs_powers_.push_back(std::move(ap));
        }
        sqrt2_ = sqrt(Real(2, work_));
        detect_exact_gram();
    }

    const FieldRef& field() const { return field_; }
    const NumberField& K() const { return *field_; }
    long precision() const { return precision_; }
    long working_precision() const { return work_; }
    const RootSet& roots() const { return roots_; }
    const std::optional<IntMatrix>& exact_gram() const { return gram_; }
    bool fault_injected() const { return options_.inject_precision_fault; }

    RealVector embed(const IntVector& x) const {
        require(x.size() == field_->m, ErrorKind::DimensionMismatch, "element length differs from degree");
        RealVector v;
        v.reserve(field_->m);
        for (std::size_t i = 0; i < powers_.size(); ++i) {
            Real re(work_), im(work_);
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k] == 0) continue;
                re += powers_[i][k].re * x[k];
                if (i >= roots_.s) im += powers_[i][k].im * x[k];
            }
            if (i < roots_.s) {
                v.push_back(std::move(re));
            } else {
                v.push_back(re * sqrt2_);
                v.push_back(im * sqrt2_);
            }
        }
        return v;
    }

    RealVector embed(const FieldElement& x) const {
        require(x.size() == field_->m, ErrorKind::DimensionMismatch, "element length differs from degree");
        RealVector v;
        for (std::size_t i = 0; i < powers_.size(); ++i) {
            Real a(work_), b(work_);
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k] == 0) continue;
                Real c(x[k], work_);
                a += powers_[i][k].re * c;
                b += powers_[i][k].im * c;
            }
            if (i < roots_.s) {
                v.push_back(std::move(a));
            } else {
                v.push_back(a * sqrt2_);
                v.push_back(b * sqrt2_);
            }
        }
        return v;
    }

    /// |tau(x)|^2 with a certified absolute error (zero when the integer Gram form is available).
    Certified squared_length(const IntVector& x) const {
        if (gram_) {
            Integer q = quadratic_form(*gram_, x);
            return {Real(q, work_), Real(work_)};
        }
        return numeric_squared_length(x);
    }

    /// Always the floating evaluation with its error bound, regardless of any exact form.
    Certified numeric_squared_length(const IntVector& x) const {
        RealVector v = embed(x);
        const long m = static_cast<long>(field_->m);
        const Real round = Real::exp2i(-(work_ - 4), work_) * (4 * (m + 1));
        Real value(work_), err(work_);
        std::size_t slot = 0;
        for (std::size_t i = 0; i < powers_.size(); ++i) {
            // error of sum_k x_k theta^k from the root radius and from rounding
            Real deriv(work_), mag(work_);
            for (std::size_t k = 0; k < x.size(); ++k) {
                Real ax(Integer(::abs(x[k])), work_);
                mag += ax * abs_powers_[i][k];
                if (k >= 1) deriv += ax * abs_powers_[i][k - 1] * static_cast<long>(k);
            }
            Real e = roots_.radius * deriv + round * mag;
            const std::size_t width = i < roots_.s ? 1 : 2;
            if (width == 2) e *= sqrt2_;
            for (std::size_t w = 0; w < width; ++w, ++slot) {
                value += square(v[slot]);
                err += abs(v[slot]) * e * 2 + square(e);
            }
        }
        err += value * round;
        return {std::move(value), std::move(err)};
    }

    static Integer quadratic_form(const IntMatrix& g, const IntVector& x) {
        Integer acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            Integer row = 0;
            for (std::size_t j = 0; j < x.size(); ++j) row += g[i][j] * x[j];
            acc += x[i] * row;
        }
        return acc;
    }

  private:
    void apply_order() {
        const std::size_t s = roots_.s, t = roots_.t;
        std::vector<Complex> reordered;
        for (std::size_t i = 0; i < s; ++i)
            reordered.push_back(roots_.roots[options_.real_order.empty() ? i : options_.real_order.at(i)]);
        for (std::size_t j = 0; j < t; ++j) {
            std::size_t src = options_.pair_order.empty() ? j : options_.pair_order.at(j);
            Complex rep = roots_.roots[s + 2 * src];
            if (!options_.conjugate_pair.empty() && options_.conjugate_pair.at(j)) rep = rep.conj();
            reordered.push_back(rep);
            reordered.push_back(rep.conj());
        }
        roots_.roots = std::move(reordered);
    }

    /// Power sums p_k = sum of theta^k over all roots, by Newton's identities.
    std::vector<Integer> power_sums(std::size_t count) const {
        const auto& f = field_->f;
        const std::size_t m = field_->m;
        std::vector<Integer> p(count, 0);
        if (count) p[0] = static_cast<unsigned long>(m);
        for (std::size_t k = 1; k < count; ++k) {
            Integer acc = 0;
            for (std::size_t i = 1; i <= std::min(k, m); ++i) {
                if (i == k) acc += f[m - i] * static_cast<unsigned long>(k);
                else acc += f[m - i] * p[k - i];
            }
            p[k] = -acc;
        }
        return p;
    }

    // Looks for beta in Z[alpha] with beta(theta) = conj(theta) at every root; then |tau(x)|^2 = Tr(x beta(x)).
    void detect_exact_gram() {
        if (options_.inject_precision_fault) return;
        const std::size_t m = field_->m;
        const auto& roots = roots_.roots;
        std::vector<std::vector<Complex>> v(m);
        std::vector<Complex> rhs;
        for (std::size_t i = 0; i < m; ++i) {
            Complex acc(Real(1, work_), Real(0, work_));
            for (std::size_t k = 0; k < m; ++k) {
                v[i].push_back(acc);
                acc = acc * roots[i];
            }
            rhs.push_back(roots[i].conj());
        }
        std::vector<Complex> beta_num;
        try {
            beta_num = linalg::solve(v, rhs);
        } catch (const Error&) {
            return;
        }
        const Real tol = Real::exp2i(-(work_ / 4), work_);
        IntVector beta;
        for (const auto& c : beta_num) {
            Integer r = c.re.round();
            if (abs(c.re - Real(r, work_)) > tol || abs(c.im) > tol) return;
            beta.push_back(r);
        }
        // exact: f(beta) = 0 in Z[alpha], so beta(theta) is a root of f for every root theta
        const auto& f = field_->f;
        IntVector acc(m, 0);
        for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
            acc = numfield::multiply(acc, beta, f);
            acc[0] += *it;
        }
        for (const auto& c : acc)
            if (c != 0) return;
        // numerically beta(theta_i) is closest to conj(theta_i), hence equal to it
        Real sep = Real::infinity(work_);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) sep = min(sep, (roots[i] - roots[j]).abs());
        for (std::size_t i = 0; i < m; ++i) {
            Complex val(work_);
            for (std::size_t k = 0; k < m; ++k) val += v[i][k] * Complex(Real(beta[k], work_), Real(0, work_));
            if ((val - roots[i].conj()).abs() * 4 >= sep) return;
        }
        std::vector<Integer> p = power_sums(2 * m);
        auto trace = [&](const IntVector& y) {
            Integer s = 0;
            for (std::size_t k = 0; k < m; ++k) s += y[k] * p[k];
            return s;
        };
        std::vector<IntVector> alpha_pow(m), beta_pow(m);
        alpha_pow[0] = IntVector(m, 0);
        alpha_pow[0][0] = 1;
        beta_pow[0] = alpha_pow[0];
        for (std::size_t k = 1; k < m; ++k) {
            alpha_pow[k] = numfield::multiply_by_generator(alpha_pow[k - 1], f);
            beta_pow[k] = numfield::multiply(beta_pow[k - 1], beta, f);
        }
        IntMatrix g(m, IntVector(m, 0));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) g[j][k] = trace(numfield::multiply(alpha_pow[j], beta_pow[k], f));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < j; ++k)
                if (g[j][k] != g[k][j]) return;
        gram_ = std::move(g);
        conjugation_ = std::move(beta);
    }

    FieldRef field_;
    long precision_;
    long work_ = 0;
    EmbeddingOptions options_;
    RootSet roots_;
    std::vector<std::vector<Complex>> powers_;  // per embedding (s real, then t representatives), theta^k
    std::vector<std::vector<Real>> abs_powers_;  // (|theta| + radius)^k
    Real sqrt2_;
    std::optional<IntMatrix> gram_;
    std::optional<IntVector> conjugation_;
};

using EmbeddingRef = std::shared_ptr<const EmbeddingContext>;

inline EmbeddingRef make_embedding(FieldRef field, long precision_bits, EmbeddingOptions options = {}) {
    return std::make_shared<const EmbeddingContext>(std::move(field), precision_bits, std::move(options));
}

inline RealVector embed_element(const EmbeddingContext& ctx, const FieldElement& x) { return ctx.embed(x); }

/// Rows are tau of the exact coordinate rows; `transform` maps the source basis to these rows.
struct LatticeBasis {
    RealMatrix rows;
    long precision = kDefaultPrecision;
    IntMatrix coords;  // exact power-basis coordinates per row; empty for abstract lattices
    EmbeddingRef context;
    Integer ideal_norm = 0;  // N(I) for ideal lattices, 0 otherwise
    IntMatrix transform;

    std::size_t rank() const { return rows.size(); }
    bool has_coords() const { return !coords.empty() && context != nullptr; }

    /// Basis from explicit real rows (no field behind it).
    static LatticeBasis from_rows(RealMatrix rows) {
        LatticeBasis b;
        b.precision = rows.empty() ? kDefaultPrecision : rows[0][0].precision();
        const std::size_t n = rows.size();
        b.transform.assign(n, IntVector(n, 0));
        for (std::size_t i = 0; i < n; ++i) b.transform[i][i] = 1;
        b.rows = std::move(rows);
        return b;
    }
};

inline Real lattice_determinant(const LatticeBasis& b) {
    return abs(linalg::determinant(b.rows, b.rows.empty() ? kDefaultPrecision : b.rows[0][0].precision()));
}

/// Lattice spanned by tau of the given exact coordinate rows, whose Z-span has index `norm` in O_K. Checks
/// |det| = norm sqrt|D_K| to relative error 2^(-precision/4).
inline LatticeBasis lattice_from_coords(const EmbeddingRef& ctx, IntMatrix coords, const Integer& norm) {
    LatticeBasis b;
    b.context = ctx;
    b.precision = ctx->precision();
    b.coords = std::move(coords);
    b.ideal_norm = norm;
    const std::size_t m = b.coords.size();
    b.transform.assign(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i) b.transform[i][i] = 1;
    for (const auto& row : b.coords) b.rows.push_back(ctx->embed(row));
    const long work = ctx->working_precision();
    Real det = lattice_determinant(b);
    Real expected = Real(b.ideal_norm, work) * sqrt(Real(ctx->K().abs_disc(), work));
    Real rel = abs(det - expected) / expected;
    if (rel > Real::exp2i(-(ctx->precision() / 4), work))
        fail(ErrorKind::DeterminantMismatch, "|det L_I| = " + det.str(12) + " but N(I) sqrt|D| = " + expected.str(12) +
                                                 " (relative error " + rel.str(4) + ")");
    return b;
}

/// L_I = tau(I) over the HNF rows of I.
inline LatticeBasis lattice_basis(const EmbeddingRef& ctx, const IdealHNF& ideal) {
    require(ctx->K().f == ideal.K().f, ErrorKind::InvalidArgument, "ideal and embedding use different fields");
    return lattice_from_coords(ctx, ideal.basis(), ideal_norm(ideal));
}

}  // namespace idealpack

#endif
