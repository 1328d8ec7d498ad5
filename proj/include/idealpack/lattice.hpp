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
 * @file lattice.hpp
 * @brief LLL reduction, exact shortest vectors by unpruned enumeration, brute-force oracle.
 *
 * Integer row operations are mirrored on the exact coordinates, and every modified row is re-embedded from them,
 * so floating error never accumulates across swaps.
 */

#ifndef IDEALPACK_LATTICE_HPP
#define IDEALPACK_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "real.hpp"

namespace idealpack {

struct SvpResult {
    Certified min_sq;
    IntVector witness;                     // coefficients over the source basis
    IntVector element;                     // power-basis coordinates (ideal lattices only)
    std::vector<IntVector> tied_elements;  // every vector found within the tie tolerance, up to sign
    bool exact = false;                    // min_sq is an exact integer value

    const Real& value() const { return min_sq.value; }
    Real relative_error() const { return min_sq.relative_error(); }
};

namespace lattice_detail {

inline Real dot(const RealVector& a, const RealVector& b) {
    Real s(a.empty() ? kDefaultPrecision : a[0].precision());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVector combine(const IntVector& x, const IntMatrix& rows) {
    IntVector out(rows.empty() ? 0 : rows[0].size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * rows[i][j];
    }
    return out;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out;
    for (const auto& row : a) out.push_back(combine(row, b));
    return out;
}

struct GramSchmidt {
    RealMatrix mu;
    RealVector bstar;  // squared lengths of the Gram-Schmidt vectors
};

inline GramSchmidt gram_schmidt(const RealMatrix& rows, long precision) {
    const std::size_t n = rows.size();
    GramSchmidt gs{RealMatrix(n, RealVector(n, Real(precision))), RealVector(n, Real(precision))};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Real r = dot(rows[k], rows[j]);
            for (std::size_t i = 0; i < j; ++i) r -= gs.mu[j][i] * gs.mu[k][i] * gs.bstar[i];
            gs.mu[k][j] = r / gs.bstar[j];
        }
        Real b = dot(rows[k], rows[k]);
        for (std::size_t j = 0; j < k; ++j) b -= square(gs.mu[k][j]) * gs.bstar[j];
        if (b <= 0) fail(ErrorKind::PrecisionExhausted, "Gram-Schmidt lost positivity; basis degenerate at this precision");
        gs.bstar[k] = std::move(b);
    }
    return gs;
}

}  // namespace lattice_detail

/// Size-reduction threshold |mu| <= eta; 0.51 rather than 1/2 so rounding cannot cause endless swaps.
inline constexpr double kLllEta = 0.51;

/// delta-LLL reduction (Cohen's formulation). The unimodular transform is composed into `transform`.
inline LatticeBasis lll_reduce(const LatticeBasis& in, double delta = 0.99) {
    using namespace lattice_detail;
    require(delta > 0.25 && delta < 1.0, ErrorKind::InvalidArgument, "LLL delta must lie in (0.25, 1)");
    const std::size_t n = in.rank();
    if (n == 0) return in;
    const long prec = in.rows[0][0].precision();
    const Real d = Real::from_double(delta, prec);
    const Real half = Real::from_double(0.5, prec);
    const Real loose = Real::from_double(kLllEta, prec);

    LatticeBasis out = in;
    IntMatrix u(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    auto refresh = [&](std::size_t k) {
        if (out.has_coords()) {
            out.rows[k] = out.context->embed(out.coords[k]);
        } else {
            RealVector r(in.rows[0].size(), Real(prec));
            for (std::size_t j = 0; j < n; ++j) {
                if (u[k][j] == 0) continue;
                for (std::size_t c = 0; c < r.size(); ++c) r[c] += in.rows[j][c] * u[k][j];
            }
            out.rows[k] = std::move(r);
        }
    };

    RealMatrix mu(n, RealVector(n, Real(prec)));
    RealVector bstar(n, Real(prec));
    auto gs_row = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            Real r = dot(out.rows[k], out.rows[j]);
            for (std::size_t i = 0; i < j; ++i) r -= mu[j][i] * mu[k][i] * bstar[i];
            mu[k][j] = r / bstar[j];
        }
        Real b = dot(out.rows[k], out.rows[k]);
        for (std::size_t j = 0; j < k; ++j) b -= square(mu[k][j]) * bstar[j];
        if (b <= 0) fail(ErrorKind::PrecisionExhausted, "LLL lost positivity of the Gram-Schmidt norms");
        bstar[k] = std::move(b);
    };

    gs_row(0);
    std::size_t k = 1;
    long iterations = 0;
    while (k < n) {
        if (++iterations > 2000000) fail(ErrorKind::PrecisionExhausted, "LLL did not terminate");
        for (int pass = 0;; ++pass) {
            gs_row(k);
            bool reduced = true;
            for (std::size_t j = 0; j < k; ++j)
                if (abs(mu[k][j]) > loose) reduced = false;
            if (reduced) break;
            if (pass > 64) fail(ErrorKind::PrecisionExhausted, "size reduction does not settle");
            for (std::size_t j = k; j-- > 0;) {
                if (abs(mu[k][j]) <= half) continue;
                Integer r = mu[k][j].round();
                for (std::size_t c = 0; c < n; ++c) u[k][c] -= r * u[j][c];
                if (out.has_coords())
                    for (std::size_t c = 0; c < out.coords[k].size(); ++c) out.coords[k][c] -= r * out.coords[j][c];
                for (std::size_t i = 0; i < j; ++i) mu[k][i] -= mu[j][i] * r;
                mu[k][j] -= Real(r, prec);
            }
            refresh(k);
        }
        if (bstar[k] < (d - square(mu[k][k - 1])) * bstar[k - 1]) {
            std::swap(out.rows[k], out.rows[k - 1]);
            std::swap(u[k], u[k - 1]);
            if (out.has_coords()) std::swap(out.coords[k], out.coords[k - 1]);
            gs_row(k - 1);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
    Integer det_u = poly::determinant(u);
    if (det_u != 1 && det_u != -1) fail(ErrorKind::InvariantViolation, "LLL transform is not unimodular");
    out.transform = multiply(u, in.transform);
    return out;
}

namespace lattice_detail {

/// All nonzero x (up to sign) with |sum x_i b_i|^2 within the shrinking radius; returns candidates near the best.
inline std::vector<IntVector> enumerate_short(const RealMatrix& rows, const Real& rel_tol) {
    const std::size_t n = rows.size();
    const long prec = rows[0][0].precision();
    GramSchmidt gs = gram_schmidt(rows, prec);
    Real radius = gs.bstar[0] * (1 + rel_tol);
    Real best = gs.bstar[0];
    std::vector<std::pair<IntVector, Real>> found;
    IntVector x(n, 0);
    std::vector<Real> partial(n + 1, Real(prec));

    std::function<void(std::size_t, bool)> recurse = [&](std::size_t k, bool zero_above) {
        Real center(prec);
        for (std::size_t j = k + 1; j < n; ++j)
            if (x[j] != 0) center -= gs.mu[j][k] * x[j];
        Real slack = radius - partial[k + 1];
        if (slack < 0) return;
        Real width = sqrt(slack / gs.bstar[k]);
        Integer lo = (center - width).ceil();
        Integer hi = (center + width).floor();
        if (zero_above && lo < 0) lo = 0;
        for (Integer v = lo; v <= hi; ++v) {
            Real y = Real(v, prec) - center;
            Real l = partial[k + 1] + square(y) * gs.bstar[k];
            if (l > radius) continue;
            x[k] = v;
            partial[k] = l;
            bool zero_now = zero_above && v == 0;
            if (k == 0) {
                if (zero_now) continue;
                found.emplace_back(x, l);
                if (l < best) {
                    best = l;
                    radius = best * (1 + rel_tol);
                }
            } else {
                recurse(k - 1, zero_now);
            }
        }
        x[k] = 0;
    };
    recurse(n - 1, true);

    std::vector<IntVector> out;
    for (auto& [vec, len] : found)
        if (len <= radius) out.push_back(std::move(vec));
    if (out.empty()) fail(ErrorKind::PrecisionExhausted, "enumeration found no vector inside the first basis norm");
    return out;
}

/// |v|^2 for v = sum x_i rows_i with a rounding error bound.
inline Certified combination_length(const RealMatrix& rows, const IntVector& x) {
    const long prec = rows[0][0].precision();
    const std::size_t dim = rows[0].size();
    const Real u = Real::exp2i(-(prec - 4), prec) * static_cast<long>(x.size() + 2);
    Real value(prec), err(prec);
    for (std::size_t c = 0; c < dim; ++c) {
        Real v(prec), mag(prec);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            Real term = rows[i][c] * x[i];
            mag += abs(term);
            v += term;
        }
        Real e = mag * u;
        value += square(v);
        err += abs(v) * e * 2 + square(e);
    }
    err += value * u;
    return {std::move(value), std::move(err)};
}

}  // namespace lattice_detail

/// Certified squared length of an ideal-lattice vector given by power-basis coordinates.
inline SvpResult evaluate_candidates(const EmbeddingRef& ctx, const std::vector<IntVector>& elements) {
    require(!elements.empty(), ErrorKind::InvalidArgument, "no candidate vectors");
    SvpResult res;
    std::vector<Certified> values;
    std::size_t best = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        values.push_back(ctx->squared_length(elements[i]));
        if (values[i].value < values[best].value) best = i;
    }
    res.min_sq = values[best];
    res.element = elements[best];
    res.exact = ctx->exact_gram().has_value();
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (values[i].lower() <= res.min_sq.upper()) res.tied_elements.push_back(elements[i]);
    return res;
}

/// Shortest nonzero vector by LLL followed by unpruned Fincke-Pohst/Schnorr-Euchner enumeration.
inline SvpResult shortest_vector(const LatticeBasis& basis, double delta = 0.99) {
    const std::size_t n = basis.rank();
    require(n >= 1, ErrorKind::InvalidArgument, "empty basis");
    require(n <= 16, ErrorKind::RankTooLarge, "rank " + std::to_string(n) + " exceeds 16");
    LatticeBasis red = lll_reduce(basis, delta);
    const long prec = basis.precision;
    const Real tol = Real::exp2i(-(prec / 2), red.rows[0][0].precision());
    std::vector<IntVector> cand = lattice_detail::enumerate_short(red.rows, tol);

    SvpResult res;
    if (red.has_coords()) {
        std::vector<IntVector> elements;
        for (const auto& x : cand) elements.push_back(lattice_detail::combine(x, red.coords));
        res = evaluate_candidates(red.context, elements);
        // witness over the source basis: find the candidate that was selected
        for (const auto& x : cand)
            if (lattice_detail::combine(x, red.coords) == res.element) {
                res.witness = lattice_detail::combine(x, red.transform);
                break;
            }
    } else {
        std::size_t best = 0;
        std::vector<Certified> values;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            values.push_back(lattice_detail::combination_length(red.rows, cand[i]));
            if (values[i].value < values[best].value) best = i;
        }
        res.min_sq = values[best];
        res.witness = lattice_detail::combine(cand[best], red.transform);
    }
    if (res.min_sq.value <= 0) fail(ErrorKind::PrecisionExhausted, "nonpositive minimum");
    if (res.min_sq.relative_error() > Real::exp2i(-(prec / 4), prec))
        fail(ErrorKind::PrecisionExhausted, "minimum not certified to 2^-" + std::to_string(prec / 4));
    return res;
}

/// Minimum squared length over nonzero coefficient vectors in [-bound, bound]^rank.
inline Real brute_force_min(const LatticeBasis& basis, long coeff_bound) {
    const std::size_t n = basis.rank();
    require(n >= 1 && n <= 6, ErrorKind::RankTooLarge, "brute force needs rank at most 6");
    require(coeff_bound >= 1 && coeff_bound <= 10, ErrorKind::BoundTooLarge, "coefficient bound must be in [1, 10]");
    const long prec = basis.rows[0][0].precision();
    RealMatrix g(n, RealVector(n, Real(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = lattice_detail::dot(basis.rows[i], basis.rows[j]);
    std::vector<long> x(n, -coeff_bound);
    Real best = Real::infinity(prec);
    for (;;) {
        // only vectors whose last nonzero entry is positive; the negatives have the same length
        std::size_t last = n;
        for (std::size_t i = n; i-- > 0;)
            if (x[i] != 0) {
                last = i;
                break;
            }
        if (last < n && x[last] > 0) {
            Real q(prec);
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                Real row(prec);
                for (std::size_t j = 0; j < n; ++j)
                    if (x[j] != 0) row += g[i][j] * x[j];
                q += row * x[i];
            }
            if (q < best) best = q;
        }
        std::size_t i = 0;
        while (i < n && x[i] == coeff_bound) x[i++] = -coeff_bound;
        if (i == n) break;
        ++x[i];
    }
    return best;
}

/// Lower bound m N^(2/m) and Minkowski upper bound m (N sqrt|D|)^(2/m) for the minimum of L_I.
struct Corridor {
    Real lower, upper;
};

inline Corridor minimum_corridor(std::size_t m, const Integer& norm, const Integer& abs_disc, long precision) {
    Real n(norm, precision);
    Real ml(static_cast<long>(m), precision);
    Real expo = Real(2, precision) / ml;
    Real lower = ml * pow(n, expo);
    Real upper = ml * pow(n * sqrt(Real(abs_disc, precision)), expo);
    return {std::move(lower), std::move(upper)};
}

/// Raises InvariantViolation when a computed minimum leaves the corridor.
inline void check_corridor(const SvpResult& r, std::size_t m, const Integer& norm, const Integer& abs_disc) {
    const long prec = r.min_sq.value.precision();
    Corridor c = minimum_corridor(m, norm, abs_disc, prec);
    Real tol = max(r.min_sq.error, c.upper * Real::exp2i(-(prec / 2), prec));
    if (r.min_sq.value < c.lower - tol || r.min_sq.value > c.upper + tol)
        fail(ErrorKind::InvariantViolation, "minimum " + r.min_sq.value.str(15) + " outside [" + c.lower.str(15) +
                                                ", " + c.upper.str(15) + "]");
}

/// Shortest vector of an ideal lattice with the corridor asserted.
inline SvpResult ideal_minimum(const LatticeBasis& basis, double delta = 0.99) {
    require(basis.has_coords(), ErrorKind::InvalidArgument, "ideal_minimum needs an ideal lattice");
    SvpResult r = shortest_vector(basis, delta);
    check_corridor(r, basis.context->K().m, basis.ideal_norm, basis.context->K().abs_disc());
    return r;
}

/// Re-evaluates the tied candidates of a previous result in another (typically more precise) context.
inline SvpResult reevaluate(const SvpResult& r, const EmbeddingRef& ctx) {
    std::vector<IntVector> elems = r.tied_elements.empty() ? std::vector<IntVector>{r.element} : r.tied_elements;
    SvpResult out = evaluate_candidates(ctx, elems);
    if (out.element == r.element) out.witness = r.witness;
    return out;
}

}  // namespace idealpack

#endif
