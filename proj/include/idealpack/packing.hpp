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
 * @file packing.hpp
 * @brief Concatenated packings tau(C_0) + ... + tau(C_{l-1}) + L_l^n: density bounds and small explicit instances.
 *
 * With L_i = tau(p^i), code lengths n and dimensions k_i,
 *
 *     log2 delta >= mn log2 d_E(L_l) - mn - n l log2 q - (n/2) log2|D_K| + log2 q * sum k_i
 *
 * where C_i must have distance at least ceil(min_sq(L_l) / min_sq(L_i)). The family with
 * n_l = ceil(q^(2l/m) |D_K|^(1/m)) and GV-rate codes has density exponent at least
 *
 *     -1 - log2|D_K|/(2m) - log2(m/(2 pi e))/2 + log2 d_E(L_l) - log2(n_l)/2 - (log2 q / m) sum H'_q(rho_i).
 */

#ifndef IDEALPACK_PACKING_HPP
#define IDEALPACK_PACKING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "hnf.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "numfield.hpp"
#include "real.hpp"

namespace idealpack {

// ---------------------------------------------------------------------------------------------------------------
// exact rational linear algebra helpers

namespace packing_detail {

using RationalMatrix = Matrix<Rational>;

inline RationalMatrix rational_inverse(const IntMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix m(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) fail(ErrorKind::InvariantViolation, "singular basis matrix");
        std::swap(m[piv], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

/// t with t * basis = y; y must lie in the row lattice.
inline IntVector coordinates_in(const RationalMatrix& inverse, const IntVector& y) {
    const std::size_t n = y.size();
    IntVector t(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (y[i] != 0) acc += inverse[i][j] * y[i];
        acc.canonicalize();
        if (acc.get_den() != 1) fail(ErrorKind::InvariantViolation, "vector is not in the expected sublattice");
        t[j] = acc.get_num();
    }
    return t;
}

/// Multiplication-by-b matrix over the power basis: row i is b * alpha^i.
inline IntMatrix multiplication_matrix(const IntVector& b, const IntPolynomial& f) {
    IntMatrix out;
    IntVector row = b;
    for (std::size_t i = 0; i < b.size(); ++i) {
        out.push_back(row);
        row = numfield::multiply_by_generator(row, f);
    }
    return out;
}

/// a / b in K as rational coordinates.
inline std::vector<Rational> divide(const IntVector& a, const IntVector& b, const IntPolynomial& f) {
    // y * M_b = a where M_b has rows b alpha^i
    RationalMatrix inv = rational_inverse(multiplication_matrix(b, f));
    const std::size_t n = a.size();
    std::vector<Rational> y(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != 0) acc += inv[i][j] * a[i];
        acc.canonicalize();
        y[j] = acc;
    }
    return y;
}

inline std::vector<Rational> multiply_rational(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                               const IntPolynomial& f) {
    std::vector<Rational> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    numfield::reduce_mod(prod, f);
    for (auto& x : prod) x.canonicalize();
    return prod;
}

/// Exact k-th root of a nonnegative rational, if it exists.
inline std::optional<Rational> exact_root(const Rational& x, unsigned long k) {
    Integer num = x.get_num(), den = x.get_den();
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace packing_detail

/// If y = a / b has a power y^j in Q for some j <= max_power, then |sigma(y)|^2 is the same rational number c for
/// every embedding sigma and |tau(a)|^2 = c |tau(b)|^2 exactly. Returns c when it is rational.
inline std::optional<Rational> exact_length_ratio(const IntPolynomial& f, const IntVector& a, const IntVector& b,
                                                  unsigned max_power = 12) {
    std::vector<Rational> y = packing_detail::divide(a, b, f);
    std::vector<Rational> pw = y;
    for (unsigned j = 1; j <= max_power; ++j) {
        bool rational = true;
        for (std::size_t i = 1; i < pw.size(); ++i)
            if (pw[i] != 0) rational = false;
        if (rational) {
            // |sigma(y)|^(2j) = r^2
            Rational r2 = pw[0] * pw[0];
            return packing_detail::exact_root(r2, j);
        }
        if (j < max_power) pw = packing_detail::multiply_rational(pw, y, f);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------------------------------------------
// the tower L_0 > L_1 > ... of a prime ideal

struct TowerOptions {
    long precision = 0;  // 0: per-level default, rounded up to a multiple of 64 bits
    double lll_delta = 0.99;
    EmbeddingOptions embedding;
};

struct TowerLevel {
    unsigned long level = 0;
    Integer norm;
    IntMatrix basis;  // LLL-reduced exact coordinates of a Z-basis of p^level
    SvpResult minimum;
    long precision = 0;
};

struct RatioCeiling {
    Integer value;
    std::string how;  // "exact", "certified", "certified@<bits>", "algebraic"
};

class IdealTower {
  public:
    IdealTower(FieldRef field, PrimeIdealFactor prime, TowerOptions options = {})
        : field_(std::move(field)), prime_(std::move(prime)), options_(std::move(options)) {
        require(field_->f == prime_.hnf.K().f, ErrorKind::InvalidArgument, "prime ideal belongs to another field");
        require(options_.precision == 0 || options_.precision >= 64, ErrorKind::InvalidArgument,
                "precision must be at least 64 bits");
    }

    const NumberField& K() const { return *field_; }
    const FieldRef& field() const { return field_; }
    const PrimeIdealFactor& prime() const { return prime_; }

    long precision_for(unsigned long level) const {
        if (options_.precision > 0) return options_.precision;
        long p = default_precision(field_->m, prime_.q, level);
        return (p + 63) / 64 * 64;
    }

    EmbeddingRef context(long bits) {
        auto it = contexts_.find(bits);
        if (it != contexts_.end()) return it->second;
        auto ctx = make_embedding(field_, bits, options_.embedding);
        contexts_.emplace(bits, ctx);
        return ctx;
    }

    /// Level i, computing the tower up to it. Each step forms p^(i+1) inside the reduced basis of p^i, so the new
    /// basis is at most a factor q away from reduced.
    const TowerLevel& level(unsigned long i) {
        while (levels_.size() <= i) extend();
        return levels_[i];
    }

    std::size_t computed() const { return levels_.size(); }

    /// ceil(min_sq(L_top) / min_sq(L_i)), refining precision and falling back to an algebraic certificate for
    /// exact ties. Raises AmbiguousCeiling when neither resolves it.
    RatioCeiling ceil_ratio(unsigned long top, unsigned long i) {
        const TowerLevel& A = level(top);
        const TowerLevel& B = level(i);
        if (A.minimum.exact && B.minimum.exact)
            if (auto c = certified_ceiling(A.minimum.min_sq, B.minimum.min_sq)) return {*c, "exact"};
        if (auto c = certified_ceiling(A.minimum.min_sq, B.minimum.min_sq)) return {*c, "certified"};
        if (auto r = algebraic_ratio(A.minimum, B.minimum)) {
            Integer c;
            mpz_cdiv_q(c.get_mpz_t(), r->get_num_mpz_t(), r->get_den_mpz_t());
            return {c, "algebraic"};
        }
        for (long factor : {2L, 4L}) {
            long bits = std::max(A.precision, B.precision) * factor;
            auto ctx = context(bits);
            SvpResult a = reevaluate(A.minimum, ctx), b = reevaluate(B.minimum, ctx);
            if (auto c = certified_ceiling(a.min_sq, b.min_sq)) return {*c, "certified@" + std::to_string(bits)};
        }
        fail(ErrorKind::AmbiguousCeiling, "min(L_" + std::to_string(top) + ")/min(L_" + std::to_string(i) +
                                              ") stays on an integer boundary after precision refinement");
    }

  private:
    std::optional<Rational> algebraic_ratio(const SvpResult& a, const SvpResult& b) const {
        auto pick = [](const SvpResult& r) {
            std::vector<IntVector> v = r.tied_elements;
            if (v.empty()) v.push_back(r.element);
            if (v.size() > 12) v.resize(12);
            return v;
        };
        auto as = pick(a), bs = pick(b);
        for (unsigned cap : {2u, 12u})
            for (const auto& x : as)
                for (const auto& y : bs)
                    if (auto r = exact_length_ratio(field_->f, x, y, cap)) {
                        // the certificate must agree with the certified values
                        Real lo = a.min_sq.lower() / b.min_sq.upper(), hi = a.min_sq.upper() / b.min_sq.lower();
                        Real rr(*r, a.min_sq.value.precision());
                        Real slack = rr * Real::exp2i(-(a.min_sq.value.precision() / 2), rr.precision());
                        if (rr < lo - slack || rr > hi + slack) continue;
                        return r;
                    }
        return std::nullopt;
    }

    void extend() {
        const std::size_t m = field_->m;
        const unsigned long i = levels_.size();
        TowerLevel L;
        L.level = i;
        L.precision = precision_for(i);
        auto ctx = context(L.precision);
        IntMatrix coords;
        if (i == 0) {
            L.norm = 1;
            coords.assign(m, IntVector(m, 0));
            for (std::size_t k = 0; k < m; ++k) coords[k][k] = 1;
        } else {
            const TowerLevel& prev = levels_[i - 1];
            L.norm = prev.norm * prime_.q;
            auto inv = packing_detail::rational_inverse(prev.basis);
            IntMatrix t;
            for (const auto& r : prev.basis)
                for (const auto& g : prime_.hnf.basis())
                    t.push_back(packing_detail::coordinates_in(inv, numfield::multiply(r, g, field_->f)));
            // q p^i lies in p^(i+1), so the relative lattice contains q Z^m
            IntMatrix h = hnf::hnf_modular(std::move(t), prime_.q, m);
            if (hnf::determinant(h) != prime_.q)
                fail(ErrorKind::InvariantViolation, "[p^i : p^(i+1)] differs from q at level " + std::to_string(i));
            coords = lattice_detail::multiply(h, prev.basis);
        }
        LatticeBasis b = lattice_from_coords(ctx, std::move(coords), L.norm);
        LatticeBasis red = lll_reduce(b, options_.lll_delta);
        L.minimum = shortest_vector(red, options_.lll_delta);
        check_corridor(L.minimum, m, L.norm, field_->abs_disc());
        if (i > 0) {
            const auto& prev = levels_[i - 1].minimum.min_sq;
            if (L.minimum.min_sq.upper() < prev.lower())
                fail(ErrorKind::InvariantViolation, "tower minima decrease at level " + std::to_string(i));
        }
        L.basis = std::move(red.coords);
        levels_.push_back(std::move(L));
    }

    FieldRef field_;
    PrimeIdealFactor prime_;
    TowerOptions options_;
    std::map<long, EmbeddingRef> contexts_;
    std::vector<TowerLevel> levels_;
};

// ---------------------------------------------------------------------------------------------------------------
// finite-level report

inline Real log2_ball_volume(unsigned long dim, long precision) {
    // V_N = pi^(N/2) / Gamma(N/2 + 1)
    Real half_n(static_cast<long>(dim), precision);
    half_n /= 2;
    Real lg = lgamma(half_n + 1);
    return half_n * log2(Real::pi(precision)) - lg / log(Real(2, precision));
}

/// Stirling form: -(N/2) log2(N / (2 pi e)) - log2(N pi) / 2.
inline Real stirling_log2_ball_volume(unsigned long dim, long precision) {
    Real n(static_cast<long>(dim), precision);
    Real two_pi_e = Real::pi(precision) * 2 * exp(Real(1, precision));
    return -(n / 2) * log2(n / two_pi_e) - log2(n * Real::pi(precision)) / 2;
}

struct PackingReport {
    // field
    IntPolynomial f;
    std::size_t m = 0, s = 0, t = 0;
    Integer abs_disc;
    // prime
    Integer p;
    IntPolynomial g;
    Integer q;
    unsigned e = 0, f_deg = 0;
    // construction
    unsigned long n = 0;
    unsigned long levels = 0;
    std::vector<Certified> min_sqs;
    std::vector<Integer> required_d;
    std::vector<std::string> ratio_method;
    std::vector<unsigned long> code_dims;
    std::vector<std::string> code_provenance;
    unsigned long dimension = 0;
    Real log2_center_density;
    Real log2_volume;
    Real log2_density;
    long precision = 0;
    std::vector<std::string> notes;
};

inline constexpr long kReportPrecision = 256;

/// The center-density bound from the stored fields; reports recompute bit-identically through this.
inline Real log2_center_density(std::size_t m, unsigned long n, unsigned long levels, const Integer& q,
                                const Integer& abs_disc, const Real& min_sq_top, unsigned long sum_k) {
    const long prec = kReportPrecision;
    Real mn(static_cast<long>(m * n), prec);
    Real lq = log2(Real(q, prec));
    Real value = mn * log2(min_sq_top.with_precision(prec)) / 2;
    value -= mn;
    value -= Real(static_cast<long>(n * levels), prec) * lq;
    value -= Real(static_cast<long>(n), prec) * log2(Real(abs_disc, prec)) / 2;
    value += lq * static_cast<long>(sum_k);
    return value;
}

inline unsigned long sum_dims(const std::vector<unsigned long>& k) {
    unsigned long s = 0;
    for (auto x : k) s += x;
    return s;
}

inline Real recompute_log2_center_density(const PackingReport& r) {
    return log2_center_density(r.m, r.n, r.levels, r.q, r.abs_disc, r.min_sqs.back().value, sum_dims(r.code_dims));
}

inline PackingReport finite_density_report(IdealTower& tower, unsigned long n, const CodeTable& table) {
    const NumberField& K = tower.K();
    const PrimeIdealFactor& P = tower.prime();
    require(n >= 2, ErrorKind::InvalidArgument, "code length must be at least 2");
    PackingReport r;
    r.f = K.f;
    r.m = K.m;
    r.s = K.s;
    r.t = K.t;
    r.abs_disc = K.abs_disc();
    r.p = P.p;
    r.g = P.g;
    r.q = P.q;
    r.e = P.e;
    r.f_deg = P.f_deg;
    r.n = n;
    r.levels = max_levels(K.m, P.q, Integer(n));
    r.dimension = K.m * n;
    r.precision = tower.precision_for(r.levels);
    for (unsigned long i = 0; i <= r.levels; ++i) r.min_sqs.push_back(tower.level(i).minimum.min_sq);
    if (r.levels == 0) r.notes.push_back("n below q^(2/m): no code concatenated, bare lattice L_0^n");
    require(P.q.fits_ulong_p(), ErrorKind::Unsupported, "q too large for a code table lookup");
    const unsigned long qq = P.q.get_ui();
    for (unsigned long i = 0; i < r.levels; ++i) {
        RatioCeiling c = tower.ceil_ratio(r.levels, i);
        r.required_d.push_back(c.value);
        r.ratio_method.push_back(c.how);
        unsigned long d = c.value.fits_ulong_p() ? c.value.get_ui() : n + 1;
        if (d > n) fail(ErrorKind::MissingEntry, "required distance " + c.value.get_str() + " exceeds n=" +
                                                     std::to_string(n) + " at level " + std::to_string(i));
        r.code_dims.push_back(table.best_dimension(qq, n, d));
        r.code_provenance.push_back(table.provenance(qq, n, d));
    }
    r.log2_center_density = recompute_log2_center_density(r);
    r.log2_volume = log2_ball_volume(r.dimension, kReportPrecision);
    r.log2_density = r.log2_center_density + r.log2_volume;
    return r;
}

// ---------------------------------------------------------------------------------------------------------------
// asymptotic exponent

struct LambdaCheckpoint {
    unsigned long level = 0;
    Real lambda;
    Real log2_n;  // log2 n_l
    std::size_t clamped = 0;  // levels with H'_q = 1
};

struct AsymptoticReport {
    IntPolynomial f;
    std::size_t m = 0;
    Integer abs_disc, p, q;
    IntPolynomial g;
    unsigned long lmax = 0;
    Integer n_lmax;
    std::vector<Real> rho;  // rho_i for the final level
    Real lambda;
    Real lambda_period_min;  // min over l in (lmax - e, lmax]; lambda oscillates with l mod e
    std::vector<LambdaCheckpoint> trace;
    std::size_t algebraic_ties = 0;
    long precision = 0;
};

/// n_l = ceil((q^(2l) |D|)^(1/m)).
inline Integer family_length(std::size_t m, const Integer& q, const Integer& abs_disc, unsigned long level) {
    Integer x;
    mpz_pow_ui(x.get_mpz_t(), q.get_mpz_t(), 2 * level);
    x *= abs_disc;
    Integer r;
    bool exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), m) != 0;
    if (!exact) r += 1;
    return r;
}

inline LambdaCheckpoint lambda_at(IdealTower& tower, unsigned long level, std::vector<Real>* rho_out,
                                  std::size_t* algebraic) {
    const NumberField& K = tower.K();
    const Integer& q = tower.prime().q;
    require(q.fits_slong_p(), ErrorKind::Unsupported, "q too large");
    const long prec = kReportPrecision;
    const long qq = q.get_si();
    Integer n = family_length(K.m, q, K.abs_disc(), level);
    Real nr(n, prec);
    Real ml(static_cast<long>(K.m), prec);
    Real sum_h(prec);
    LambdaCheckpoint cp;
    cp.level = level;
    for (unsigned long i = 0; i < level; ++i) {
        RatioCeiling g = tower.ceil_ratio(level, i);
        if (algebraic && g.how == "algebraic") ++*algebraic;
        Real rho = Real(g.value, prec) / nr;
        if (rho_out) rho_out->push_back(rho);
        Real h = entropy_clamped(qq, rho);
        if (h >= 1) ++cp.clamped;
        sum_h += h;
    }
    const Real two_pi_e = Real::pi(prec) * 2 * exp(Real(1, prec));
    Real lambda = Real(-1, prec);
    lambda -= log2(Real(K.abs_disc(), prec)) / (ml * 2);
    lambda -= log2(ml / two_pi_e) / 2;
    lambda += log2(tower.level(level).minimum.min_sq.value.with_precision(prec)) / 2;
    cp.log2_n = log2(nr);
    lambda -= cp.log2_n / 2;
    lambda -= log2(Real(q, prec)) / ml * sum_h;
    cp.lambda = lambda;
    return cp;
}

inline AsymptoticReport asymptotic_lambda(IdealTower& tower, unsigned long lmax,
                                          std::vector<unsigned long> checkpoints = {100, 200, 400, 1000}) {
    require(lmax >= 10, ErrorKind::InvalidArgument, "lmax must be at least 10");
    const NumberField& K = tower.K();
    AsymptoticReport r;
    r.f = K.f;
    r.m = K.m;
    r.abs_disc = K.abs_disc();
    r.p = tower.prime().p;
    r.q = tower.prime().q;
    r.g = tower.prime().g;
    r.lmax = lmax;
    r.precision = tower.precision_for(lmax);
    checkpoints.erase(std::remove_if(checkpoints.begin(), checkpoints.end(),
                                     [&](unsigned long c) { return c == 0 || c >= lmax; }),
                      checkpoints.end());
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.push_back(lmax);
    tower.level(lmax);
    for (auto c : checkpoints) {
        bool last = c == lmax;
        LambdaCheckpoint cp = lambda_at(tower, c, last ? &r.rho : nullptr, last ? &r.algebraic_ties : nullptr);
        if (last) r.lambda = cp.lambda;
        r.trace.push_back(std::move(cp));
    }
    r.lambda_period_min = r.lambda;
    for (unsigned long k = 1; k < tower.prime().e && k < lmax; ++k) {
        LambdaCheckpoint cp = lambda_at(tower, lmax - k, nullptr, nullptr);
        if (cp.lambda < r.lambda_period_min) r.lambda_period_min = cp.lambda;
    }
    r.n_lmax = family_length(K.m, r.q, r.abs_disc, lmax);
    return r;
}

// ---------------------------------------------------------------------------------------------------------------
// explicit small packings

/// Points of R^{mn} given by exact coordinates of n field elements (length n*m).
struct PointSet {
    EmbeddingRef context;
    std::size_t n = 0;
    std::vector<IntVector> points;
};

/// A level of the construction: code over GF(q) and the alphabet S_i that lifts its symbols.
struct LevelCode {
    LinearCode code;
    AlphabetSet alphabet;
};

namespace packing_detail {

/// All x in the lattice spanned by `coords` (exact rows, reduced) with |tau(shift + x)|^2 <= radius_sq.
inline std::vector<std::pair<IntVector, Real>> ball_points(const EmbeddingContext& ctx, const IntMatrix& coords,
                                                           const IntVector& shift, const Real& radius_sq) {
    const std::size_t n = coords.size();
    RealMatrix rows;
    for (const auto& c : coords) rows.push_back(ctx.embed(c));
    const long prec = rows[0][0].precision();
    RealVector target = ctx.embed(shift);
    // target = sum gamma_i rows_i  (solve gamma * rows = target)
    RealMatrix a = rows;
    RealVector b = target;
    // transpose system rows^T gamma = target
    RealMatrix at(n, RealVector(n, Real(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = a[j][i];
    RealVector gamma(n, Real(prec));
    {
        RealMatrix m = at;
        RealVector v = b;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
            std::swap(m[piv], m[c]);
            std::swap(v[piv], v[c]);
            for (std::size_t r = c + 1; r < n; ++r) {
                Real fct = m[r][c] / m[c][c];
                for (std::size_t k = c; k < n; ++k) m[r][k] -= fct * m[c][k];
                v[r] -= fct * v[c];
            }
        }
        for (std::size_t i = n; i-- > 0;) {
            Real acc = v[i];
            for (std::size_t k = i + 1; k < n; ++k) acc -= m[i][k] * gamma[k];
            gamma[i] = acc / m[i][i];
        }
    }
    // |shift + x|^2 = |sum (x_i + gamma_i) b_i|^2
    auto gs = lattice_detail::gram_schmidt(rows, prec);
    std::vector<std::pair<IntVector, Real>> out;
    IntVector x(n, 0);
    std::vector<Real> partial(n + 1, Real(prec));
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        Real center = -gamma[k];
        for (std::size_t j = k + 1; j < n; ++j) center -= gs.mu[j][k] * (Real(x[j], prec) + gamma[j]);
        Real slack = radius_sq - partial[k + 1];
        if (slack < 0) return;
        Real w = sqrt(slack / gs.bstar[k]);
        for (Integer v = (center - w).ceil(); v <= (center + w).floor(); ++v) {
            Real y = Real(v, prec) - center;
            Real l = partial[k + 1] + square(y) * gs.bstar[k];
            if (l > radius_sq) continue;
            x[k] = v;
            partial[k] = l;
            if (k == 0) {
                IntVector elem = lattice_detail::combine(x, coords);
                out.emplace_back(elem, l);
            } else {
                rec(k - 1);
            }
        }
        x[k] = 0;
    };
    rec(n - 1);
    return out;
}

}  // namespace packing_detail

/// Every point sum_i tau(S_i[c_i]) + tau(y), c_i in C_i, y in (p^l)^n, with squared norm at most radius_sq.
inline PointSet enumerate_packing_points(const EmbeddingRef& ctx, const PrimeIdealFactor& P,
                                         const std::vector<LevelCode>& levels, unsigned long n, const Real& radius_sq) {
    const NumberField& K = ctx->K();
    const std::size_t m = K.m;
    const std::size_t l = levels.size();
    require(m <= 2 && n <= 4 && l <= 2, ErrorKind::ScaleTooLarge, "explicit enumeration needs m <= 2, n <= 4, l <= 2");
    for (const auto& lc : levels) {
        require(lc.code.n == n, ErrorKind::DimensionMismatch, "code length differs from n");
        require(lc.alphabet.elements.size() == lc.code.q, ErrorKind::DimensionMismatch, "alphabet size differs from q");
    }
    IdealHNF top = ideal_power(P.hnf, l);
    LatticeBasis red = lll_reduce(lattice_basis(ctx, top));

    // all combinations of codewords, lifted to K^n
    std::vector<std::vector<IntVector>> shifts{std::vector<IntVector>(n, IntVector(m, 0))};
    for (std::size_t i = 0; i < l; ++i) {
        GaloisField F(levels[i].code.q);
        auto words = all_codewords(F, levels[i].code);
        std::vector<std::vector<IntVector>> next;
        require(shifts.size() * words.size() <= 100000, ErrorKind::ScaleTooLarge, "too many codeword combinations");
        for (const auto& s : shifts)
            for (const auto& w : words) {
                auto t = s;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t c = 0; c < m; ++c) t[j][c] += levels[i].alphabet.elements[w[j]][c];
                next.push_back(std::move(t));
            }
        shifts = std::move(next);
    }

    PointSet out;
    out.context = ctx;
    out.n = n;
    std::set<IntVector> seen;
    for (const auto& s : shifts) {
        std::vector<std::vector<std::pair<IntVector, Real>>> per(n);
        for (std::size_t j = 0; j < n; ++j) per[j] = packing_detail::ball_points(*ctx, red.coords, s[j], radius_sq);
        IntVector cur(n * m, 0);
        std::function<void(std::size_t, const Real&)> rec = [&](std::size_t j, const Real& used) {
            if (j == n) {
                if (seen.insert(cur).second) {
                    out.points.push_back(cur);
                    require(out.points.size() <= 100000, ErrorKind::ScaleTooLarge, "more than 10^5 points in the ball");
                }
                return;
            }
            for (const auto& [y, len] : per[j]) {
                Real total = used + len;
                if (total > radius_sq) continue;
                for (std::size_t c = 0; c < m; ++c) cur[j * m + c] = s[j][c] + y[c];
                rec(j + 1, total);
            }
        };
        rec(0, Real(ctx->working_precision()));
    }
    return out;
}

struct ClosestPair {
    Real min_sq;  // +inf for fewer than two points
    std::size_t i = 0, j = 0;
    bool exact = false;
};

/// Exact minimum pairwise squared distance. A double-precision sweep selects candidate pairs; the final value is the
/// integer Gram form when available, else the working-precision embedding.
inline ClosestPair closest_pair(const PointSet& ps) {
    const auto& ctx = *ps.context;
    const std::size_t m = ctx.K().m;
    const long prec = ctx.working_precision();
    ClosestPair res{Real::infinity(prec)};
    const std::size_t count = ps.points.size();
    require(count <= 100000, ErrorKind::ScaleTooLarge, "more than 10^5 points");
    if (count < 2) return res;
    std::vector<std::vector<double>> emb(count);
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < ps.n; ++j) {
            IntVector x(ps.points[k].begin() + static_cast<long>(j * m),
                        ps.points[k].begin() + static_cast<long>((j + 1) * m));
            for (const auto& v : ctx.embed(x)) emb[k].push_back(v.to_double());
        }
    std::vector<std::size_t> order(count);
    for (std::size_t k = 0; k < count; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return emb[a][0] < emb[b][0]; });
    double best = INFINITY;
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    auto margin = [](double b) { return b * (1 + 1e-6) + 1e-9; };
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            const auto& u = emb[order[a]];
            const auto& v = emb[order[b]];
            double dx = v[0] - u[0];
            if (dx * dx > margin(best)) break;
            double d = 0;
            for (std::size_t c = 0; c < u.size(); ++c) d += (u[c] - v[c]) * (u[c] - v[c]);
            if (d <= margin(best)) {
                cand.emplace_back(order[a], order[b]);
                best = std::min(best, d);
            }
        }
    for (auto [a, b] : cand) {
        // exact distance of this pair
        Real total(prec);
        bool exact = ctx.exact_gram().has_value();
        for (std::size_t j = 0; j < ps.n; ++j) {
            IntVector diff(m);
            for (std::size_t c = 0; c < m; ++c) diff[c] = ps.points[a][j * m + c] - ps.points[b][j * m + c];
            require(!(ps.points[a] == ps.points[b]), ErrorKind::InvariantViolation, "duplicate point");
            total += ctx.squared_length(diff).value;
        }
        if (total < res.min_sq) {
            res.min_sq = total;
            res.i = a;
            res.j = b;
            res.exact = exact;
        }
    }
    return res;
}

inline Real verify_min_distance(const PointSet& ps) { return closest_pair(ps).min_sq; }

// ---------------------------------------------------------------------------------------------------------------
// rendering

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ";") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string format_min_sq(const Certified& c) { return c.error.is_zero() ? c.value.round().get_str() : c.value.str(20); }

inline std::string render_kv(const PackingReport& r) {
    std::ostringstream os;
    std::vector<std::string> mins, ds, ks, how;
    for (const auto& c : r.min_sqs) mins.push_back(format_min_sq(c));
    for (const auto& d : r.required_d) ds.push_back(d.get_str());
    for (auto k : r.code_dims) ks.push_back(std::to_string(k));
    for (const auto& h : r.ratio_method) how.push_back(h);
    os << "field.poly=" << r.f.to_csv() << "\n"
       << "field.degree=" << r.m << "\n"
       << "field.signature=" << r.s << "," << r.t << "\n"
       << "field.abs_disc=" << r.abs_disc.get_str() << "\n"
       << "prime.p=" << r.p.get_str() << "\n"
       << "prime.g=" << r.g.to_csv() << "\n"
       << "prime.q=" << r.q.get_str() << "\n"
       << "prime.e=" << r.e << "\n"
       << "prime.f=" << r.f_deg << "\n"
       << "code_length=" << r.n << "\n"
       << "levels=" << r.levels << "\n"
       << "dimension=" << r.dimension << "\n"
       << "min_sq=" << join(mins) << "\n"
       << "required_d=" << join(ds) << "\n"
       << "ratio_method=" << join(how) << "\n"
       << "code_dims=" << join(ks) << "\n"
       << "code_dims_sum=" << sum_dims(r.code_dims) << "\n"
       << "log2_center_density=" << r.log2_center_density.fixed(12) << "\n"
       << "log2_volume=" << r.log2_volume.fixed(12) << "\n"
       << "log2_density=" << r.log2_density.fixed(12) << "\n"
       << "precision_bits=" << r.precision << "\n";
    return os.str();
}

inline std::string render_human(const PackingReport& r) {
    std::ostringstream os;
    os << "field      f = " << r.f.to_string("a") << "   m=" << r.m << " (s,t)=(" << r.s << "," << r.t
       << ") |d|=" << r.abs_disc.get_str() << "\n";
    os << "prime      (" << r.p.get_str() << ", " << r.g.to_string("a") << ")  q=" << r.q.get_str() << " e=" << r.e
       << " f=" << r.f_deg << "\n";
    os << "packing    n=" << r.n << " levels=" << r.levels << " dimension=" << r.dimension << "\n";
    os << "level  min_sq                      required_d  k     source\n";
    for (std::size_t i = 0; i < r.min_sqs.size(); ++i) {
        std::string ms = format_min_sq(r.min_sqs[i]);
        os << "  " << i << (i < 10 ? "    " : "   ") << ms << std::string(ms.size() < 28 ? 28 - ms.size() : 1, ' ');
        if (i < r.required_d.size()) {
            std::string d = r.required_d[i].get_str();
            os << d << std::string(d.size() < 12 ? 12 - d.size() : 1, ' ') << r.code_dims[i];
            os << std::string(r.code_dims[i] < 10 ? 5 : (r.code_dims[i] < 100 ? 4 : 3), ' ') << r.code_provenance[i];
        } else {
            os << "(L_l)";
        }
        os << "\n";
    }
    os << "sum k      " << sum_dims(r.code_dims) << "\n";
    os << "log2 center density >= " << r.log2_center_density.fixed(12) << "\n";
    os << "log2 density        >= " << r.log2_density.fixed(12) << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

inline std::string render_kv(const AsymptoticReport& r) {
    std::ostringstream os;
    std::vector<std::string> levels, values;
    for (const auto& c : r.trace) {
        levels.push_back(std::to_string(c.level));
        values.push_back(c.lambda.fixed(9));
    }
    std::size_t clamped = r.trace.empty() ? 0 : r.trace.back().clamped;
    os << "field.poly=" << r.f.to_csv() << "\n"
       << "field.degree=" << r.m << "\n"
       << "field.abs_disc=" << r.abs_disc.get_str() << "\n"
       << "prime.p=" << r.p.get_str() << "\n"
       << "prime.g=" << r.g.to_csv() << "\n"
       << "prime.q=" << r.q.get_str() << "\n"
       << "lmax=" << r.lmax << "\n"
       << "log2_n=" << (r.trace.empty() ? std::string("nan") : r.trace.back().log2_n.fixed(6)) << "\n"
       << "rho_count=" << r.rho.size() << "\n"
       << "rho_clamped=" << clamped << "\n"
       << "algebraic_ties=" << r.algebraic_ties << "\n"
       << "trace_levels=" << join(levels) << "\n"
       << "trace_lambda=" << join(values) << "\n"
       << "lambda=" << r.lambda.fixed(9) << "\n"
       << "lambda_period_min=" << r.lambda_period_min.fixed(9) << "\n"
       << "precision_bits=" << r.precision << "\n";
    return os.str();
}

inline std::string render_human(const AsymptoticReport& r) {
    std::ostringstream os;
    os << "field      f = " << r.f.to_string("a") << "   m=" << r.m << " |d|=" << r.abs_disc.get_str() << "\n";
    os << "prime      (" << r.p.get_str() << ", " << r.g.to_string("a") << ")  q=" << r.q.get_str() << "\n";
    os << "lmax       " << r.lmax << "   log2 n_l = "
       << (r.trace.empty() ? std::string("nan") : r.trace.back().log2_n.fixed(3)) << "\n";
    os << "convergence trace\n";
    for (const auto& c : r.trace) os << "  l=" << c.level << "  lambda >= " << c.lambda.fixed(9) << "\n";
    os << "density exponent lambda >= " << r.lambda.fixed(9) << "\n";
    if (r.lambda_period_min < r.lambda)
        os << "minimum over the last e levels: " << r.lambda_period_min.fixed(9) << "\n";
    return os.str();
}

}  // namespace idealpack

#endif
