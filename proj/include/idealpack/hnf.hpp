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

#ifndef IDEALPACK_HNF_HPP
#define IDEALPACK_HNF_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "real.hpp"

namespace idealpack::hnf {

namespace detail {
inline void reduce_tail(IntVector& row, std::size_t from, const Integer& modulus) {
    for (std::size_t k = from; k < row.size(); ++k) mpz_fdiv_r(row[k].get_mpz_t(), row[k].get_mpz_t(), modulus.get_mpz_t());
}
}  // namespace detail

/// Row Hermite normal form of the full-rank lattice spanned by `generators` together with modulus * Z^width.
///
/// The caller guarantees modulus * Z^width lies in the lattice, which lets every intermediate entry be reduced
/// modulo `modulus`. Output: upper triangular, positive diagonal, entries above each pivot in [0, pivot).
inline IntMatrix hnf_modular(IntMatrix generators, const Integer& modulus, std::size_t width) {
    require(modulus > 0, ErrorKind::InvalidArgument, "HNF modulus must be positive");
    for (auto& row : generators) {
        require(row.size() == width, ErrorKind::DimensionMismatch, "generator width mismatch");
        detail::reduce_tail(row, 0, modulus);
    }
    IntMatrix h(width, IntVector(width, 0));
    Integer g, u, v, a, b;
    for (std::size_t j = 0; j < width; ++j) {
        IntVector pivot(width, 0);
        pivot[j] = modulus;
        for (auto& row : generators) {
            if (row[j] == 0) continue;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), pivot[j].get_mpz_t(), row[j].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), pivot[j].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
            for (std::size_t k = j; k < width; ++k) {
                Integer np = u * pivot[k] + v * row[k];
                Integer nr = a * row[k] - b * pivot[k];
                pivot[k] = std::move(np);
                row[k] = std::move(nr);
            }
            detail::reduce_tail(pivot, j + 1, modulus);
            detail::reduce_tail(row, j + 1, modulus);
        }
        if (pivot[j] < 0)
            for (auto& x : pivot) x = -x;
        h[j] = std::move(pivot);
    }
    for (std::size_t i = 1; i < width; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            Integer qt;
            mpz_fdiv_q(qt.get_mpz_t(), h[k][i].get_mpz_t(), h[i][i].get_mpz_t());
            if (qt == 0) continue;
            for (std::size_t c = i; c < width; ++c) h[k][c] -= qt * h[i][c];
        }
    }
    return h;
}

/// Product of the diagonal.
inline Integer determinant(const IntMatrix& h) {
    Integer d = 1;
    for (std::size_t i = 0; i < h.size(); ++i) d *= h[i][i];
    return d;
}

/// Coefficients c with c * h = x, or empty when x is not in the row lattice of the triangular matrix h.
inline std::vector<Integer> solve_triangular(const IntMatrix& h, const IntVector& x, bool* ok) {
    const std::size_t n = h.size();
    IntVector rest = x;
    IntVector c(n, 0);
    *ok = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!mpz_divisible_p(rest[j].get_mpz_t(), h[j][j].get_mpz_t())) {
            *ok = false;
            return {};
        }
        mpz_divexact(c[j].get_mpz_t(), rest[j].get_mpz_t(), h[j][j].get_mpz_t());
        if (c[j] != 0)
            for (std::size_t k = j; k < n; ++k) rest[k] -= c[j] * h[j][k];
    }
    return c;
}

/// Smallest positive integer a with (a, 0, ..., 0) in the row lattice of h.
inline Integer smallest_first_axis_multiple(const IntMatrix& h) {
    const std::size_t n = h.size();
    std::vector<Rational> r(n, 0);
    // (a,0,..,0) = c h with c = a r; r solves the triangular system for a = 1
    r[0] = Rational(1, h[0][0]);
    r[0].canonicalize();
    for (std::size_t j = 1; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < j; ++i) acc += r[i] * h[i][j];
        r[j] = -acc / h[j][j];
    }
    Integer a = 1;
    for (const auto& x : r) mpz_lcm(a.get_mpz_t(), a.get_mpz_t(), x.get_den_mpz_t());
    return a;
}

}  // namespace idealpack::hnf

#endif
