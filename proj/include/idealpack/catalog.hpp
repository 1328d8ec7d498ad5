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
 * @file catalog.hpp
 * @brief Reference fields, primes and published density cells; prime selection from user input.
 */

#ifndef IDEALPACK_CATALOG_HPP
#define IDEALPACK_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "numfield.hpp"
#include "polynomial.hpp"

namespace idealpack {

/// Picks a prime above p: by second generator g if given, else the index-th factor of factor_prime.
inline PrimeIdealFactor select_prime(const FieldRef& K, const Integer& p, std::size_t index,
                                     const std::optional<IntVector>& gens, std::uint64_t seed = 0x5eed) {
    if (gens) {
        require(gens->size() <= K->m, ErrorKind::DimensionMismatch, "generator has more than m coefficients");
        std::vector<Rational> c(K->m, 0);
        for (std::size_t i = 0; i < gens->size(); ++i) c[i] = (*gens)[i];
        return prime_from_generators(K, p, FieldElement(std::move(c)), seed);
    }
    auto factors = factor_prime(K, p, seed);
    require(index < factors.size(), ErrorKind::InvalidArgument,
            "factor index " + std::to_string(index) + " out of range: " + std::to_string(factors.size()) +
                " prime(s) above " + p.get_str());
    return factors[index];
}

struct ReferenceField {
    std::string name;
    std::vector<long> f;  // constant term first
};

inline const std::vector<ReferenceField>& reference_fields() {
    static const std::vector<ReferenceField> fields{
        {"quartic117", {1, 1, -1, -1, 1}},
        {"cubic49", {-1, -2, 1, 1}},
        {"cubic23", {-1, 0, 1, 1}},
        {"sextic19683", {1, 0, 0, 1, 0, 0, 1}},
    };
    return fields;
}

inline IntPolynomial to_polynomial(const std::vector<long>& c) {
    std::vector<Integer> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

/// One published (prime, dimension) cell with its density bound and family exponent.
struct ReferenceRow {
    std::string field;
    long p = 0;
    std::vector<long> gens;  // empty: p O_K is prime
    unsigned long q = 0;
    unsigned long n = 0;
    double log2_delta = 0;
    double lambda = 0;
};

inline const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows{
        {"quartic117", 3, {2, 1, 1}, 9, 45, 108.52, -1.442},
        {"quartic117", 3, {2, 1, 1}, 9, 64, 208.09, -1.442},
        {"quartic117", 3, {2, 1, 1}, 9, 128, 590.52, -1.442},
        {"quartic117", 7, {4, 1}, 7, 64, 190.63, -1.453},
        {"quartic117", 7, {4, 1}, 7, 100, 410.15, -1.453},
        {"cubic49", 2, {}, 8, 85, 134.46, -1.628},
        {"cubic49", 7, {5, 1}, 7, 64, 83.68, -1.585},
        {"cubic49", 7, {5, 1}, 7, 85, 157.63, -1.585},
        {"cubic23", 2, {}, 8, 32, 24.70, -1.429},
        {"cubic23", 2, {}, 8, 64, 115.40, -1.429},
        {"cubic23", 5, {2, 1}, 5, 50, 69.47, -1.445},
        {"cubic23", 5, {2, 1}, 5, 60, 101.01, -1.445},
        {"cubic23", 7, {11, 1}, 7, 85, 187.32, -1.430},
        {"sextic19683", 3, {2, 1}, 3, 30, 109.71, -1.868},
        {"sextic19683", 3, {2, 1}, 3, 32, 122.72, -1.868},
    };
    return rows;
}

inline const ReferenceField& reference_field(const std::string& name) {
    for (const auto& f : reference_fields())
        if (f.name == name) return f;
    fail(ErrorKind::InvalidArgument, "unknown reference field " + name);
}

inline PrimeIdealFactor reference_prime(const FieldRef& K, const ReferenceRow& row) {
    std::optional<IntVector> g;
    if (!row.gens.empty()) g = IntVector(row.gens.begin(), row.gens.end());
    return select_prime(K, Integer(row.p), 0, g);
}

}  // namespace idealpack

#endif
