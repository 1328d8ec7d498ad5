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
 * @file codes.hpp
 * @brief q-ary entropy, GV rate, level counts, required distances, code tables, small demo codes.
 *
 * Code-table text format, one record per line:
 *
 *     q n k d # provenance
 *
 * Lines starting with '#' and blank lines are ignored.
 */

#ifndef IDEALPACK_CODES_HPP
#define IDEALPACK_CODES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "modp.hpp"
#include "real.hpp"

namespace idealpack {

// ---------------------------------------------------------------------------------------------------------------
// entropy

namespace codes_detail {
inline void check_q(long q) { require(q >= 2, ErrorKind::DomainError, "alphabet size must be at least 2"); }
}  // namespace codes_detail

/// H_q(rho) = rho log_q(q-1) - rho log_q(rho) - (1-rho) log_q(1-rho), for rho in (0, 1).
template <class T>
T entropy(long q, const T& rho) {
    using std::log;
    using std::log1p;
    codes_detail::check_q(q);
    require(rho > 0 && rho < 1, ErrorKind::DomainError, "entropy argument must lie in (0, 1)");
    const T one = constant_like(rho, 1);
    const T lq = log(constant_like(rho, q));
    T h = rho * log(constant_like(rho, q - 1)) - rho * log(rho) - (one - rho) * log1p(-rho);
    return h / lq;
}

/// H'_q: H_q below (q-1)/q and 1 from there on (any rho > 0).
template <class T>
T entropy_clamped(long q, const T& rho) {
    codes_detail::check_q(q);
    require(rho > 0, ErrorKind::DomainError, "relative distance must be positive");
    // rho >= (q-1)/q  <=>  q rho >= q - 1
    if (rho * q >= constant_like(rho, q - 1)) return constant_like(rho, 1);
    return entropy(q, rho);
}

/// 1 - H_q(rho) on (0, (q-1)/q).
template <class T>
T gv_rate(long q, const T& rho) {
    codes_detail::check_q(q);
    require(rho > 0 && rho * q < constant_like(rho, q - 1), ErrorKind::DomainError,
            "GV rate needs 0 < rho < (q-1)/q");
    return constant_like(rho, 1) - entropy(q, rho);
}

// ---------------------------------------------------------------------------------------------------------------
// levels and distances

/// Largest l with q^(2l) <= n^m.
inline unsigned long max_levels(std::size_t m, const Integer& q, const Integer& n) {
    require(n >= 2, ErrorKind::InvalidArgument, "code length must be at least 2");
    require(q >= 2, ErrorKind::InvalidArgument, "q must be at least 2");
    Integer nm;
    mpz_pow_ui(nm.get_mpz_t(), n.get_mpz_t(), m);
    Integer q2 = q * q;
    Integer acc = 1;
    unsigned long l = 0;
    while (acc * q2 <= nm) {
        acc *= q2;
        ++l;
    }
    return l;
}

/// ceil(num / den) when the certified intervals decide it; empty when the interval straddles an integer.
inline std::optional<Integer> certified_ceiling(const Certified& num, const Certified& den) {
    require(den.lower() > 0, ErrorKind::DomainError, "ratio denominator not certified positive");
    if (num.error.is_zero() && den.error.is_zero()) {
        Integer a = num.value.round(), b = den.value.round();
        if (Real(a, num.value.precision()) == num.value && Real(b, den.value.precision()) == den.value) {
            Integer c;
            mpz_cdiv_q(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return c;
        }
    }
    const long prec = std::max(num.value.precision(), den.value.precision());
    const Real pad = 1 + Real::exp2i(-(prec - 4), prec);
    Real lo = num.lower() / (den.upper() * pad);
    Real hi = num.upper() * pad / den.lower();
    Integer a = lo.ceil(), b = hi.ceil();
    if (a == b) return a;
    return std::nullopt;
}

/// d_i = ceil(min_sq(L_l) / min_sq(L_i)), i = 0..l-1, for certified minima of L_0..L_l.
inline std::vector<Integer> required_distances(const std::vector<Certified>& min_sqs) {
    require(!min_sqs.empty(), ErrorKind::InvalidArgument, "need the minima of L_0..L_l");
    const std::size_t l = min_sqs.size() - 1;
    std::vector<Integer> out;
    for (std::size_t i = 0; i < l; ++i) {
        require(min_sqs[i].value > 0, ErrorKind::DomainError, "minima must be positive");
        auto c = certified_ceiling(min_sqs[l], min_sqs[i]);
        if (!c)
            fail(ErrorKind::AmbiguousCeiling, "ratio min(L_" + std::to_string(l) + ")/min(L_" + std::to_string(i) +
                                                  ") straddles an integer at this precision");
        out.push_back(*c);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// code tables

struct CodeSpec {
    unsigned long q = 0, n = 0, k = 0, d = 0;
};

struct CodeTableEntry {
    unsigned long k = 0, d = 0;
    std::string provenance;
    std::size_t line = 0;
};

class CodeTable {
  public:
    void add(unsigned long q, unsigned long n, CodeTableEntry e) { rows_[{q, n}].push_back(std::move(e)); }

    /// Singleton bound per row and monotonicity (k non-increasing in d) per (q, n).
    void validate() const {
        for (const auto& [key, entries] : rows_) {
            const auto [q, n] = key;
            for (const auto& e : entries) {
                auto where = " (line " + std::to_string(e.line) + ")";
                require(q >= 2, ErrorKind::ParseError, "q must be at least 2" + where);
                require(e.k >= 1 && e.k <= n, ErrorKind::ParseError, "need 1 <= k <= n" + where);
                require(e.d >= 1 && e.d <= n, ErrorKind::ParseError, "need 1 <= d <= n" + where);
                require(e.k + e.d <= n + 1, ErrorKind::ParseError, "Singleton bound violated" + where);
            }
            auto sorted = entries;
            std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
                return a.d != b.d ? a.d < b.d : a.k > b.k;
            });
            for (std::size_t i = 1; i < sorted.size(); ++i)
                require(sorted[i].k <= sorted[i - 1].k, ErrorKind::ParseError,
                        "k increases with d for q=" + std::to_string(q) + " n=" + std::to_string(n) + " (line " +
                            std::to_string(sorted[i].line) + ")");
        }
    }

    /// Largest k whose recorded distance is at least d. d <= 1 always allows the full space k = n.
    unsigned long best_dimension(unsigned long q, unsigned long n, unsigned long d) const {
        if (d <= 1) return n;
        auto it = rows_.find({q, n});
        std::optional<unsigned long> best;
        if (it != rows_.end())
            for (const auto& e : it->second)
                if (e.d >= d && (!best || e.k > *best)) best = e.k;
        if (!best)
            fail(ErrorKind::MissingEntry, "no code-table entry for (q, n, d) = (" + std::to_string(q) + ", " +
                                              std::to_string(n) + ", " + std::to_string(d) + ")");
        return *best;
    }

    std::string provenance(unsigned long q, unsigned long n, unsigned long d) const {
        if (d <= 1) return "trivial full-space code";
        auto it = rows_.find({q, n});
        if (it == rows_.end()) return {};
        const CodeTableEntry* pick = nullptr;
        for (const auto& e : it->second)
            if (e.d >= d && (!pick || e.k > pick->k)) pick = &e;
        return pick ? pick->provenance : std::string();
    }

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& [key, entries] : rows_) s += entries.size();
        return s;
    }
    bool empty() const { return rows_.empty(); }

  private:
    std::map<std::pair<unsigned long, unsigned long>, std::vector<CodeTableEntry>> rows_;
};

inline CodeTable load_code_table(std::istream& in, const std::string& source = "code table") {
    CodeTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line, prov;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            body = line.substr(0, hash);
            prov = line.substr(hash + 1);
            auto first = prov.find_first_not_of(" \t");
            prov = first == std::string::npos ? std::string() : prov.substr(first);
            while (!prov.empty() && (prov.back() == '\r' || prov.back() == ' ')) prov.pop_back();
        }
        std::istringstream ss(body);
        std::vector<std::string> fields;
        for (std::string tok; ss >> tok;) fields.push_back(tok);
        if (fields.empty()) continue;
        auto where = source + ":" + std::to_string(lineno);
        require(fields.size() == 4, ErrorKind::ParseError, where + ": expected 'q n k d', got '" + line + "'");
        unsigned long v[4];
        for (int i = 0; i < 4; ++i) {
            const auto& tok = fields[static_cast<std::size_t>(i)];
            require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos, ErrorKind::ParseError,
                    where + ": '" + tok + "' is not a nonnegative integer");
            try {
                v[i] = std::stoul(tok);
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, where + ": '" + tok + "' out of range");
            }
        }
        table.add(v[0], v[1], {v[2], v[3], prov.empty() ? source : prov, lineno});
    }
    table.validate();
    return table;
}

inline CodeTable load_code_table_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open code table " + path);
    return load_code_table(in, path);
}

/// Compiled-in snapshot (identical to data/codetable_snapshot.txt).
inline constexpr const char* kBundledCodeTable =
    "# q n k d # provenance\n"
    "9 64 25 27 # codetables.de, best known linear [64,25,27] code over GF(9)\n"
    "9 64 49 9 # codetables.de, best known linear [64,49,9] code over GF(9)\n"
    "9 64 61 3 # codetables.de, best known linear [64,61,3] code over GF(9)\n";

inline CodeTable bundled_code_table() {
    std::istringstream in(kBundledCodeTable);
    return load_code_table(in, "bundled snapshot");
}

// ---------------------------------------------------------------------------------------------------------------
// finite fields and demo codes

/// GF(p^k) with elements 0..q-1 indexed by base-p digits of their coefficients (constant term least significant),
/// modulo the lexicographically first monic irreducible polynomial of degree k (constant term first).
class GaloisField {
  public:
    explicit GaloisField(unsigned long q) : q_(q) {
        require(q >= 2 && q <= 1024, ErrorKind::Unsupported, "demo fields need 2 <= q <= 1024");
        unsigned long p = 2;
        while (q % p != 0) ++p;
        unsigned long k = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        require(r == 1, ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
        p_ = p;
        k_ = k;
        modulus_ = find_modulus();
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        for (unsigned long a = 0; a < q; ++a)
            for (unsigned long b = 0; b < q; ++b) {
                add_[a * q + b] = encode(decode(a) + decode(b));
                mul_[a * q + b] = encode((decode(a) * decode(b)) % modulus_);
            }
    }

    unsigned long q() const { return q_; }
    unsigned long p() const { return p_; }
    unsigned long degree() const { return k_; }
    const FpPoly& modulus() const { return modulus_; }
    unsigned long add(unsigned long a, unsigned long b) const { return add_[a * q_ + b]; }
    unsigned long mul(unsigned long a, unsigned long b) const { return mul_[a * q_ + b]; }
    unsigned long pow(unsigned long a, unsigned long e) const {
        unsigned long r = 1;
        for (unsigned long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

  private:
    FpPoly decode(unsigned long idx) const {
        std::vector<std::uint64_t> c;
        for (unsigned long i = 0; i < k_; ++i) {
            c.push_back(idx % p_);
            idx /= p_;
        }
        return FpPoly(p_, c);
    }
    unsigned long encode(const FpPoly& f) const {
        unsigned long idx = 0, scale = 1;
        for (unsigned long i = 0; i < k_; ++i) {
            idx += f.coefficient(i) * scale;
            scale *= p_;
        }
        return idx;
    }
    FpPoly find_modulus() const {
        if (k_ == 1) return FpPoly(p_, {0, 1});
        for (unsigned long idx = 0; idx < q_; ++idx) {
            std::vector<std::uint64_t> c;
            unsigned long r = idx;
            for (unsigned long i = 0; i < k_; ++i) {
                c.push_back(r % p_);
                r /= p_;
            }
            c.push_back(1);
            FpPoly f(p_, c);
            if (modp::is_irreducible(f)) return f;
        }
        fail(ErrorKind::InvariantViolation, "no irreducible modulus found");
    }

    unsigned long q_, p_ = 0, k_ = 0;
    FpPoly modulus_{2};
    std::vector<unsigned long> add_, mul_;
};

struct LinearCode {
    unsigned long q = 0, n = 0, k = 0, d = 0;  // d as designed
    std::vector<std::vector<unsigned long>> generator;  // k x n over GF(q) indices

    std::vector<unsigned long> encode(const GaloisField& F, const std::vector<unsigned long>& msg) const {
        std::vector<unsigned long> c(n, 0);
        for (unsigned long i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (unsigned long j = 0; j < n; ++j) c[j] = F.add(c[j], F.mul(msg[i], generator[i][j]));
        }
        return c;
    }
};

/// Reed-Solomon [n, k, n-k+1] when n <= q (evaluation points 0..n-1 by index), repetition [n, 1, n] otherwise.
inline LinearCode demo_code(const GaloisField& F, unsigned long n, unsigned long k) {
    require(k >= 1 && k <= n, ErrorKind::InvalidArgument, "need 1 <= k <= n");
    LinearCode c{F.q(), n, k, 0, {}};
    if (n <= F.q()) {
        for (unsigned long i = 0; i < k; ++i) {
            std::vector<unsigned long> row;
            for (unsigned long j = 0; j < n; ++j) row.push_back(F.pow(j, i));
            c.generator.push_back(std::move(row));
        }
        c.d = n - k + 1;
        return c;
    }
    if (k == 1) {
        c.generator.push_back(std::vector<unsigned long>(n, 1));
        c.d = n;
        return c;
    }
    fail(ErrorKind::Unsupported, "no demo code for q=" + std::to_string(F.q()) + " n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
}

inline LinearCode demo_code(unsigned long q, unsigned long n, unsigned long k) { return demo_code(GaloisField(q), n, k); }

/// All q^k codewords in message order (message digits little-endian).
inline std::vector<std::vector<unsigned long>> all_codewords(const GaloisField& F, const LinearCode& c) {
    double total = std::pow(static_cast<double>(c.q), static_cast<double>(c.k));
    require(total <= 1e6, ErrorKind::ScaleTooLarge, "more than 10^6 codewords");
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> msg(c.k, 0);
    for (;;) {
        out.push_back(c.encode(F, msg));
        std::size_t i = 0;
        while (i < c.k && msg[i] == c.q - 1) msg[i++] = 0;
        if (i == c.k) break;
        ++msg[i];
    }
    return out;
}

/// Minimum nonzero Hamming weight by exhaustive enumeration.
inline unsigned long minimum_weight(const GaloisField& F, const LinearCode& c) {
    unsigned long best = c.n + 1;
    for (const auto& w : all_codewords(F, c)) {
        unsigned long wt = 0;
        for (auto x : w) wt += x != 0;
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

}  // namespace idealpack

#endif
