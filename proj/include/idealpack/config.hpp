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
 * @file config.hpp
 * @brief Run configuration: flat `key = value` files, CLI overrides, validation.
 */

#ifndef IDEALPACK_CONFIG_HPP
#define IDEALPACK_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "real.hpp"

namespace idealpack {

enum class OutputFormat { Human, Kv };

struct RunConfig {
    std::vector<Integer> poly{1, 1, -1, -1, 1};  // constant term first
    Integer prime = 3;
    std::size_t index = 0;
    std::optional<IntVector> gens;
    std::optional<unsigned long> n;
    std::optional<unsigned long> dim;
    long precision_bits = 0;  // 0: automatic per level
    double lll_delta = 0.99;
    unsigned long lmax = 200;
    bool deep = false;  // lmax = 1000
    std::string code_table;
    OutputFormat format = OutputFormat::Human;
    std::uint64_t seed = 0x5eed;
    bool inject_precision_fault = false;

    unsigned long effective_lmax() const { return deep ? 1000 : lmax; }
};

namespace config_detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<Integer> parse_integers(const std::string& key, const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        tok = trim(tok);
        Integer v;
        if (tok.empty() || v.set_str(tok, 10) != 0)
            fail(ErrorKind::InvalidArgument, key + ": '" + tok + "' is not an integer");
        out.push_back(v);
    }
    require(!out.empty(), ErrorKind::InvalidArgument, key + ": empty list");
    return out;
}

inline unsigned long parse_unsigned(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    require(!t.empty() && t.find_first_not_of("0123456789") == std::string::npos, ErrorKind::InvalidArgument,
            key + ": '" + text + "' is not a nonnegative integer");
    try {
        return std::stoul(t);
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, key + ": '" + text + "' out of range");
    }
}

inline bool parse_bool(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    fail(ErrorKind::InvalidArgument, key + ": '" + text + "' is not a boolean");
}

}  // namespace config_detail

/// Applies one setting. Keys use underscores (precision_bits) or dashes (precision-bits).
inline void apply_setting(RunConfig& c, std::string key, const std::string& value) {
    using namespace config_detail;
    for (auto& ch : key)
        if (ch == '-') ch = '_';
    if (key == "poly") {
        c.poly = parse_integers(key, value);
    } else if (key == "prime") {
        auto v = parse_integers(key, value);
        require(v.size() == 1, ErrorKind::InvalidArgument, "prime: expected one integer");
        c.prime = v[0];
    } else if (key == "index") {
        c.index = parse_unsigned(key, value);
    } else if (key == "gens") {
        c.gens = parse_integers(key, value);
    } else if (key == "n") {
        c.n = parse_unsigned(key, value);
    } else if (key == "dim") {
        c.dim = parse_unsigned(key, value);
    } else if (key == "precision_bits") {
        c.precision_bits = static_cast<long>(parse_unsigned(key, value));
    } else if (key == "lll_delta") {
        try {
            std::size_t used = 0;
            c.lll_delta = std::stod(trim(value), &used);
            require(used == trim(value).size(), ErrorKind::InvalidArgument, "lll_delta: trailing characters");
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidArgument, "lll_delta: '" + value + "' is not a number");
        }
    } else if (key == "lmax") {
        c.lmax = parse_unsigned(key, value);
    } else if (key == "deep") {
        c.deep = parse_bool(key, value);
    } else if (key == "code_table") {
        c.code_table = trim(value);
    } else if (key == "format") {
        const std::string f = trim(value);
        if (f == "human") c.format = OutputFormat::Human;
        else if (f == "kv") c.format = OutputFormat::Kv;
        else fail(ErrorKind::InvalidArgument, "format: expected human or kv, got '" + f + "'");
    } else if (key == "seed") {
        c.seed = parse_unsigned(key, value);
    } else if (key == "inject_precision_fault") {
        c.inject_precision_fault = parse_bool(key, value);
    } else {
        fail(ErrorKind::InvalidArgument, "unknown configuration key '" + key + "'");
    }
}

/// Parses `key = value` lines; `#` starts a comment. Later lines win.
inline std::map<std::string, std::string> parse_config(std::istream& in, const std::string& source = "config") {
    std::map<std::string, std::string> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = config_detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        require(eq != std::string::npos, ErrorKind::ParseError,
                source + ":" + std::to_string(lineno) + ": expected 'key = value'");
        auto key = config_detail::trim(line.substr(0, eq));
        require(!key.empty(), ErrorKind::ParseError, source + ":" + std::to_string(lineno) + ": empty key");
        out[key] = config_detail::trim(line.substr(eq + 1));
    }
    return out;
}

inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open config file " + path);
    return parse_config(in, path);
}

/// Defaults, then the config file, then explicit CLI settings.
inline RunConfig merge_config(const std::map<std::string, std::string>& file,
                              const std::vector<std::pair<std::string, std::string>>& cli) {
    RunConfig c;
    for (const auto& [k, v] : file) apply_setting(c, k, v);
    for (const auto& [k, v] : cli) apply_setting(c, k, v);
    return c;
}

/// Checks everything that does not need the field itself; runs before any computation.
inline void validate(const RunConfig& c) {
    require(c.poly.size() >= 3, ErrorKind::InvalidArgument, "poly: need degree at least 2");
    require(c.poly.back() == 1, ErrorKind::NotMonic, "poly: leading coefficient must be 1");
    require(c.prime >= 2, ErrorKind::InvalidArgument, "prime: must be at least 2");
    require(c.lll_delta > 0.25 && c.lll_delta < 1.0, ErrorKind::InvalidArgument, "lll_delta must lie in (0.25, 1)");
    require(c.precision_bits == 0 || c.precision_bits >= 64, ErrorKind::InvalidArgument,
            "precision_bits must be 0 (auto) or at least 64");
    require(c.deep || c.lmax >= 10, ErrorKind::InvalidArgument, "lmax must be at least 10");
    require(c.effective_lmax() <= 100000, ErrorKind::ScaleTooLarge, "lmax above 100000");
    if (c.n && c.dim)
        require(*c.dim == *c.n * (c.poly.size() - 1), ErrorKind::InvalidArgument, "dim and n disagree: dim = m n");
    if (c.dim)
        require(*c.dim % (c.poly.size() - 1) == 0, ErrorKind::InvalidArgument, "dim must be a multiple of the degree");
}

/// Code length from n or dim.
inline std::optional<unsigned long> code_length(const RunConfig& c) {
    if (c.n) return c.n;
    if (c.dim) return *c.dim / (c.poly.size() - 1);
    return std::nullopt;
}

}  // namespace idealpack

#endif
