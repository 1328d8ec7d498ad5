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

// idealpack: sphere packings from prime ideals and codes.
//
//   idealpack field      --poly 1,1,-1,-1,1
//   idealpack density    --poly 1,1,-1,-1,1 --prime 3 --n 64
//   idealpack asymptotic --poly 1,1,-1,-1,1 --prime 3 --deep
//   idealpack tables     [--code-table FILE]
//   idealpack verify     [--seed S]
//
// Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 missing data, 4 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "idealpack/idealpack.hpp"

namespace {

using namespace idealpack;

int exit_code(ErrorKind kind) {
    switch (classify(kind)) {
        case ErrorClass::Validation: return 2;
        case ErrorClass::DataMissing: return 3;
        case ErrorClass::Numerical: return 4;
        case ErrorClass::Internal: return 1;
    }
    return 1;
}

FieldRef field_of(const RunConfig& c, bool assume_irreducible) {
    DefineOptions o;
    o.assume_irreducible = assume_irreducible;
    o.seed = c.seed;
    return make_field(IntPolynomial(c.poly), o);
}

TowerOptions tower_options(const RunConfig& c) {
    TowerOptions t;
    t.precision = c.precision_bits;
    t.lll_delta = c.lll_delta;
    t.embedding.inject_precision_fault = c.inject_precision_fault;
    return t;
}

CodeTable code_table_of(const RunConfig& c) {
    return c.code_table.empty() ? bundled_code_table() : load_code_table_file(c.code_table);
}

int cmd_field(const RunConfig& c, bool assume_irreducible) {
    auto K = field_of(c, assume_irreducible);
    std::vector<std::string> maximal;
    for (const auto& chk : K->maximality.checks) maximal.push_back(chk.p.get_str());
    std::string irr = K->irreducibility.overridden ? "assumed"
                                                   : "irreducible mod " + std::to_string(*K->irreducibility.prime);
    auto primes = factor_prime(K, c.prime, c.seed);
    std::vector<std::string> ps;
    for (const auto& P : primes)
        ps.push_back("(" + P.p.get_str() + ";" + P.g.to_csv() + ";e=" + std::to_string(P.e) +
                     ";f=" + std::to_string(P.f_deg) + ")");
    if (c.format == OutputFormat::Kv) {
        std::cout << "field.poly=" << K->f.to_csv() << "\n"
                  << "field.degree=" << K->m << "\n"
                  << "field.signature=" << K->s << "," << K->t << "\n"
                  << "field.disc=" << K->disc.get_str() << "\n"
                  << "field.abs_disc=" << K->abs_disc().get_str() << "\n"
                  << "field.irreducibility=" << irr << "\n"
                  << "field.maximal_at=" << join(maximal, ",") << "\n"
                  << "primes_above=" << c.prime.get_str() << "\n"
                  << "primes=" << join(ps, ",") << "\n";
    } else {
        std::cout << "K = Q[x]/(" << K->f.to_string() << ")\n"
                  << "m=" << K->m << " (s,t)=(" << K->s << "," << K->t << ") D_K=" << K->disc.get_str()
                  << " |d|=" << K->abs_disc().get_str() << "\n"
                  << "irreducibility: " << irr << "\n"
                  << "Z[alpha] maximal (Dedekind) at: " << (maximal.empty() ? "no square divisors" : join(maximal, ", "))
                  << "\n"
                  << "primes above " << c.prime.get_str() << ":\n";
        for (std::size_t i = 0; i < primes.size(); ++i)
            std::cout << "  [" << i << "] (" << primes[i].p.get_str() << ", " << primes[i].g.to_string("a")
                      << ")  e=" << primes[i].e << " f=" << primes[i].f_deg << " q=" << primes[i].q.get_str() << "\n";
    }
    return 0;
}

int cmd_density(const RunConfig& c, bool assume_irreducible) {
    auto n = code_length(c);
    require(n.has_value(), ErrorKind::InvalidArgument, "density needs --n or --dim");
    auto K = field_of(c, assume_irreducible);
    require(K->m == c.poly.size() - 1, ErrorKind::InvariantViolation, "degree mismatch");
    CodeTable table = code_table_of(c);
    IdealTower tower(K, select_prime(K, c.prime, c.index, c.gens, c.seed), tower_options(c));
    PackingReport r = finite_density_report(tower, *n, table);
    std::cout << (c.format == OutputFormat::Kv ? render_kv(r) : render_human(r));
    return 0;
}

int cmd_asymptotic(const RunConfig& c, bool assume_irreducible) {
    auto K = field_of(c, assume_irreducible);
    IdealTower tower(K, select_prime(K, c.prime, c.index, c.gens, c.seed), tower_options(c));
    AsymptoticReport r = asymptotic_lambda(tower, c.effective_lmax());
    std::cout << (c.format == OutputFormat::Kv ? render_kv(r) : render_human(r));
    return 0;
}

int cmd_tables(const RunConfig& c) {
    CodeTable table = code_table_of(c);
    if (table.empty()) std::cerr << "warning: code table is empty; every density row is data-missing\n";
    std::map<std::string, FieldRef> fields;
    std::map<std::pair<std::string, long>, std::pair<Real, Real>> lambdas;  // at lmax, period minimum
    std::ostringstream human, kv;
    human << "field        prime           q   dim  log2 delta    published  status\n";
    const auto& rows = reference_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        auto& K = fields[row.field];
        if (!K) K = make_field(to_polynomial(reference_field(row.field).f));
        IdealTower tower(K, reference_prime(K, row), tower_options(c));
        std::string value = "missing", status = "data-missing", detail;
        try {
            PackingReport r = finite_density_report(tower, row.n, table);
            value = r.log2_center_density.fixed(2);
            status = std::abs(r.log2_center_density.to_double() - row.log2_delta) <= 0.01 ? "reproduced" : "differs";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MissingEntry) throw;
            detail = e.what();
        }
        auto key = std::make_pair(row.field, row.p);
        if (!lambdas.count(key)) {
            auto a = asymptotic_lambda(tower, c.effective_lmax());
            lambdas.emplace(key, std::make_pair(a.lambda, a.lambda_period_min));
        }
        std::string prime = "(" + std::to_string(row.p) + (row.gens.empty() ? "" : "," + to_polynomial(row.gens).to_string("a")) + ")";
        human << row.field << std::string(13 - row.field.size(), ' ') << prime
              << std::string(prime.size() < 16 ? 16 - prime.size() : 1, ' ') << row.q << std::string(row.q < 10 ? 3 : 2, ' ')
              << row.n * K->m << "  " << value << std::string(value.size() < 12 ? 12 - value.size() : 1, ' ')
              << row.log2_delta << "     " << status << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
        const std::string k = "row." + std::to_string(i) + ".";
        kv << k << "field=" << row.field << "\n"
           << k << "p=" << row.p << "\n"
           << k << "q=" << row.q << "\n"
           << k << "dimension=" << row.n * K->m << "\n"
           << k << "log2_center_density=" << value << "\n"
           << k << "published_log2_center_density=" << row.log2_delta << "\n"
           << k << "status=" << status << "\n";
    }
    human << "\nfamily exponent at lmax=" << c.effective_lmax() << "\n";
    std::size_t idx = 0;
    std::set<std::pair<std::string, long>> printed;
    for (const auto& row : rows) {
        auto key = std::make_pair(row.field, row.p);
        if (!printed.insert(key).second) continue;
        const auto& [lam, lam_min] = lambdas.at(key);
        human << "  " << row.field << " p=" << row.p << "  lambda >= " << lam.fixed(6)
              << "  (period minimum " << lam_min.fixed(6) << ", published " << row.lambda << ")\n";
        const std::string k = "lambda." + std::to_string(idx++) + ".";
        kv << k << "field=" << row.field << "\n"
           << k << "p=" << row.p << "\n"
           << k << "value=" << lam.fixed(9) << "\n"
           << k << "period_min=" << lam_min.fixed(9) << "\n"
           << k << "published=" << row.lambda << "\n";
    }
    kv << "lmax=" << c.effective_lmax() << "\n";
    std::cout << (c.format == OutputFormat::Kv ? kv.str() : human.str());
    return 0;
}

int cmd_verify(const RunConfig& c) {
    VerifyOptions o;
    o.seed = c.seed;
    o.embedding.inject_precision_fault = c.inject_precision_fault;
    auto suites = run_all_suites(o);
    std::size_t checks = 0, failed = 0;
    for (const auto& s : suites) {
        checks += s.checks;
        failed += s.failures.size();
        if (c.format == OutputFormat::Kv) {
            std::cout << "suite." << s.name << "=" << s.checks << "," << s.failures.size() << "\n";
        } else {
            std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
            for (const auto& f : s.failures) std::cout << "     " << f << "\n";
        }
    }
    if (c.format == OutputFormat::Kv)
        std::cout << "suites=" << suites.size() << "\nchecks=" << checks << "\nfailures=" << failed << "\n";
    else
        std::cout << suites.size() << " suites, " << checks << " checks, " << failed << " failures\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sphere packings from prime ideals of number fields concatenated with linear codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::map<std::string, std::string> given;
    std::string config_path;
    bool assume_irreducible = false, deep = false, fault = false;
    struct Flag {
        const char* name;
        const char* key;
        const char* help;
    };
    const Flag flags[] = {
        {"--poly", "poly", "coefficients of monic f, constant term first (default 1,1,-1,-1,1)"},
        {"--prime", "prime", "rational prime p below the ideal (default 3)"},
        {"--index", "index", "which prime above p, in factorization order (default 0)"},
        {"--gens", "gens", "second generator g(alpha) of (p, g), constant term first"},
        {"--n", "n", "code length n"},
        {"--dim", "dim", "packing dimension m n"},
        {"--precision-bits", "precision_bits", "fixed working precision (default: per level)"},
        {"--lll-delta", "lll_delta", "LLL parameter (default 0.99)"},
        {"--lmax", "lmax", "top level for the exponent (default 200)"},
        {"--code-table", "code_table", "code-table file 'q n k d # source' (default: bundled snapshot)"},
        {"--format", "format", "human or kv"},
        {"--seed", "seed", "seed for factorization and randomized suites"},
    };
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    for (const auto& f : flags) options.emplace_back(f.key, app.add_option(f.name, values[f.key], f.help));
    app.add_option("--config", config_path, "flat 'key = value' file; command-line flags take precedence");
    auto* deep_opt = app.add_flag("--deep", deep, "lmax = 1000");
    auto* fault_opt = app.add_flag("--inject-precision-fault", fault, "corrupt the embedding (testing)");
    app.add_flag("--assume-irreducible", assume_irreducible, "accept f without a modular irreducibility certificate");

    auto* field = app.add_subcommand("field", "degree, signature, discriminant, certificates and primes above p");
    auto* density = app.add_subcommand("density", "finite-dimensional center-density bound");
    auto* asymptotic = app.add_subcommand("asymptotic", "density exponent of the family");
    auto* tables = app.add_subcommand("tables", "reference density cells and exponents");
    auto* verify = app.add_subcommand("verify", "property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::vector<std::pair<std::string, std::string>> cli;
        for (const auto& [key, opt] : options)
            if (opt->count() > 0) cli.emplace_back(key, values[key]);
        if (deep_opt->count() > 0) cli.emplace_back("deep", deep ? "true" : "false");
        if (fault_opt->count() > 0) cli.emplace_back("inject_precision_fault", fault ? "true" : "false");
        std::map<std::string, std::string> file;
        if (!config_path.empty()) file = parse_config_file(config_path);
        RunConfig c = merge_config(file, cli);
        validate(c);

        if (field->parsed()) return cmd_field(c, assume_irreducible);
        if (density->parsed()) return cmd_density(c, assume_irreducible);
        if (asymptotic->parsed()) return cmd_asymptotic(c, assume_irreducible);
        if (tables->parsed()) return cmd_tables(c);
        if (verify->parsed()) return cmd_verify(c);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
