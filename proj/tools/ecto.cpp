// ecto -- command-line front end for the torsion obstruction engine.
//
//   ecto check --n N [--degree D] [--prime P] [--certificate PATH] [--cross-validate]
//   ecto enumerate --q Q [--orders | --traces | --with-point-of-order N]
//   ecto waterhouse --q Q
//   ecto genus --n N
//   ecto tables --n N
//
// `check` exits 0 for RuledOut, 2 for Inconclusive and 1 on errors; the
// other commands exit 0 on success and 1 on errors.  Certificate files are
// canonical JSON: identical inputs produce identical bytes.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ecto/certificate_json.hpp"
#include "ecto/gf.hpp"
#include "ecto/modcurve.hpp"
#include "ecto/obstruction.hpp"
#include "ecto/version.hpp"
#include "ecto/waterhouse.hpp"
#include "ecto/weierstrass.hpp"

namespace {

constexpr int kExitRuledOut = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

std::string resolve_table_path(const std::string& flag_value) {
    namespace fs = std::filesystem;
    if (!flag_value.empty()) return flag_value;
#ifdef ECTO_DEFAULT_TABLE_FILE
    if (fs::exists(ECTO_DEFAULT_TABLE_FILE)) return ECTO_DEFAULT_TABLE_FILE;
#endif
    if (fs::exists("data/j1_decomposition.txt")) return "data/j1_decomposition.txt";
    throw std::runtime_error("cannot locate the J_1(N) decomposition table; pass --table PATH");
}

std::pair<std::uint64_t, std::uint32_t> parse_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    const auto factors = ecto::factorize(q);
    if (factors.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {factors[0].first, factors[0].second};
}

void print_certificate(std::ostream& os, const ecto::ObstructionCertificate& cert) {
    os << "check: N=" << cert.level << " degree=" << cert.degree << " prime=" << cert.prime << "\n";
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const ecto::CertificateStep& s = cert.steps[i];
        os << "  " << (i + 1 < 10 ? " " : "") << (i + 1) << ". " << ecto::to_label(s.status) << "  "
           << ecto::to_label(s.kind) << "  " << s.statement << "\n";
        if (!s.evidence.empty()) os << "        evidence: " << s.evidence << "\n";
        if (!s.citation.empty()) os << "        cites: " << s.citation << "\n";
    }
    os << "verdict: " << ecto::to_label(cert.verdict) << "\n";
}

int cmd_check(const std::string& table_flag, std::uint32_t N, std::uint32_t d, std::uint64_t p,
              const std::string& cert_path, bool do_cross_validate) {
    const auto table = ecto::DecompositionTable::load_file(resolve_table_path(table_flag));
    const ecto::ObstructionCertificate cert = ecto::check_torsion(table, N, d, p);
    print_certificate(std::cout, cert);

    if (!cert_path.empty()) {
        std::ofstream out(cert_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write certificate file: " + cert_path);
        out << ecto::serialize_certificate(ecto::make_document(cert));
        std::cout << "certificate written to " << cert_path << "\n";
    }

    if (do_cross_validate) {
        const bool none_found = ecto::cross_validate(N, p, d);
        std::cout << "oracle: exhaustive enumeration over F_" << p << "^f for f <= " << d << " found "
                  << (none_found ? "no curve" : "curves") << " with a point of order " << N << "\n";
        if (cert.verdict == ecto::Verdict::RuledOut) {
            if (!none_found) {
                std::cerr << "error: verdict RuledOut contradicts the enumeration oracle\n";
                return kExitError;
            }
            std::cout << "cross-validation: agreed\n";
        }
    }

    return cert.verdict == ecto::Verdict::RuledOut ? kExitRuledOut : kExitInconclusive;
}

int cmd_enumerate(std::uint64_t q, bool orders, bool traces, std::uint64_t with_order) {
    const auto [p, n] = parse_prime_power(q);
    ecto::Field field(p, n);
    if (traces) {
        const auto ts = ecto::realized_traces(field);
        std::cout << "traces over F_" << q << ": " << ecto::detail::format_set(ts) << "\n";
        return 0;
    }
    if (with_order > 0) {
        const auto curves = ecto::curves_with_point_of_order(field, with_order);
        for (const auto& E : curves) std::cout << E << "\n";
        std::cout << "found " << curves.size() << " curve(s) over F_" << q << " with a point of order "
                  << with_order << "\n";
        return 0;
    }
    (void)orders;  // default mode
    ecto::FieldTables tables(field);
    std::map<std::uint64_t, std::uint64_t> histogram;
    ecto::enumerate_curves(tables, [&](const ecto::WeierstrassCurve& E) {
        ++histogram[ecto::count_points(E, tables)];
    });
    std::uint64_t total = 0;
    for (const auto& [order, count] : histogram) {
        std::cout << order << " " << count << "\n";
        total += count;
    }
    std::cout << "# " << total << " nonsingular curves over F_" << q << ", orders as '<order> <count>'\n";
    return 0;
}

int cmd_waterhouse(std::uint64_t q) {
    const auto [p, n] = parse_prime_power(q);
    std::cout << "admissible Frobenius traces over F_" << q << " (q = " << p << "^" << n << "):\n";
    const std::int64_t tmax = static_cast<std::int64_t>(ecto::isqrt(4 * q));
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        const ecto::TraceQuery tq = ecto::admissible_trace(t, p, n);
        if (tq.admissible) {
            std::cout << "  t=" << t << " via condition (" << tq.matched_condition << ")"
                      << "  order " << (static_cast<std::int64_t>(q) + 1 - t) << "\n";
        }
    }
    return 0;
}

int cmd_genus(std::uint32_t N) {
    const std::uint64_t g = ecto::genus_x1(N);
    std::cout << "genus of X_1(" << N << ") = " << g << "\n";
    return 0;
}

int cmd_tables(const std::string& table_flag, std::uint32_t N) {
    const auto table = ecto::DecompositionTable::load_file(resolve_table_path(table_flag));
    const ecto::DecompositionRow* row = table.find(N);
    if (!row) throw std::runtime_error("no decomposition row for N = " + std::to_string(N));
    std::cout << "decomposition of J_1(" << N << "):\n";
    for (std::size_t i = 0; i < row->factors.size(); ++i) {
        const auto& f = row->factors[i];
        std::cout << "  factor " << (i + 1) << ": dimension " << f.dimension << ", multiplicity "
                  << f.multiplicity << ", L(A_i,1) " << (f.l_vanishes ? "= 0" : "!= 0") << "\n";
    }
    const std::uint64_t sum = row->dimension_sum();
    const std::uint64_t genus = ecto::genus_x1(N);
    std::cout << "dimension sum = " << sum << ", genus of X_1(" << N << ") = " << genus << " ("
              << (sum == genus ? "consistent" : "INCONSISTENT") << ")\n";
    const auto finite = ecto::j1_finite_over_q(table, N);
    std::cout << "J_1(" << N << ")(Q) finite: " << (finite.value_or(false) ? "yes" : "not established")
              << "\n";
    return sum == genus ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic curve torsion obstruction engine"};
    app.set_version_flag("--version", std::string(ecto::tool_version_string()));
    app.require_subcommand(1);

    std::string table_flag;
    app.add_option("--table", table_flag, "path to the J_1(N) decomposition table");

    // check
    auto* check = app.add_subcommand("check", "run the torsion obstruction for one level N");
    std::uint32_t check_n = 0;
    std::uint32_t check_degree = 3;
    std::uint64_t check_prime = 3;
    std::string cert_path;
    bool do_cross = false;
    check->add_option("--n", check_n, "level N")->required();
    check->add_option("--degree", check_degree, "number field degree d (default 3)");
    check->add_option("--prime", check_prime, "reduction prime p (default 3)");
    check->add_option("--certificate", cert_path, "write the certificate as canonical JSON");
    check->add_flag("--cross-validate", do_cross, "confirm the verdict by exhaustive curve enumeration");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exhaustively enumerate curves over F_q");
    std::uint64_t enum_q = 0;
    bool show_orders = false;
    bool show_traces = false;
    std::uint64_t with_order = 0;
    enumerate->add_option("--q", enum_q, "field order (prime power within the enumeration cap)")->required();
    auto* opt_orders = enumerate->add_flag("--orders", show_orders, "print the realized order multiset (default)");
    auto* opt_traces = enumerate->add_flag("--traces", show_traces, "print the realized trace set");
    auto* opt_with = enumerate->add_option("--with-point-of-order", with_order,
                                           "list curves having a point of this exact order");
    opt_orders->excludes(opt_traces)->excludes(opt_with);
    opt_traces->excludes(opt_with);

    // waterhouse
    auto* waterhouse = app.add_subcommand("waterhouse", "print the admissible trace classification for F_q");
    std::uint64_t wh_q = 0;
    waterhouse->add_option("--q", wh_q, "prime power field order")->required();

    // genus
    auto* genus = app.add_subcommand("genus", "print the genus of X_1(N)");
    std::uint32_t genus_n = 0;
    genus->add_option("--n", genus_n, "level N (N >= 5)")->required();

    // tables
    auto* tables = app.add_subcommand("tables", "print the decomposition row for J_1(N)");
    std::uint32_t tables_n = 0;
    tables->add_option("--n", tables_n, "level N")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(table_flag, check_n, check_degree, check_prime, cert_path, do_cross);
        if (enumerate->parsed()) return cmd_enumerate(enum_q, show_orders, show_traces, with_order);
        if (waterhouse->parsed()) return cmd_waterhouse(wh_q);
        if (genus->parsed()) return cmd_genus(genus_n);
        if (tables->parsed()) return cmd_tables(table_flag, tables_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
