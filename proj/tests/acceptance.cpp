// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Takes the CLI binary as
// argv[1]; exits with the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecto/certificate_json.hpp"
#include "ecto/gf.hpp"
#include "ecto/modcurve.hpp"
#include "ecto/obstruction.hpp"
#include "ecto/waterhouse.hpp"
#include "ecto/weierstrass.hpp"

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void report(int number, bool pass, const std::string& text) {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << text << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::set<std::int64_t> admissible_trace_set(std::uint64_t p, std::uint32_t n) {
    const std::int64_t tmax = static_cast<std::int64_t>(ecto::isqrt(4 * ecto::checked_pow(p, n)));
    std::set<std::int64_t> ts;
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        if (ecto::admissible_trace(t, p, n).admissible) ts.insert(t);
    }
    return ts;
}

const std::vector<std::pair<std::uint64_t, std::uint32_t>> kAcceptanceFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}};

void criterion_1(const std::string& cli, const fs::path& tmp) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    std::vector<ecto::CertificateDocument> docs;
    for (std::uint32_t n : {49u, 40u, 25u, 22u}) {
        const fs::path cert = tmp / ("check_" + std::to_string(n) + ".json");
        const int code = run_cli(cli, "check --n " + std::to_string(n) +
                                          " --degree 3 --prime 3 --certificate " + cert.string());
        if (code != 0) {
            pass = false;
            why << " N=" << n << " exit=" << code;
            continue;
        }
        docs.push_back(ecto::parse_certificate(slurp(cert)));
    }
    const double elapsed = seconds_since(start);
    for (const auto& doc : docs) {
        const std::uint32_t n = doc.certificate.level;
        if (doc.certificate.verdict != ecto::Verdict::RuledOut) {
            pass = false;
            why << " N=" << n << " not RuledOut";
            continue;
        }
        const std::string& evidence = doc.certificate.steps.back().evidence;
        for (const char* marker : {"S_1={}", "S_2={}", "S_3={}"}) {
            if (evidence.find(marker) == std::string::npos) {
                pass = false;
                why << " N=" << n << " missing " << marker;
            }
        }
        if (n == 25 && evidence.find("m=25 t=3 inadmissible") == std::string::npos) {
            pass = false;
            why << " N=25 missing trace-3 rejection";
        }
        if (n == 22 && evidence.find("m=22 t=6 inadmissible") == std::string::npos) {
            pass = false;
            why << " N=22 missing trace-6 rejection";
        }
        if ((n == 49 || n == 40) && evidence.find("m=") != std::string::npos) {
            pass = false;
            why << " N=" << n << " should be excluded by the Hasse interval alone";
        }
    }
    if (elapsed >= 1.0) {
        pass = false;
        why << " runtime " << elapsed << "s >= 1s";
    }
    std::ostringstream text;
    text << "theorem reproduction: check rules out N in {49,40,25,22} with the expected certificates ("
         << elapsed << "s)" << why.str();
    report(1, pass, text.str());
}

void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    for (const auto& [p, n] : kAcceptanceFields) {
        ecto::Field k(p, n);
        if (ecto::realized_traces(k) != admissible_trace_set(p, n)) {
            pass = false;
            why << " mismatch at q=" << k.size();
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 300.0) {
        pass = false;
        why << " runtime " << elapsed << "s >= 300s";
    }
    std::ostringstream text;
    text << "Waterhouse bidirectional verification over 12 prime powers, exact set equality (" << elapsed
         << "s)" << why.str();
    report(2, pass, text.str());
}

void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    for (std::uint32_t f = 1; f <= 3; ++f) {
        ecto::Field k(3, f);
        for (std::uint32_t n : {49u, 40u, 25u, 22u}) {
            const auto found = ecto::curves_with_point_of_order(k, n);
            if (!found.empty()) {
                pass = false;
                why << " q=" << k.size() << " N=" << n << " found " << found.size();
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        pass = false;
        why << " runtime " << elapsed << "s >= 60s";
    }
    std::ostringstream text;
    text << "oracle confirmation: no curve over F_3, F_9, F_27 has a point of order 49, 40, 25 or 22 ("
         << elapsed << "s)" << why.str();
    report(3, pass, text.str());
}

void criterion_4() {
    bool pass = true;
    std::ostringstream why;
    const auto table = ecto::DecompositionTable::load_file(ECTO_TABLE_FILE);
    if (table.rows().size() != 18) {
        pass = false;
        why << " expected 18 rows, have " << table.rows().size();
    }
    for (const auto& [level, row] : table.rows()) {
        if (row.dimension_sum() != ecto::genus_x1(level)) {
            pass = false;
            why << " N=" << level << " sum=" << row.dimension_sum();
        }
    }
    const std::map<std::uint32_t, std::uint64_t> expected = {{49, 69}, {25, 12}, {40, 25}, {22, 6}};
    for (const auto& [level, genus] : expected) {
        if (ecto::genus_x1(level) != genus || !table.find(level) ||
            table.find(level)->dimension_sum() != genus) {
            pass = false;
            why << " N=" << level << " != " << genus;
        }
    }
    report(4, pass, "table consistency: dimension sums equal the genus for all 18 levels" + why.str());
}

void criterion_5() {
    bool pass = true;
    std::ostringstream why;
    const auto expect = [&](std::uint32_t n, std::uint64_t g) {
        if (ecto::genus_x1(n) != g) {
            pass = false;
            why << " N=" << n << " genus=" << ecto::genus_x1(n) << " expected " << g;
        }
    };
    for (std::uint32_t n : {5u, 6u, 7u, 8u, 9u, 10u, 12u}) expect(n, 0);
    for (std::uint32_t n : {11u, 14u, 15u}) expect(n, 1);
    for (std::uint32_t n : {13u, 16u, 18u}) expect(n, 2);
    expect(20, 3);
    report(5, pass, "gonality/genus cross-check: every parenthetical genus value reproduced" + why.str());
}

void criterion_6(const std::string& cli, const fs::path& tmp) {
    bool pass = true;
    std::ostringstream why;
    for (std::uint32_t n : {20u, 65u, 63u}) {
        const int code = run_cli(cli, "check --n " + std::to_string(n));
        if (code != 2) {
            pass = false;
            why << " N=" << n << " exit=" << code;
        }
    }
    const fs::path cert = tmp / "check_25_p5.json";
    const int code = run_cli(cli, "check --n 25 --prime 5 --certificate " + cert.string());
    if (code != 2) {
        pass = false;
        why << " (25,p=5) exit=" << code;
    } else {
        const auto doc = ecto::parse_certificate(slurp(cert));
        bool hypothesis_failed = false;
        for (const auto& s : doc.certificate.steps) {
            if (s.statement == "hypothesis: p does not divide N" && s.status == ecto::StepStatus::Fail) {
                hypothesis_failed = true;
            }
        }
        if (!hypothesis_failed) {
            pass = false;
            why << " (25,p=5) p|N step did not fail";
        }
    }
    report(6, pass,
           "negative controls: N=20 (gonality), N=65/63 (finiteness), (25,p=5) (p|N) all exit 2" +
               why.str());
}

void criterion_7() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;

    // group law associativity: all triples over F_3, strided triples over F_9
    for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{3, 1}, {3, 2}}) {
        ecto::Field k(p, n);
        ecto::FieldTables tables(k);
        std::uint64_t violations = 0;
        ecto::enumerate_curves(tables, [&](const ecto::WeierstrassCurve& E) {
            const auto pts = ecto::curve_points(E, tables);
            const std::size_t stride = k.size() == 3 ? 1 : pts.size() / 3 + 1;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                for (std::size_t j = 0; j < pts.size(); j += stride) {
                    for (std::size_t l = 0; l < pts.size(); l += stride) {
                        const auto lhs = ecto::detail::add_unchecked(
                            E, ecto::detail::add_unchecked(E, pts[i], pts[j]), pts[l]);
                        const auto rhs = ecto::detail::add_unchecked(
                            E, pts[i], ecto::detail::add_unchecked(E, pts[j], pts[l]));
                        if (lhs != rhs) ++violations;
                    }
                }
            }
        });
        if (violations != 0) {
            pass = false;
            why << " associativity violations over q=" << k.size() << ": " << violations;
        }
    }

    // Hasse bound and group shape invariants on every enumerated curve, q <= 27
    for (const auto& [p, n] : kAcceptanceFields) {
        ecto::Field k(p, n);
        ecto::FieldTables tables(k);
        const std::int64_t q = static_cast<std::int64_t>(k.size());
        std::uint64_t bad_hasse = 0;
        std::uint64_t bad_shape = 0;
        ecto::enumerate_curves(tables, [&](const ecto::WeierstrassCurve& E) {
            const std::uint64_t order = ecto::count_points(E, tables);
            const std::int64_t t = q + 1 - static_cast<std::int64_t>(order);
            if (t * t > 4 * q) ++bad_hasse;
            const ecto::GroupShape s = ecto::group_shape(E, tables);
            if (s.d1 * s.d2 != order || s.d2 % s.d1 != 0 ||
                static_cast<std::uint64_t>(q - 1) % s.d1 != 0) {
                ++bad_shape;
            }
        });
        if (bad_hasse != 0 || bad_shape != 0) {
            pass = false;
            why << " q=" << q << " hasse=" << bad_hasse << " shape=" << bad_shape;
        }
    }

    const double elapsed = seconds_since(start);
    std::ostringstream text;
    text << "property suites: associativity, Hasse bound and group shape invariants on every curve ("
         << elapsed << "s)" << why.str();
    report(7, pass, text.str());
}

void criterion_8(const std::string& cli, const fs::path& tmp) {
    bool pass = true;
    std::ostringstream why;
    const fs::path out1 = tmp / "det_1.json";
    const fs::path out2 = tmp / "det_2.json";
    const int c1 = run_cli(cli, "check --n 25 --certificate " + out1.string());
    const int c2 = run_cli(cli, "check --n 25 --certificate " + out2.string());
    if (c1 != 0 || c2 != 0) {
        pass = false;
        why << " exits " << c1 << "," << c2;
    } else {
        const std::string a = slurp(out1);
        const std::string b = slurp(out2);
        if (a.empty() || a != b) {
            pass = false;
            why << " certificate files differ";
        }
    }
    report(8, pass, "determinism: two runs produce byte-identical certificate files" + why.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-ecto-cli>\n";
        return 64;
    }
    const std::string cli = argv[1];
    const fs::path tmp = fs::temp_directory_path() / ("ecto-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    try {
        criterion_1(cli, tmp);
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6(cli, tmp);
        criterion_7();
        criterion_8(cli, tmp);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        fs::remove_all(tmp);
        return 65;
    }

    fs::remove_all(tmp);
    if (g_failures == 0) {
        std::cout << "all criteria passed" << std::endl;
    } else {
        std::cout << g_failures << " criteria failed" << std::endl;
    }
    return g_failures;
}
