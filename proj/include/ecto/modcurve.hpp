#ifndef ECTO_MODCURVE_HPP
#define ECTO_MODCURVE_HPP

// Data about the modular curves X_1(N) and their Jacobians J_1(N):
//
//  * the complete lists of levels N for which X_1(N) has gonality 1, 2 or 3
//    (Ishii-Momose for the 2-gonal levels, Jeon-Kim-Schweizer for 3-gonal);
//  * the decomposition of J_1(N) into simple modular abelian varieties with
//    L(A_i, 1) vanishing flags, shipped as a text file and loaded at startup
//    (recomputing it needs modular symbols and L-values, which is out of
//    scope here -- the sum of the factor dimensions is instead validated
//    against the genus);
//  * the genus of X_1(N) for N >= 5 from
//        g = 1 + mu/12 - eps/2,
//        mu  = (N^2 / 2) * prod_{p | N} (1 - 1/p^2),
//        eps = (1/2) * sum_{d | N} phi(d) phi(N/d),
//    evaluated in exact integer arithmetic with integrality asserts.
//
// Decomposition file format: one record per line,
//     <N> <dim>,<mult>,<flag> <dim>,<mult>,<flag> ...
// where <flag> is T if L(A_i, 1) = 0 and F otherwise; '#' starts a comment.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecto/intmath.hpp"

namespace ecto {

/// Levels with a genus-0 (equivalently 1-gonal) modular curve X_1(N).
inline constexpr std::array<std::uint32_t, 11> kGenusZeroLevels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};

/// Levels with a 2-gonal X_1(N): the genus-0 list plus 11, 14, 15 (g = 1) and
/// 13, 16, 18 (g = 2).
inline constexpr std::array<std::uint32_t, 17> kTwoGonalLevels = {1,  2,  3,  4,  5,  6,  7,  8, 9,
                                                                  10, 11, 12, 13, 14, 15, 16, 18};

/// Levels with a 3-gonal X_1(N): the 2-gonal list plus 20 (g = 3).
inline constexpr std::array<std::uint32_t, 18> kThreeGonalLevels = {1,  2,  3,  4,  5,  6,  7,  8,  9,
                                                                    10, 11, 12, 13, 14, 15, 16, 18, 20};

/// True iff Gon(X_1(N)) > d, read off the embedded lists.  Only d in {1,2,3}
/// is classified.
inline bool gonality_exceeds(std::uint32_t N, std::uint32_t d) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    const auto absent = [N](const auto& list) {
        return std::find(list.begin(), list.end(), N) == list.end();
    };
    switch (d) {
        case 1: return absent(kGenusZeroLevels);
        case 2: return absent(kTwoGonalLevels);
        case 3: return absent(kThreeGonalLevels);
        default: throw std::domain_error("gonality data only covers d in {1, 2, 3}");
    }
}

/// Genus of X_1(N) for N >= 5.
inline std::uint64_t genus_x1(std::uint32_t N) {
    if (N < 5) throw std::domain_error("genus formula implemented for N >= 5 only");
    const std::uint64_t n = N;

    // mu2 = N^2 prod (1 - 1/p^2), twice the index mu
    std::uint64_t mu2 = n * n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        mu2 = mu2 / (p * p) * (p * p - 1);
    }
    if (mu2 % 2 != 0) throw std::logic_error("index of Gamma_1(N) is not integral");
    const std::uint64_t mu = mu2 / 2;

    std::uint64_t cusp2 = 0;  // twice the cusp count
    for (std::uint64_t d : divisors(n)) cusp2 += euler_phi(d) * euler_phi(n / d);
    if (cusp2 % 2 != 0) throw std::logic_error("cusp count of X_1(N) is not integral");
    const std::uint64_t eps = cusp2 / 2;

    const std::int64_t g12 = 12 + static_cast<std::int64_t>(mu) - 6 * static_cast<std::int64_t>(eps);
    if (g12 < 0 || g12 % 12 != 0) throw std::logic_error("genus of X_1(N) is not integral");
    return static_cast<std::uint64_t>(g12 / 12);
}

/// One simple factor A_i of J_1(N): its dimension, multiplicity, and whether
/// L(A_i, 1) vanishes.
struct DecompositionFactor {
    std::uint32_t dimension = 0;
    std::uint32_t multiplicity = 1;
    bool l_vanishes = false;

    friend bool operator==(const DecompositionFactor&, const DecompositionFactor&) = default;
};

struct DecompositionRow {
    std::uint32_t level = 0;
    std::vector<DecompositionFactor> factors;

    std::uint64_t dimension_sum() const {
        std::uint64_t s = 0;
        for (const auto& f : factors) s += std::uint64_t{f.dimension} * f.multiplicity;
        return s;
    }

    bool any_l_vanishes() const {
        for (const auto& f : factors) {
            if (f.l_vanishes) return true;
        }
        return false;
    }

    friend bool operator==(const DecompositionRow&, const DecompositionRow&) = default;
};

class DecompositionTable {
  public:
    static DecompositionTable load(std::istream& in) {
        DecompositionTable table;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::uint32_t level = 0;
            if (!(ls >> level)) continue;  // blank or comment-only line
            DecompositionRow row;
            row.level = level;
            std::string tok;
            while (ls >> tok) {
                row.factors.push_back(parse_factor(tok, lineno));
            }
            if (row.factors.empty()) {
                throw std::runtime_error("decomposition table line " + std::to_string(lineno) +
                                         ": level without factors");
            }
            if (!table.rows_.emplace(level, std::move(row)).second) {
                throw std::runtime_error("decomposition table line " + std::to_string(lineno) +
                                         ": duplicate level " + std::to_string(level));
            }
        }
        return table;
    }

    static DecompositionTable load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open decomposition table: " + path);
        return load(in);
    }

    const DecompositionRow* find(std::uint32_t N) const {
        const auto it = rows_.find(N);
        return it == rows_.end() ? nullptr : &it->second;
    }

    const std::map<std::uint32_t, DecompositionRow>& rows() const { return rows_; }

    /// Levels whose factor dimensions do not sum to the genus of X_1(N);
    /// empty for a faithful transcription.
    std::vector<std::uint32_t> inconsistent_levels() const {
        std::vector<std::uint32_t> bad;
        for (const auto& [level, row] : rows_) {
            if (row.dimension_sum() != genus_x1(level)) bad.push_back(level);
        }
        return bad;
    }

  private:
    static DecompositionFactor parse_factor(const std::string& tok, std::size_t lineno) {
        const auto fail = [&](const char* what) {
            throw std::runtime_error("decomposition table line " + std::to_string(lineno) + ": " + what +
                                     " in '" + tok + "'");
        };
        DecompositionFactor f;
        std::istringstream ts(tok);
        char c1 = 0, c2 = 0, flag = 0;
        if (!(ts >> f.dimension >> c1 >> f.multiplicity >> c2 >> flag) || c1 != ',' || c2 != ',') {
            fail("expected dim,mult,flag");
        }
        if (ts.rdbuf()->in_avail() != 0) fail("trailing characters");
        if (f.dimension < 1) fail("dimension must be positive");
        if (f.multiplicity < 1) fail("multiplicity must be positive");
        if (flag == 'T') {
            f.l_vanishes = true;
        } else if (flag == 'F') {
            f.l_vanishes = false;
        } else {
            fail("flag must be T or F");
        }
        return f;
    }

    std::map<std::uint32_t, DecompositionRow> rows_;
};

/// Whether J_1(N)(Q) is known finite: true when every factor of the
/// decomposition has L(A_i, 1) != 0, false when some factor's L-value
/// vanishes, and nullopt when N has no row (absence of data is never
/// treated as evidence).
inline std::optional<bool> j1_finite_over_q(const DecompositionTable& table, std::uint32_t N) {
    const DecompositionRow* row = table.find(N);
    if (!row) return std::nullopt;
    return !row->any_l_vanishes();
}

}  // namespace ecto

#endif  // ECTO_MODCURVE_HPP
