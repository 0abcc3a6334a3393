#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "warpmat/knot.hpp"
#include "warpmat/matrix.hpp"
#include "warpmat/matrix_io.hpp"

namespace warpmat::testing {

// Published matrices, row for row.
inline constexpr std::string_view kCurlMatrix =
    "0 1\n"
    "1 0\n";

inline constexpr std::string_view kTwistMatrix =
    "0 1 2 1\n"
    "1 0 1 0\n"
    "1 2 1 2\n"
    "2 1 0 1\n";

// First 8x6 display: the trefoil projection.
inline constexpr std::string_view kTrefoilMatrix =
    "0 1 2 3 2 1\n"
    "1 0 1 2 3 2\n"
    "1 2 1 2 1 2\n"
    "1 2 3 2 1 0\n"
    "2 1 0 1 2 3\n"
    "2 1 2 1 2 1\n"
    "2 3 2 1 0 1\n"
    "3 2 1 0 1 2\n";

// Second 8x6 display.
inline constexpr std::string_view kSecondC3Matrix =
    "0 1 2 3 2 1\n"
    "1 0 1 2 1 0\n"
    "1 2 1 2 1 2\n"
    "1 2 3 2 3 2\n"
    "2 1 0 1 0 1\n"
    "2 3 2 1 2 3\n"
    "2 1 2 1 2 1\n"
    "3 2 1 0 1 2\n";

// Third 8x6 display, also the input of the worked U = MA example.
inline constexpr std::string_view kThirdC3Matrix =
    "0 1 2 1 2 1\n"
    "1 0 1 0 1 0\n"
    "1 2 1 2 3 2\n"
    "1 2 3 2 1 2\n"
    "2 1 0 1 2 1\n"
    "2 3 2 3 2 3\n"
    "2 1 2 1 0 1\n"
    "3 2 1 2 1 2\n";

// U = MA printed for kThirdC3Matrix.
inline const std::vector<std::vector<int>> kThirdC3Differences = {
    {1, 1, -1, 1, -1, -1},  {-1, 1, -1, 1, -1, 1}, {1, -1, 1, 1, -1, -1}, {1, 1, -1, -1, 1, -1},
    {-1, -1, 1, 1, -1, 1},  {1, -1, 1, -1, 1, -1}, {-1, 1, -1, -1, 1, 1}, {-1, -1, 1, -1, 1, 1},
};

inline constexpr std::string_view kTrefoilCode = "O1+U2+O3+U1+O2+U3+";

inline WarpingMatrix matrix(std::string_view text) { return parse_matrix_text(text); }

/// Random Gauss data, usually virtual: a shuffled double-occurrence word, a random choice of
/// which occurrence is the overpass, and random signs.
inline OrientedKnotDiagram random_diagram(std::mt19937_64& rng, int c) {
    std::vector<int> word;
    for (int id = 1; id <= c; ++id) {
        word.push_back(id);
        word.push_back(id);
    }
    std::shuffle(word.begin(), word.end(), rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<char> over_first(static_cast<std::size_t>(c) + 1);
    for (int id = 1; id <= c; ++id) over_first[id] = coin(rng);
    std::vector<char> seen(static_cast<std::size_t>(c) + 1, 0);
    std::vector<Visit> visits;
    for (int id : word) {
        const bool first = !seen[id];
        seen[id] = 1;
        visits.push_back(Visit{id, (first == static_cast<bool>(over_first[id])) ? Strand::Over : Strand::Under});
    }
    std::vector<Sign> signs;
    for (int id = 1; id <= c; ++id) signs.push_back(coin(rng) ? Sign::Positive : Sign::Negative);
    return OrientedKnotDiagram(std::move(visits), std::move(signs));
}

/// Closure of a random braid with c letters and a single component, so the
/// Gauss code is realizable in the plane. Left strand over means positive.
inline OrientedKnotDiagram random_planar_diagram(std::mt19937_64& rng, int c) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        const int n = std::uniform_int_distribution<int>(2, c + 1)(rng);
        std::uniform_int_distribution<int> gen(0, n - 2);
        std::vector<int> letters(c);
        std::vector<bool> positive(c);
        for (int k = 0; k < c; ++k) {
            letters[k] = gen(rng);
            positive[k] = coin(rng);
        }
        std::vector<Visit> visits;
        int p = 0;
        do {
            for (int k = 0; k < c; ++k) {
                const int i = letters[k];
                if (p != i && p != i + 1) continue;
                const bool left = p == i;
                visits.push_back(Visit{k + 1, left == positive[k] ? Strand::Over : Strand::Under});
                p = left ? i + 1 : i;
            }
        } while (p != 0);
        if (static_cast<int>(visits.size()) != 2 * c) continue;  // more than one component
        std::vector<Sign> signs;
        for (int k = 0; k < c; ++k) signs.push_back(positive[k] ? Sign::Positive : Sign::Negative);
        const OrientedKnotDiagram d(std::move(visits), std::move(signs));
        return rotated(d, std::uniform_int_distribution<int>(0, 2 * c - 1)(rng));
    }
}

inline int random_crossings(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace warpmat::testing
