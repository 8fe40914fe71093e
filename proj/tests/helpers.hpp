#pragma once

#include <string>
#include <vector>

#include "plactic/representation.hpp"
#include "plactic/rng.hpp"
#include "plactic/tableau.hpp"
#include "plactic/tropical.hpp"

namespace testutil {

using namespace plactic;

inline Word random_word(int n, int max_len, uint64_t seed, uint64_t trial) {
    auto rng = trial_rng(seed, trial);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(1, n);
    std::vector<int> ls(len(rng));
    for (int& l : ls) l = letter(rng);
    return Word(n, std::move(ls));
}

/// The published 16x16 image of generator 3 at rank 4, with the diagonal
/// cell at ({3,4},{3,4}) taking its definitional value 1 rather than the
/// printed 0. '.' encodes -inf.
inline std::vector<std::string> figure_rank4_gen3() {
    return {
        "1...............",
        ".1111...........",
        "..011...........",
        "...11...........",
        "....1...........",
        ".....011111.....",
        "......11111.....",
        ".......1.11.....",
        "........001.....",
        ".........01.....",
        "..........1.....",  // printed as 0 in the source figure
        "...........0011.",
        "............011.",
        ".............11.",
        "..............0.",
        "...............0"};
}

inline TropMatrix figure_matrix(const std::vector<Label>& order,
                                const std::vector<std::string>& cells) {
    TropMatrix M(order);
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j)
            if (cells[i][j] != '.') M.at(i, j) = TropValue(cells[i][j] - '0');
    return M;
}

/// The rank-4 pair distinguished only in the cardinality-2 block.
inline Tableau block2_pair_left() {
    return Tableau(4, {{1, 2, 3, 3}, {2, 3, 4}, {4, 4}});
}
inline Tableau block2_pair_right() {
    return Tableau(4, {{1, 2, 3, 3}, {2, 3, 4, 4}, {4}});
}

/// Number of entries <= m in the bottom k rows of T (direct count).
inline long row_count_direct(const Tableau& T, int k, int m) {
    long c = 0;
    for (size_t r = 0; r < T.num_rows() && r < static_cast<size_t>(k); ++r)
        for (int v : T.rows()[r])
            if (v <= m) ++c;
    return c;
}

/// Random tableau whose parameters satisfy i_{x+1,y+1} >= i_{x,y}, built
/// row by row from the top so that both the tableau inequalities and the
/// hypothesis hold by construction.
inline Tableau random_hypothesis_tableau(int n, uint64_t seed, uint64_t trial) {
    auto rng = trial_rng(seed, trial);
    std::uniform_int_distribution<int> small(0, 2);
    std::vector<std::vector<long>> i(n + 2, std::vector<long>(n + 2, 0));
    i[n][n] = small(rng);
    for (int x = n - 1; x >= 1; --x) {
        for (int y = x + 1; y <= n - 1; ++y) i[x][y] = std::max(0L, i[x + 1][y + 1] - small(rng));
        i[x][n] = small(rng);
        long need = 0;
        for (int t = 0; t <= n - x - 1; ++t) {
            long rhs = 0, lhs_tail = 0;
            for (int y = x + 1; y <= x + t + 1; ++y) rhs += i[x + 1][y];
            for (int y = x + 1; y <= x + t; ++y) lhs_tail += i[x][y];
            need = std::max(need, rhs - lhs_tail);
        }
        i[x][x] = need + small(rng);
    }
    TabParams p;
    p.n = n;
    for (int x = 1; x <= n; ++x)
        for (int y = x; y <= n; ++y)
            if (i[x][y] > 0) p.set(x, y, i[x][y]);
    return from_parameters(p);
}

inline bool params_satisfy_hypothesis(const TabParams& p) {
    for (int x = 1; x < p.n; ++x)
        for (int y = x + 1; y < p.n; ++y)
            if (p.get(x + 1, y + 1) < p.get(x, y)) return false;
    return true;
}

}  // namespace testutil
