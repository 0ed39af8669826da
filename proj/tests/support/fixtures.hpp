#pragma once

// Frozen reference data for the worked examples: the two small ideals,
// the 34-row linear-quotient listing, and the symbolic-cube Betti table
// of the 9-variable codimension-4 star configuration.

#include <vector>

#include "shifted/partition.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace fixtures {

/// n = 3, Lambda = {(1,1,1), (0,1,2), (0,0,4)}: strongly shifted,
/// ten minimal generators.
inline shifted::symmetric_ideal example_n3() {
    return shifted::symmetric_ideal::normalized(
        3, {shifted::partition({1, 1, 1}), shifted::partition({0, 1, 2}),
            shifted::partition({0, 0, 4})});
}

/// n = 4, Lambda = {(1,1,2,2), (0,2,2,2), (0,1,2,3)}: shifted but not
/// strongly shifted, 34 minimal generators.
inline shifted::symmetric_ideal example_n4() {
    return shifted::symmetric_ideal::normalized(
        4, {shifted::partition({1, 1, 2, 2}), shifted::partition({0, 2, 2, 2}),
            shifted::partition({0, 1, 2, 3})});
}

struct quotient_row {
    shifted::exponents u;
    std::vector<int> colon_vars; // 1-based, ascending
    int max_var;
};

/// The full 34-row reference listing for example_n4: generator order, the
/// colon ideal of the preceding generators, and max(u).
inline const std::vector<quotient_row>& quotient_rows_n4() {
    static const std::vector<quotient_row> rows = {
        {{2, 2, 1, 1}, {}, 2},
        {{2, 1, 2, 1}, {2}, 3},
        {{2, 1, 1, 2}, {2, 3}, 4},
        {{1, 2, 2, 1}, {1}, 3},
        {{1, 2, 1, 2}, {1, 3}, 4},
        {{1, 1, 2, 2}, {1, 2}, 4},
        {{2, 2, 2, 0}, {4}, 3},
        {{2, 2, 0, 2}, {3}, 4},
        {{2, 0, 2, 2}, {2}, 4},
        {{0, 2, 2, 2}, {1}, 4},
        {{3, 2, 1, 0}, {3, 4}, 1},
        {{3, 2, 0, 1}, {3, 4}, 1},
        {{3, 1, 2, 0}, {2, 4}, 1},
        {{3, 1, 0, 2}, {2, 3}, 1},
        {{3, 0, 2, 1}, {2, 4}, 1},
        {{3, 0, 1, 2}, {2, 3}, 1},
        {{2, 3, 1, 0}, {1, 3, 4}, 2},
        {{2, 3, 0, 1}, {1, 3, 4}, 2},
        {{2, 1, 3, 0}, {1, 2, 4}, 3},
        {{2, 1, 0, 3}, {1, 2, 3}, 4},
        {{2, 0, 3, 1}, {1, 2, 4}, 3},
        {{2, 0, 1, 3}, {1, 2, 3}, 4},
        {{1, 3, 2, 0}, {1, 4}, 2},
        {{1, 3, 0, 2}, {1, 3}, 2},
        {{1, 2, 3, 0}, {1, 2, 4}, 3},
        {{1, 2, 0, 3}, {1, 2, 3}, 4},
        {{1, 0, 3, 2}, {1, 2}, 3},
        {{1, 0, 2, 3}, {1, 2, 3}, 4},
        {{0, 3, 2, 1}, {1, 4}, 2},
        {{0, 3, 1, 2}, {1, 3}, 2},
        {{0, 2, 3, 1}, {1, 2, 4}, 3},
        {{0, 2, 1, 3}, {1, 2, 3}, 4},
        {{0, 1, 3, 2}, {1, 2}, 3},
        {{0, 1, 2, 3}, {1, 2, 3}, 4},
    };
    return rows;
}

struct betti_row {
    int degree;                  // shift degree d; entry (i, i+d)
    std::vector<long> values;    // index i = 0, 1, ...
};

/// Betti table of the symbolic cube of the 9-variable codimension-4
/// star configuration: three strands, totals (345, 980, 936, 300).
inline const std::vector<betti_row>& star_943_rows() {
    static const std::vector<betti_row> rows = {
        {8, {9, 8, 0, 0}},
        {13, {252, 720, 684, 216}},
        {18, {84, 252, 252, 84}},
    };
    return rows;
}

inline const std::vector<long>& star_943_totals() {
    static const std::vector<long> totals = {345, 980, 936, 300};
    return totals;
}

} // namespace fixtures
