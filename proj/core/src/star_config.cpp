#include "shifted/star_config.hpp"

#include <algorithm>
#include <functional>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

/// Non-decreasing partitions of m into at most c parts, left-padded
/// with zeros to length exactly c.
void padded_partitions_of(int m, int c, std::vector<std::vector<int>>& out) {
    std::vector<int> parts;
    // Build parts descending (largest first), then reverse and pad.
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            if (static_cast<int>(parts.size()) <= c) {
                std::vector<int> padded(static_cast<std::size_t>(c) -
                                            parts.size(),
                                        0);
                padded.insert(padded.end(), parts.rbegin(), parts.rend());
                out.push_back(std::move(padded));
            }
            return;
        }
        if (static_cast<int>(parts.size()) == c)
            return;
        for (int next = std::min(remaining, max_part); next >= 1; --next) {
            parts.push_back(next);
            recurse(remaining - next, next);
            parts.pop_back();
        }
    };
    recurse(m, m);
}

} // namespace

star_params::star_params(int n_, int c_, int m_) : n(n_), c(c_), m(m_) {
    if (n < 1 || c < 1 || c > n)
        throw validation_error("star_params: need 1 <= c <= n");
    if (m < 1)
        throw validation_error("star_params: need m >= 1");
}

symmetric_ideal star_ideal(const star_params& params) {
    std::vector<std::vector<int>> heads;
    padded_partitions_of(params.m, params.c, heads);
    std::vector<partition> generators;
    generators.reserve(heads.size());
    for (std::vector<int>& head : heads) {
        const int tail = head.back();
        head.resize(static_cast<std::size_t>(params.n), tail);
        generators.emplace_back(std::move(head));
    }
    return symmetric_ideal::normalized(params.n, std::move(generators));
}

std::vector<int> star_strand_degrees(const star_params& params) {
    std::vector<int> degrees;
    for (int k = 1; k <= params.m; ++k)
        degrees.push_back(params.m + k * (params.n - params.c));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return degrees;
}

bigint star_bottom_row(const star_params& params, int i) {
    if (params.m < 2)
        throw validation_error("star_bottom_row: requires m >= 2");
    return binomial(params.n, params.c - 1) * binomial(params.c - 1, i);
}

bigint star_top_row(const star_params& params, int i) {
    if (params.m > params.c)
        throw validation_error("star_top_row: requires m <= c");
    return binomial(params.n, params.c - params.m - i) *
           binomial(params.m + params.n - params.c + i - 1, i);
}

bigint star_betti_m2(const star_params& params, int i, int j) {
    if (params.m != 2)
        throw validation_error("star_betti_m2: requires m = 2");
    if (params.c < 2)
        throw validation_error("star_betti_m2: requires c >= 2");
    const int n = params.n;
    const int c = params.c;
    bigint value = 0;
    if (j == n - c + 2)
        value += binomial(n, c - 2 - i) * binomial(n - c + 1 + i, i);
    if (j == 2 * (n - c + 1))
        value += binomial(n, c - 1) * binomial(c - 1, i);
    return value;
}

bigint star_betti_m3(const star_params& params, int i, int j) {
    if (params.m != 3)
        throw validation_error("star_betti_m3: requires m = 3");
    if (params.c < 3)
        throw validation_error("star_betti_m3: requires c >= 3");
    const int n = params.n;
    const int c = params.c;
    bigint value = 0;
    if (j == n - c + 3)
        value += binomial(n, c - 3 - i) * binomial(n - c + 2 + i, i);
    if (j == 2 * (n - c + 1) + 1)
        value += binomial(n, c - 2) *
                 (binomial(c - 2, i) + (n - c + 1) * binomial(c - 1, i));
    if (j == 3 * (n - c + 1))
        value += binomial(n, c - 1) * binomial(c - 1, i);
    return value;
}

int star_regularity(const star_params& params) {
    return params.m * (1 + params.n - params.c);
}

bigint third_symbolic_defect(int n, int c) {
    if (n < 1 || c < 1 || c > n)
        throw validation_error("third_symbolic_defect: need 1 <= c <= n");
    return binomial(n, c - 2) * (n - c + 2);
}

betti_table star_closed_form_table(const star_params& params) {
    if (params.m > 3)
        throw validation_error(
            "star_closed_form_table: closed row formulas cover m <= 3 only");
    betti_table table;
    for (int j : star_strand_degrees(params)) {
        for (int i = 0; i <= params.n; ++i) {
            bigint value;
            if (params.m == 1)
                value = (j == params.m + params.n - params.c)
                            ? star_top_row(params, i)
                            : bigint(0);
            else if (params.m == 2)
                value = star_betti_m2(params, i, j);
            else
                value = star_betti_m3(params, i, j);
            table.add(i, i + j, value);
        }
    }
    return table;
}

} // namespace shifted
