#pragma once

#include <vector>

#include "shifted/betti_table.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// Parameters of the m-th symbolic power of the codimension-c monomial
/// star configuration ideal in n variables: the intersection of the
/// m-th powers of all c-variable coordinate primes.
struct star_params {
    int n = 0;
    int c = 0;
    int m = 0;

    star_params(int n, int c, int m);
};

/// Partition generators: partitions of m into at most c parts, written
/// non-decreasing of length c, extended by repeating the last part up
/// to length n.
symmetric_ideal star_ideal(const star_params& params);

/// Degrees d with a non-zero Betti row: {m + k(n-c) : k = 1..m},
/// deduplicated (they collapse when c = n).
std::vector<int> star_strand_degrees(const star_params& params);

/// Bottom row of the Betti table (degree m(1+n-c), m >= 2):
/// binom(n, c-1) * binom(c-1, i).
bigint star_bottom_row(const star_params& params, int i);

/// Top row (degree m+n-c, m <= c):
/// binom(n, c-m-i) * binom(m+n-c+i-1, i).
bigint star_top_row(const star_params& params, int i);

/// Symbolic square closed formula (c >= 2): beta_{i,i+j}, zero off the
/// two strands n-c+2 and 2(n-c+1). Coinciding strands (c = n) are
/// summed.
bigint star_betti_m2(const star_params& params, int i, int j);

/// Symbolic cube closed formula (c >= 3): strands n-c+3, 2(n-c+1)+1 and
/// 3(n-c+1).
bigint star_betti_m3(const star_params& params, int i, int j);

/// Castelnuovo-Mumford regularity m(1 + n - c).
int star_regularity(const star_params& params);

/// Number of minimal generators of the symbolic cube that are not in
/// the cube of the ideal: binom(n, c-2) * (n-c+2).
bigint third_symbolic_defect(int n, int c);

/// Full Betti table assembled from the closed row formulas; available
/// for m <= 3 (m = 1 uses the squarefree top-row formula alone).
betti_table star_closed_form_table(const star_params& params);

} // namespace shifted
