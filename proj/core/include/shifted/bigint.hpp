#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shifted {

/// Exact arbitrary-precision integer. Counts, binomials and dimensions are
/// kept exact everywhere; nothing in the library ever rounds or wraps.
using bigint = mpz_class;

bigint factorial(long k);

/// binom(n, k), with binom(n, k) = 0 whenever n < 0, k < 0 or k > n.
/// The closed Betti formulas rely on out-of-range binomials vanishing.
bigint binomial(long n, long k);

/// Product of factorials of the entries, e.g. type(lambda)! = t_0! t_1! ...
bigint factorial_product(const std::vector<int>& counts);

std::string to_string(const bigint& v);

} // namespace shifted
