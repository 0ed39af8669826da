#pragma once

#include <cstddef>
#include <vector>

#include "shifted/betti_table.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// One row of a linear-quotient listing: the generator u at the given
/// position of the total order, the variables generating the colon
/// ideal of the preceding generators by u, and max(u). Variable indices
/// are 1-based (they name x_1 .. x_n).
struct quotient_record {
    exponents u;
    std::vector<int> colon_vars; // ascending
    int max_var = 0;
    std::size_t position = 0; // rank in the order, starting at 1
};

/// All minimal monomial generators of the ideal sorted ascending by
/// `precedes` (orbit blocks ordered by lex_less on partitions, raw
/// exponent tie-break inside each orbit).
std::vector<exponents> generator_order(const symmetric_ideal& ideal);

/// The predicted colon data of a single generator: max_var is the
/// largest index attaining the maximal exponent; colon_vars collects
/// the indices with exponent < max - 1 plus the indices with exponent
/// max - 1 lying below max_var.
quotient_record make_quotient_record(const exponents& u);

/// generator_order with colon data and positions filled in.
/// Requires a shifted ideal.
std::vector<quotient_record> quotient_table(const symmetric_ideal& ideal);

struct quotient_verification {
    bool ok = true;
    std::size_t first_failed_position = 0; // valid when !ok
};

/// Re-computes every colon ideal (u_1,...,u_{k-1}) : u_k directly and
/// compares its minimal generators with the predicted variable set.
quotient_verification verify_linear_quotients(const symmetric_ideal& ideal);

/// Graded Betti numbers from the colon counts:
/// beta_{i,i+j} = sum over generators u of degree j of binom(|C(u)|, i).
betti_table betti_from_quotients(const symmetric_ideal& ideal);

} // namespace shifted
