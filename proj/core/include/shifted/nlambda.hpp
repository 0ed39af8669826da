#pragma once

#include <vector>

#include "shifted/betti_table.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// The orbit subquotient attached to a partition generator lambda:
///   N^lambda = (orbit of x^lambda) / (orbit of x_i * x^lambda : i <= p)
/// with p = p(lambda). It is generated in degree |lambda|, has a linear
/// resolution, and carries one strand of the Betti table of a shifted
/// ideal via the lex_less filtration of the generators.
struct nlambda {
    partition lambda;
    int p = 0;
    int r = 0;

    explicit nlambda(partition generator);
};

/// Membership of mu in P(N^lambda): the prefix mu_{<=p} equals
/// lambda_{<=p}, mu_{p+1} >= lambda_n - 1 and mu_{n-r+1} >= lambda_n.
bool nlambda_contains(const nlambda& module, const partition& mu);

/// beta_i(N^lambda), the closed binomial sum over k + l = i.
bigint nlambda_betti(const nlambda& module, int i);
bigint nlambda_betti(const partition& lambda, int i);

/// The partition generators sorted ascending by lex_less — the order in
/// which the subquotients N^lambda filter the ideal. Requires shifted.
std::vector<partition> filtration(const symmetric_ideal& ideal);

/// beta_{i,i+d}(I) = sum over generators lambda of degree d of
/// beta_i(N^lambda). Requires shifted.
betti_table betti_closed_form(const symmetric_ideal& ideal);

} // namespace shifted
