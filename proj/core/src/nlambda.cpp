#include "shifted/nlambda.hpp"

#include "shifted/errors.hpp"

namespace shifted {

nlambda::nlambda(partition generator) : lambda(std::move(generator)) {
    if (lambda.zero())
        throw validation_error("nlambda: the zero partition has no subquotient");
    const partition_stats st = stats(lambda);
    p = st.p;
    r = st.r;
}

bool nlambda_contains(const nlambda& module, const partition& mu) {
    const partition& lambda = module.lambda;
    const int n = lambda.length();
    if (mu.length() != n)
        throw validation_error("nlambda_contains: length mismatch");
    for (int k = 0; k < module.p; ++k)
        if (mu[k] != lambda[k])
            return false;
    const int top = lambda.largest();
    if (module.p < n && mu[module.p] < top - 1)
        return false;
    return mu[n - module.r] >= top;
}

bigint nlambda_betti(const nlambda& module, int i) {
    if (i < 0)
        return 0;
    const partition& lambda = module.lambda;
    const int n = lambda.length();
    const int p = module.p;
    const int r = module.r;

    // p! / type(lambda_{<=p})!, an empty product when p = 0.
    const bigint orbit_factor =
        factorial(p) / factorial_product(stats(lambda.prefix(p)).type);

    bigint sum = 0;
    for (int k = 0; k <= i; ++k) {
        const int l = i - k;
        sum += orbit_factor * binomial(n, p) * binomial(n - p, r + k) *
               binomial(r + k - 1, k) * binomial(p, l);
    }
    return sum;
}

bigint nlambda_betti(const partition& lambda, int i) {
    return nlambda_betti(nlambda(lambda), i);
}

std::vector<partition> filtration(const symmetric_ideal& ideal) {
    if (auto witness = shifted_witness(ideal))
        throw precondition_error("filtration: ideal is not shifted; generator " +
                                 to_string(witness->generator) + " leaves " +
                                 to_string(witness->missing) + " outside the ideal");
    return ideal.generators(); // stored in lex_less order
}

betti_table betti_closed_form(const symmetric_ideal& ideal) {
    if (auto witness = shifted_witness(ideal))
        throw precondition_error("betti_closed_form: ideal is not shifted; generator " +
                                 to_string(witness->generator) + " leaves " +
                                 to_string(witness->missing) + " outside the ideal");
    betti_table table;
    const int n = ideal.var_count();
    for (const partition& lambda : ideal.generators()) {
        const nlambda module(lambda);
        const int d = lambda.degree();
        for (int i = 0; i < n; ++i)
            table.add(i, i + d, nlambda_betti(module, i));
    }
    return table;
}

} // namespace shifted
