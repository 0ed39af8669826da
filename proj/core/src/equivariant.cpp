#include "shifted/equivariant.hpp"

#include <sstream>

#include "shifted/errors.hpp"
#include "shifted/nlambda.hpp"

namespace shifted {

bigint hook_specht_dim(int i, int r) {
    if (r < 1)
        throw validation_error("hook_specht_dim: requires r >= 1");
    if (i < 0)
        throw validation_error("hook_specht_dim: requires i >= 0");
    return binomial(r + i - 1, i);
}

bigint u_module_dim(int l, int i, int r) {
    if (i + r > l)
        throw validation_error("u_module_dim: hook (1^i, r) does not fit in " +
                               std::to_string(l) + " letters");
    return binomial(l, i + r) * hook_specht_dim(i, r);
}

std::vector<summand_descriptor> tor_summands(const partition& lambda, int i) {
    const nlambda module(lambda);
    const int n = lambda.length();
    const int p = module.p;
    const int r = module.r;
    const partition prefix = lambda.prefix(p);
    const bigint prefix_orbit = factorial(p) / factorial_product(stats(prefix).type);

    std::vector<summand_descriptor> out;
    if (i < 0)
        return out;
    for (int l = 0; l <= i; ++l) {
        const int k = i - l;
        const bigint dim = binomial(n, p) * prefix_orbit * binomial(p, k) *
                           binomial(n - p, l + r) * binomial(r + l - 1, l);
        if (dim == 0)
            continue;
        out.push_back(summand_descriptor{n, p, prefix, k, l, r, dim});
    }
    return out;
}

std::map<std::pair<int, int>, std::vector<summand_descriptor>>
equivariant_table(const symmetric_ideal& ideal) {
    if (auto witness = shifted_witness(ideal))
        throw precondition_error("equivariant_table: ideal is not shifted; generator " +
                                 to_string(witness->generator) + " leaves " +
                                 to_string(witness->missing) + " outside the ideal");
    std::map<std::pair<int, int>, std::vector<summand_descriptor>> table;
    const int n = ideal.var_count();
    for (const partition& lambda : ideal.generators()) {
        const int d = lambda.degree();
        for (int i = 0; i < n; ++i) {
            std::vector<summand_descriptor> summands = tor_summands(lambda, i);
            if (summands.empty())
                continue;
            auto& cell = table[{i, d}];
            cell.insert(cell.end(), summands.begin(), summands.end());
        }
    }
    return table;
}

std::string to_string(const summand_descriptor& s) {
    std::ostringstream out;
    if (s.p == 0) {
        // No prefix factor: a single induced hook module on n letters.
        out << "U_" << s.n << "^(1^" << s.l << "," << s.r << ")";
        return out.str();
    }
    out << "Ind[S" << s.p << "xS" << (s.n - s.p) << "->S" << s.n << "](M";
    out << to_string(s.lambda_prefix);
    out << " (x) U_" << s.p << "^(1^" << s.k << "))";
    out << " [x] U_" << (s.n - s.p) << "^(1^" << s.l << "," << s.r << ")";
    return out.str();
}

} // namespace shifted
