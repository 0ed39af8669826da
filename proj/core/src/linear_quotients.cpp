#include "shifted/linear_quotients.hpp"

#include <algorithm>
#include <numeric>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

void require_shifted(const symmetric_ideal& ideal, const char* who) {
    if (auto witness = shifted_witness(ideal)) {
        throw precondition_error(std::string(who) +
                                 ": ideal is not shifted; generator " +
                                 to_string(witness->generator) + " with move k=" +
                                 std::to_string(witness->from_k) + " leaves " +
                                 to_string(witness->missing) + " outside the ideal");
    }
}

} // namespace

std::vector<exponents> generator_order(const symmetric_ideal& ideal) {
    if (ideal.zero())
        throw precondition_error("generator_order: zero ideal");
    std::vector<exponents> gens = ideal.minimal_generators().elements();
    std::sort(gens.begin(), gens.end(),
              [](const exponents& a, const exponents& b) { return precedes(a, b); });
    return gens;
}

quotient_record make_quotient_record(const exponents& u) {
    if (u.empty())
        throw validation_error("make_quotient_record: empty exponent vector");
    const int max_exp = *std::max_element(u.begin(), u.end());
    if (max_exp == 0)
        throw validation_error("make_quotient_record: unit monomial");

    quotient_record rec;
    rec.u = u;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] == max_exp)
            rec.max_var = static_cast<int>(k) + 1;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const int var = static_cast<int>(k) + 1;
        if (u[k] < max_exp - 1 || (u[k] == max_exp - 1 && var < rec.max_var))
            rec.colon_vars.push_back(var);
    }
    return rec;
}

std::vector<quotient_record> quotient_table(const symmetric_ideal& ideal) {
    require_shifted(ideal, "quotient_table");
    std::vector<exponents> ordered = generator_order(ideal);
    std::vector<quotient_record> table;
    table.reserve(ordered.size());
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        quotient_record rec = make_quotient_record(ordered[k]);
        rec.position = k + 1;
        table.push_back(std::move(rec));
    }
    return table;
}

quotient_verification verify_linear_quotients(const symmetric_ideal& ideal) {
    require_shifted(ideal, "verify_linear_quotients");
    const int n = ideal.var_count();
    const std::vector<quotient_record> table = quotient_table(ideal);

    for (std::size_t k = 0; k < table.size(); ++k) {
        // Expected generators of (u_1,...,u_{k-1}) : u_k: one variable
        // per colon index. The first generator must have an empty colon.
        std::vector<exponents> expected;
        for (int var : table[k].colon_vars) {
            exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(var - 1)] = 1;
            expected.push_back(std::move(e));
        }

        bool matches;
        if (k == 0) {
            matches = expected.empty();
        } else {
            std::vector<exponents> previous;
            previous.reserve(k);
            for (std::size_t j = 0; j < k; ++j)
                previous.push_back(table[j].u);
            monomial_set colon =
                colon_by_monomial(monomial_set(n, std::move(previous)), table[k].u);
            matches = colon == monomial_set(n, std::move(expected));
        }
        if (!matches)
            return quotient_verification{false, k + 1};
    }
    return quotient_verification{};
}

betti_table betti_from_quotients(const symmetric_ideal& ideal) {
    require_shifted(ideal, "betti_from_quotients");
    betti_table table;
    for (const quotient_record& rec : quotient_table(ideal)) {
        const int degree = std::accumulate(rec.u.begin(), rec.u.end(), 0);
        const int colon_size = static_cast<int>(rec.colon_vars.size());
        for (int i = 0; i <= colon_size; ++i)
            table.add(i, i + degree, binomial(colon_size, i));
    }
    return table;
}

} // namespace shifted
