#include "shifted/bigint.hpp"

#include "shifted/errors.hpp"

namespace shifted {

bigint factorial(long k) {
    if (k < 0)
        throw validation_error("factorial: negative argument");
    bigint out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

bigint binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    bigint out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

bigint factorial_product(const std::vector<int>& counts) {
    bigint out = 1;
    for (int c : counts)
        out *= factorial(c);
    return out;
}

std::string to_string(const bigint& v) { return v.get_str(); }

} // namespace shifted
