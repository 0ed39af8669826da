#include "shifted/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* who) {
    if (a != b) {
        std::ostringstream msg;
        msg << who << ": length mismatch (" << a << " vs " << b << ")";
        throw validation_error(msg.str());
    }
}

} // namespace

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0)
            throw validation_error("partition: negative part");
        if (k > 0 && parts_[k - 1] > parts_[k])
            throw validation_error("partition: parts must be non-decreasing");
    }
}

int partition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool partition::zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v == 0; });
}

partition partition::prefix(int k) const {
    if (k < 0 || k > length())
        throw validation_error("partition::prefix: index out of range");
    return partition(std::vector<int>(parts_.begin(), parts_.begin() + k));
}

partition part(const exponents& a) {
    for (int v : a)
        if (v < 0)
            throw validation_error("part: negative exponent");
    std::vector<int> sorted(a);
    std::sort(sorted.begin(), sorted.end());
    return partition(std::move(sorted));
}

bool partition_divides(const partition& mu, const partition& lambda) {
    require_same_length(mu.parts().size(), lambda.parts().size(), "partition_divides");
    for (int k = 0; k < mu.length(); ++k)
        if (mu[k] > lambda[k])
            return false;
    return true;
}

bool lex_less(const exponents& a, const exponents& b) {
    require_same_length(a.size(), b.size(), "lex_less");
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k])
            return a[k] > b[k]; // leftmost non-zero entry of a-b is positive
    }
    return false;
}

bool lex_less(const partition& a, const partition& b) {
    return lex_less(a.parts(), b.parts());
}

bool dominance_leq(const partition& mu, const partition& lambda) {
    require_same_length(mu.parts().size(), lambda.parts().size(), "dominance_leq");
    long suffix_mu = 0;
    long suffix_lambda = 0;
    for (int k = mu.length() - 1; k >= 0; --k) {
        suffix_mu += mu[k];
        suffix_lambda += lambda[k];
        if (suffix_mu > suffix_lambda)
            return false;
    }
    return true;
}

partition_stats stats(const partition& lambda) {
    partition_stats out;
    const int top = lambda.largest();
    out.type.assign(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k < lambda.length(); ++k) {
        const int v = lambda[k];
        if (v < top - 1)
            ++out.p;
        if (v == top)
            ++out.r;
        ++out.type[static_cast<std::size_t>(v)];
    }
    return out;
}

bigint orbit_size(const partition& lambda) {
    const partition_stats st = stats(lambda);
    return factorial(lambda.length()) / factorial_product(st.type);
}

std::string to_string(const partition& lambda) {
    std::ostringstream out;
    out << '(';
    for (int k = 0; k < lambda.length(); ++k) {
        if (k > 0)
            out << ',';
        out << lambda[k];
    }
    out << ')';
    return out.str();
}

} // namespace shifted
