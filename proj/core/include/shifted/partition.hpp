#pragma once

#include <string>
#include <vector>

#include "shifted/bigint.hpp"

namespace shifted {

/// Raw exponent vector of a monomial x^a = x_1^{a_1} ... x_n^{a_n}.
using exponents = std::vector<int>;

/// A partition of length n: a non-decreasing sequence of non-negative
/// integers. Note the convention: parts are sorted *ascending*
/// (lambda_1 <= ... <= lambda_n), not descending as in most of the
/// partition literature. Two partitions are comparable only when their
/// lengths agree.
class partition {
public:
    /// Validates that parts is non-decreasing with non-negative entries.
    explicit partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const; // |lambda|
    int operator[](int k) const { return parts_[static_cast<std::size_t>(k)]; }
    int largest() const { return parts_.empty() ? 0 : parts_.back(); }
    bool zero() const;

    /// lambda_{<=k}: the first k parts.
    partition prefix(int k) const;

    friend bool operator==(const partition& a, const partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const partition& a, const partition& b) {
        return !(a == b);
    }

private:
    std::vector<int> parts_;
};

/// part(x^a): the partition obtained by sorting the exponents ascending.
partition part(const exponents& a);

/// x^mu divides x^lambda, i.e. mu_k <= lambda_k for all k.
bool partition_divides(const partition& mu, const partition& lambda);

/// The reversed-lexicographic total order: a < b iff |a| < |b|, or
/// |a| = |b| and the leftmost non-zero entry of a - b is positive.
/// (Opposite of the usual lexicographic order on monomials; this is the
/// order compatible with ascending partitions.)
bool lex_less(const exponents& a, const exponents& b);
bool lex_less(const partition& a, const partition& b);

/// Dominance order: mu_k + ... + mu_n <= lambda_k + ... + lambda_n for
/// every k. Callers that need it enforce equal degree themselves.
bool dominance_leq(const partition& mu, const partition& lambda);

struct partition_stats {
    int p = 0;             // #{k : lambda_k < lambda_n - 1}
    int r = 0;             // #{k : lambda_k = lambda_n}
    std::vector<int> type; // type[v] = #{k : lambda_k = v}, v = 0..lambda_n
};

/// p, r and the type vector of a partition. For the zero partition the
/// convention is p = 0, r = n (every part equals lambda_n = 0).
partition_stats stats(const partition& lambda);

/// Number of distinct monomials in the orbit of x^lambda under all
/// permutations of the variables: n! / type(lambda)!.
bigint orbit_size(const partition& lambda);

/// "(0,1,2,3)"
std::string to_string(const partition& lambda);

} // namespace shifted
