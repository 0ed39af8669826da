#pragma once

#include <string>
#include <vector>

#include "shifted/partition.hpp"

namespace shifted {

/// A finite set of monomials of a common ambient ring, kept sorted
/// (standard lexicographic on raw exponent vectors) and duplicate-free.
/// Minimality under divisibility is *not* an invariant; call minimalize()
/// where an antichain is required.
class monomial_set {
public:
    monomial_set(int var_count, std::vector<exponents> elements);

    int var_count() const { return var_count_; }
    const std::vector<exponents>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }

    friend bool operator==(const monomial_set& a, const monomial_set& b) {
        return a.var_count_ == b.var_count_ && a.elements_ == b.elements_;
    }

private:
    int var_count_;
    std::vector<exponents> elements_;
};

/// u divides v componentwise.
bool divides(const exponents& u, const exponents& v);

/// All distinct permutations of the parts of lambda, in ascending
/// standard lexicographic order.
std::vector<exponents> orbit(const partition& lambda);

/// The union of the orbits of the given partitions; for an antichain of
/// partition generators this is exactly G(I).
monomial_set orbit_union(int var_count, const std::vector<partition>& generators);

/// Membership of x^u in the symmetric ideal generated by the orbits of
/// the given partitions. By orbit divisibility this reduces to: some
/// generator divides part(u) componentwise.
bool ideal_contains(const std::vector<partition>& generators, const exponents& u);

/// Divisibility-minimal elements.
monomial_set minimalize(const monomial_set& set);

/// Minimal generating set of the colon ideal (gens) : x^u, computed from
/// the generators v as the minimal elements of { v - min(v, u) }.
monomial_set colon_by_monomial(const monomial_set& gens, const exponents& u);

/// The total order on distinct monomials that linear-quotient sequences
/// are sorted by: first compare part(v) and part(u) in lex_less, then
/// break ties by lex_less on the raw exponent vectors.
bool precedes(const exponents& v, const exponents& u);

/// "x1^2*x2*x4" (unit monomial renders as "1").
std::string monomial_to_string(const exponents& u);

} // namespace shifted
