#include "shifted/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "shifted/errors.hpp"

namespace shifted {

monomial_set::monomial_set(int var_count, std::vector<exponents> elements)
    : var_count_(var_count), elements_(std::move(elements)) {
    if (var_count_ < 0)
        throw validation_error("monomial_set: negative variable count");
    for (const exponents& e : elements_) {
        if (static_cast<int>(e.size()) != var_count_)
            throw validation_error("monomial_set: element length mismatch");
        for (int v : e)
            if (v < 0)
                throw validation_error("monomial_set: negative exponent");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool divides(const exponents& u, const exponents& v) {
    if (u.size() != v.size())
        throw validation_error("divides: length mismatch");
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] > v[k])
            return false;
    return true;
}

std::vector<exponents> orbit(const partition& lambda) {
    exponents current = lambda.parts(); // already sorted ascending
    std::vector<exponents> out;
    do {
        out.push_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out; // next_permutation emits ascending lexicographic order
}

monomial_set orbit_union(int var_count, const std::vector<partition>& generators) {
    std::vector<exponents> all;
    for (const partition& lambda : generators) {
        if (lambda.length() != var_count)
            throw validation_error("orbit_union: partition length mismatch");
        std::vector<exponents> members = orbit(lambda);
        all.insert(all.end(), members.begin(), members.end());
    }
    return monomial_set(var_count, std::move(all));
}

bool ideal_contains(const std::vector<partition>& generators, const exponents& u) {
    const partition mu = part(u);
    for (const partition& lambda : generators)
        if (partition_divides(lambda, mu))
            return true;
    return false;
}

monomial_set minimalize(const monomial_set& set) {
    const std::vector<exponents>& elems = set.elements();
    std::vector<exponents> minimal;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < elems.size() && !redundant; ++j)
            if (j != i && divides(elems[j], elems[i]))
                redundant = true;
        if (!redundant)
            minimal.push_back(elems[i]);
    }
    return monomial_set(set.var_count(), std::move(minimal));
}

monomial_set colon_by_monomial(const monomial_set& gens, const exponents& u) {
    if (gens.empty())
        throw validation_error("colon_by_monomial: empty generating set");
    if (static_cast<int>(u.size()) != gens.var_count())
        throw validation_error("colon_by_monomial: length mismatch");
    std::vector<exponents> quotients;
    quotients.reserve(gens.size());
    for (const exponents& v : gens.elements()) {
        exponents q(v.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            q[k] = std::max(v[k] - u[k], 0); // v / gcd(v, u)
        quotients.push_back(std::move(q));
    }
    return minimalize(monomial_set(gens.var_count(), std::move(quotients)));
}

bool precedes(const exponents& v, const exponents& u) {
    if (v.size() != u.size())
        throw validation_error("precedes: length mismatch");
    if (v == u)
        throw validation_error("precedes: arguments are equal (strict order)");
    const partition pv = part(v);
    const partition pu = part(u);
    if (pv != pu)
        return lex_less(pv, pu);
    return lex_less(v, u);
}

std::string monomial_to_string(const exponents& u) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0)
            continue;
        if (!first)
            out << '*';
        out << 'x' << (k + 1);
        if (u[k] > 1)
            out << '^' << u[k];
        first = false;
    }
    if (first)
        return "1";
    return out.str();
}

} // namespace shifted
