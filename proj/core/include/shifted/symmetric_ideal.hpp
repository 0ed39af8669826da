#pragma once

#include <optional>
#include <vector>

#include "shifted/monomial.hpp"
#include "shifted/partition.hpp"

namespace shifted {

/// A monomial ideal fixed by all permutations of the variables,
/// represented by its partition generators Lambda(I). After
/// normalization Lambda(I) is an antichain under partition divisibility,
/// sorted ascending by lex_less. The empty generator set represents the
/// zero ideal; the singleton zero partition represents the unit ideal.
/// Both are constructible but rejected by the shiftedness machinery.
class symmetric_ideal {
public:
    /// Drops every partition divisible by another one in the set.
    static symmetric_ideal normalized(int var_count, std::vector<partition> raw);

    int var_count() const { return var_count_; }
    const std::vector<partition>& generators() const { return generators_; }

    bool zero() const { return generators_.empty(); }
    bool unit() const;

    bool contains(const exponents& u) const;
    bool contains(const partition& mu) const;

    /// G(I): the union of the generator orbits.
    monomial_set minimal_generators() const;

    int max_generator_degree() const; // 0 for the zero ideal

private:
    symmetric_ideal(int var_count, std::vector<partition> generators);

    int var_count_;
    std::vector<partition> generators_; // lex_less-sorted antichain
};

/// A failed exchange move: for the generator lambda, moving one unit
/// from position to_l down to position from_k (1-based positions in the
/// sorted partition) produces the partition `missing`, which is not in
/// the ideal.
struct shift_move {
    partition generator;
    int from_k = 0;
    int to_l = 0;
    partition missing;
};

/// Generator-level shiftedness test: I is shifted iff no witness exists
/// for moves lambda - e_n + e_k with lambda_k < lambda_n.
/// Throws precondition_error on the zero and unit ideals.
std::optional<shift_move> shifted_witness(const symmetric_ideal& ideal);
bool is_shifted(const symmetric_ideal& ideal);

/// Same over all pairs k < l with lambda_k < lambda_l.
std::optional<shift_move> strongly_shifted_witness(const symmetric_ideal& ideal);
bool is_strongly_shifted(const symmetric_ideal& ideal);

/// For a shifted ideal and mu in P(I), the unique generator lambda with
/// (a) lambda divides mu and (b) lambda_{<=p(lambda)} = mu_{<=p(lambda)};
/// located as the lex_less-minimal divisor, then verified against (b).
partition locate_generator(const symmetric_ideal& ideal, const partition& mu);

enum class weak_poly_mode {
    generators, // textbook: quantify u, v over G(I)
    extended,   // quantify u, v over all monomials of I up to a degree bound
};

struct weak_poly_result {
    bool holds = true;
    // Witness pair when the check fails: exponent vectors u, v in the
    // scanned set agreeing before position t (0-based) with u[t] > v[t],
    // such that no j > t with x_j | v has v * x_t / x_j in I.
    exponents u, v;
    int t = -1;
};

/// The weakly-polymatroidal property. In extended mode the scan covers
/// all equal-degree pairs of monomials of the ideal up to degree_bound
/// (default: max generator degree + n). Pairs of different degrees are
/// not considered: the exchange condition is violated by trivial pairs
/// like (v * x_n, v) in any ideal, a shape that cannot occur among
/// minimal generators and that carries no information.
weak_poly_result is_weakly_polymatroidal(
    const symmetric_ideal& ideal,
    weak_poly_mode mode = weak_poly_mode::generators,
    std::optional<int> degree_bound = std::nullopt);

/// Validates a specific (u, v) pair as a violation of the condition:
/// both monomials lie in the ideal within the degree bound, they first
/// disagree at some t with u[t] > v[t], and every exchange v * x_t / x_j
/// with j > t falls outside the ideal. Returns holds = false (with the
/// pair) when the violation is confirmed, holds = true otherwise.
weak_poly_result check_weak_poly_pair(const symmetric_ideal& ideal,
                                      const exponents& u, const exponents& v,
                                      std::optional<int> degree_bound = std::nullopt);

} // namespace shifted
