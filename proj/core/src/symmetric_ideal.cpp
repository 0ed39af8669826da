#include "shifted/symmetric_ideal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>

#include "shifted/errors.hpp"
#include "shifted/parallel.hpp"

namespace shifted {

namespace {

void require_nondegenerate(const symmetric_ideal& ideal, const char* who) {
    if (ideal.zero()) {
        std::ostringstream msg;
        msg << who << ": the zero ideal has no partition generators";
        throw precondition_error(msg.str());
    }
    if (ideal.unit()) {
        std::ostringstream msg;
        msg << who << ": the unit ideal is degenerate here";
        throw precondition_error(msg.str());
    }
}

/// part(lambda - e_l + e_k) for 1-based positions k < l in the sorted
/// partition; requires lambda_k < lambda_l so the result stays valid.
partition exchange_move(const partition& lambda, int k, int l) {
    std::vector<int> moved = lambda.parts();
    --moved[static_cast<std::size_t>(l - 1)];
    ++moved[static_cast<std::size_t>(k - 1)];
    std::sort(moved.begin(), moved.end());
    return partition(std::move(moved));
}

} // namespace

symmetric_ideal::symmetric_ideal(int var_count, std::vector<partition> generators)
    : var_count_(var_count), generators_(std::move(generators)) {}

symmetric_ideal symmetric_ideal::normalized(int var_count, std::vector<partition> raw) {
    if (var_count <= 0)
        throw validation_error("symmetric_ideal: variable count must be positive");
    for (const partition& lambda : raw)
        if (lambda.length() != var_count)
            throw validation_error("symmetric_ideal: partition length mismatch");

    std::sort(raw.begin(), raw.end(),
              [](const partition& a, const partition& b) { return lex_less(a, b); });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<partition> antichain;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
            if (j != i && partition_divides(raw[j], raw[i]))
                redundant = true;
        if (!redundant)
            antichain.push_back(raw[i]);
    }
    return symmetric_ideal(var_count, std::move(antichain));
}

bool symmetric_ideal::unit() const {
    return generators_.size() == 1 && generators_.front().zero();
}

bool symmetric_ideal::contains(const exponents& u) const {
    if (static_cast<int>(u.size()) != var_count_)
        throw validation_error("symmetric_ideal::contains: length mismatch");
    return ideal_contains(generators_, u);
}

bool symmetric_ideal::contains(const partition& mu) const {
    if (mu.length() != var_count_)
        throw validation_error("symmetric_ideal::contains: length mismatch");
    for (const partition& lambda : generators_)
        if (partition_divides(lambda, mu))
            return true;
    return false;
}

monomial_set symmetric_ideal::minimal_generators() const {
    return orbit_union(var_count_, generators_);
}

int symmetric_ideal::max_generator_degree() const {
    int max_degree = 0;
    for (const partition& lambda : generators_)
        max_degree = std::max(max_degree, lambda.degree());
    return max_degree;
}

std::optional<shift_move> shifted_witness(const symmetric_ideal& ideal) {
    require_nondegenerate(ideal, "shifted_witness");
    const int n = ideal.var_count();
    for (const partition& lambda : ideal.generators()) {
        for (int k = 1; k < n; ++k) {
            if (lambda[k - 1] >= lambda[n - 1])
                continue;
            partition moved = exchange_move(lambda, k, n);
            if (!ideal.contains(moved))
                return shift_move{lambda, k, n, std::move(moved)};
        }
    }
    return std::nullopt;
}

bool is_shifted(const symmetric_ideal& ideal) {
    return !shifted_witness(ideal).has_value();
}

std::optional<shift_move> strongly_shifted_witness(const symmetric_ideal& ideal) {
    require_nondegenerate(ideal, "strongly_shifted_witness");
    const int n = ideal.var_count();
    for (const partition& lambda : ideal.generators()) {
        for (int k = 1; k < n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
                if (lambda[k - 1] >= lambda[l - 1])
                    continue;
                partition moved = exchange_move(lambda, k, l);
                if (!ideal.contains(moved))
                    return shift_move{lambda, k, l, std::move(moved)};
            }
        }
    }
    return std::nullopt;
}

bool is_strongly_shifted(const symmetric_ideal& ideal) {
    return !strongly_shifted_witness(ideal).has_value();
}

partition locate_generator(const symmetric_ideal& ideal, const partition& mu) {
    if (mu.length() != ideal.var_count())
        throw validation_error("locate_generator: length mismatch");

    // Generators are stored in lex_less order, so the first divisor is
    // the lex_less-minimal one. For a shifted ideal it provably also
    // matches mu on its p-prefix; instead of deciding shiftedness up
    // front, verify that property and fail loudly when it breaks.
    for (const partition& lambda : ideal.generators()) {
        if (!partition_divides(lambda, mu))
            continue;
        const int p = stats(lambda).p;
        if (lambda.prefix(p) != mu.prefix(p))
            throw precondition_error(
                "locate_generator: the lex-minimal divisor " + to_string(lambda) +
                " of " + to_string(mu) +
                " fails the prefix condition; the ideal is not shifted");
        return lambda;
    }
    throw precondition_error("locate_generator: " + to_string(mu) +
                             " is not in the ideal");
}

namespace {

long degree_of(const exponents& u) {
    return std::accumulate(u.begin(), u.end(), 0L);
}

/// Does some j > t with x_j | v put v * x_t / x_j back into the ideal?
bool exchange_into_ideal(const symmetric_ideal& ideal, const exponents& v, int t) {
    const int n = ideal.var_count();
    exponents moved = v;
    ++moved[static_cast<std::size_t>(t)];
    for (int j = t + 1; j < n; ++j) {
        if (v[static_cast<std::size_t>(j)] == 0)
            continue;
        --moved[static_cast<std::size_t>(j)];
        const bool inside = ideal.contains(moved);
        ++moved[static_cast<std::size_t>(j)];
        if (inside)
            return true;
    }
    return false;
}

/// A monomial u of the ideal with deg(u) = deg(v), u_i = v_i for i < t
/// and u_t > v_t, if one exists: the companion that turns the failed
/// exchange at (v, t) into a witness pair. The scan pairs monomials of
/// equal degree; across degrees the exchange condition is violated by
/// trivial pairs like (v * x_n, v) in every ideal, which the
/// generator-level form never meets. Candidates are completions of
/// generator orbit members, padded at position t up to deg(v).
std::optional<exponents> equal_degree_witness(
    const std::vector<exponents>& orbit_members, const exponents& v, int t) {
    const long target = degree_of(v);
    std::optional<exponents> best;
    for (const exponents& g : orbit_members) {
        bool compatible = true;
        for (int i = 0; i < t && compatible; ++i)
            compatible = g[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i)];
        if (!compatible)
            continue;
        exponents u(v.size());
        for (int i = 0; i < t; ++i)
            u[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
        u[static_cast<std::size_t>(t)] =
            std::max(g[static_cast<std::size_t>(t)], v[static_cast<std::size_t>(t)] + 1);
        for (std::size_t i = static_cast<std::size_t>(t) + 1; i < u.size(); ++i)
            u[i] = g[i];
        const long deg = degree_of(u);
        if (deg > target)
            continue;
        u[static_cast<std::size_t>(t)] += static_cast<int>(target - deg);
        if (!best || u < *best)
            best = std::move(u);
    }
    return best;
}

struct scan_hit {
    exponents u, v;
    int t = -1;
};

/// Lexicographic scan over all monomials of the ideal with the given
/// first exponent and total degree <= bound; returns the first (v, t)
/// violation, if any.
std::optional<scan_hit> scan_chunk(const symmetric_ideal& ideal,
                                   const std::vector<exponents>& orbit_members,
                                   int first_exponent, long bound,
                                   const std::atomic<int>& stop_below) {
    const int n = ideal.var_count();
    exponents v(static_cast<std::size_t>(n), 0);
    v[0] = first_exponent;
    std::optional<scan_hit> hit;

    auto visit = [&](const exponents& candidate) -> bool {
        if (!ideal.contains(candidate))
            return false;
        for (int t = 0; t < n; ++t) {
            if (exchange_into_ideal(ideal, candidate, t))
                continue;
            std::optional<exponents> u =
                equal_degree_witness(orbit_members, candidate, t);
            if (u) {
                hit = scan_hit{std::move(*u), candidate, t};
                return true;
            }
        }
        return false;
    };

    // Depth-first over positions 1..n-1 (position 0 is fixed).
    std::function<bool(int, long)> recurse = [&](int pos, long remaining) -> bool {
        if (stop_below.load(std::memory_order_relaxed) < first_exponent)
            return true; // an earlier chunk already holds the answer
        if (pos == n)
            return visit(v);
        for (int e = 0; e <= remaining; ++e) {
            v[static_cast<std::size_t>(pos)] = e;
            if (recurse(pos + 1, remaining - e))
                return true;
        }
        v[static_cast<std::size_t>(pos)] = 0;
        return false;
    };

    recurse(1, bound - first_exponent);
    return hit;
}

weak_poly_result scan_generators(const symmetric_ideal& ideal) {
    const std::vector<exponents> gens = ideal.minimal_generators().elements();
    const int n = ideal.var_count();
    for (const exponents& u : gens) {
        for (const exponents& v : gens) {
            if (u == v)
                continue;
            int t = -1;
            for (int i = 0; i < n; ++i) {
                if (u[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) {
                    t = i;
                    break;
                }
            }
            if (t < 0 || u[static_cast<std::size_t>(t)] < v[static_cast<std::size_t>(t)])
                continue;
            if (!exchange_into_ideal(ideal, v, t))
                return weak_poly_result{false, u, v, t};
        }
    }
    return weak_poly_result{};
}

weak_poly_result scan_extended(const symmetric_ideal& ideal, long bound) {
    std::vector<exponents> orbit_members = ideal.minimal_generators().elements();

    const int chunks = static_cast<int>(bound) + 1;
    std::vector<std::optional<scan_hit>> hits(static_cast<std::size_t>(chunks));
    std::atomic<int> stop_below{chunks};

    parallel_for(static_cast<std::size_t>(chunks), [&](std::size_t c) {
        std::optional<scan_hit> hit =
            scan_chunk(ideal, orbit_members, static_cast<int>(c), bound, stop_below);
        if (hit) {
            hits[c] = std::move(hit);
            int expected = stop_below.load(std::memory_order_relaxed);
            while (static_cast<int>(c) < expected &&
                   !stop_below.compare_exchange_weak(expected, static_cast<int>(c))) {
            }
        }
    });

    for (const std::optional<scan_hit>& hit : hits) {
        if (hit)
            return weak_poly_result{false, hit->u, hit->v, hit->t};
    }
    return weak_poly_result{};
}

} // namespace

weak_poly_result is_weakly_polymatroidal(const symmetric_ideal& ideal,
                                         weak_poly_mode mode,
                                         std::optional<int> degree_bound) {
    if (ideal.zero())
        return weak_poly_result{};
    if (mode == weak_poly_mode::generators)
        return scan_generators(ideal);
    const long bound =
        degree_bound ? *degree_bound
                     : static_cast<long>(ideal.max_generator_degree()) + ideal.var_count();
    if (bound < 0)
        throw validation_error("is_weakly_polymatroidal: negative degree bound");
    return scan_extended(ideal, bound);
}

weak_poly_result check_weak_poly_pair(const symmetric_ideal& ideal, const exponents& u,
                                      const exponents& v,
                                      std::optional<int> degree_bound) {
    const int n = ideal.var_count();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw validation_error("check_weak_poly_pair: length mismatch");
    const long bound =
        degree_bound ? *degree_bound
                     : static_cast<long>(ideal.max_generator_degree()) + n;
    if (degree_of(u) > bound || degree_of(v) > bound)
        return weak_poly_result{};
    if (degree_of(u) != degree_of(v)) // the extended scan pairs equal degrees
        return weak_poly_result{};
    if (!ideal.contains(u) || !ideal.contains(v))
        return weak_poly_result{};
    int t = -1;
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) {
            t = i;
            break;
        }
    }
    if (t < 0 || u[static_cast<std::size_t>(t)] < v[static_cast<std::size_t>(t)])
        return weak_poly_result{};
    if (exchange_into_ideal(ideal, v, t))
        return weak_poly_result{};
    return weak_poly_result{false, u, v, t};
}

} // namespace shifted
