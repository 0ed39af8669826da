#include "support/brute.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "shifted/monomial.hpp"

namespace brute {

using shifted::exponents;
using shifted::partition;
using shifted::symmetric_ideal;

std::vector<partition> partitions_of_degree(int n, int degree, int max_entry) {
    std::vector<partition> out;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int)> recurse = [&](int pos, int remaining, int minimum) {
        if (pos == n) {
            if (remaining == 0)
                out.emplace_back(parts);
            return;
        }
        const int cap = max_entry < 0 ? remaining : std::min(remaining, max_entry);
        for (int v = minimum; v <= cap; ++v) {
            // the tail must be able to absorb the rest non-decreasingly
            if (max_entry >= 0 && remaining - v > (n - pos - 1) * max_entry)
                continue;
            parts[static_cast<std::size_t>(pos)] = v;
            recurse(pos + 1, remaining - v, v);
        }
        parts[static_cast<std::size_t>(pos)] = 0;
    };
    recurse(0, degree, 0);
    return out;
}

std::vector<partition> partitions_up_to_degree(int n, int max_degree) {
    std::vector<partition> out;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<partition> layer = partitions_of_degree(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

bool orbits_divide(const partition& mu, const partition& lambda) {
    const std::vector<exponents> orbit_mu = shifted::orbit(mu);
    const std::vector<exponents> orbit_lambda = shifted::orbit(lambda);
    if (orbit_mu.size() * orbit_lambda.size() <= 20000) {
        for (const exponents& u : orbit_mu)
            for (const exponents& w : orbit_lambda)
                if (shifted::divides(u, w))
                    return true;
        return false;
    }
    // Large orbits: dividing some member of the lambda-orbit is the same
    // as dividing the sorted representative after applying the inverse
    // permutation, so scanning one full orbit against the sorted lambda
    // stays exhaustive.
    for (const exponents& u : orbit_mu)
        if (shifted::divides(u, lambda.parts()))
            return true;
    return false;
}

namespace {

std::vector<partition> window_members(const symmetric_ideal& ideal, int window) {
    std::vector<partition> members;
    for (const partition& mu : partitions_up_to_degree(ideal.var_count(), window))
        if (ideal.contains(mu))
            members.push_back(mu);
    return members;
}

partition exchange(const partition& lambda, int k, int l) {
    std::vector<int> moved = lambda.parts();
    --moved[static_cast<std::size_t>(l)];
    ++moved[static_cast<std::size_t>(k)];
    std::sort(moved.begin(), moved.end());
    return partition(std::move(moved));
}

} // namespace

bool def_shifted(const symmetric_ideal& ideal, int window) {
    const int n = ideal.var_count();
    for (const partition& lambda : window_members(ideal, window)) {
        for (int k = 0; k + 1 < n; ++k) {
            if (lambda[k] >= lambda[n - 1])
                continue;
            if (!ideal.contains(exchange(lambda, k, n - 1)))
                return false;
        }
    }
    return true;
}

bool def_strongly_shifted(const symmetric_ideal& ideal, int window) {
    const int n = ideal.var_count();
    for (const partition& lambda : window_members(ideal, window)) {
        for (int k = 0; k + 1 < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                if (lambda[k] >= lambda[l])
                    continue;
                if (!ideal.contains(exchange(lambda, k, l)))
                    return false;
            }
        }
    }
    return true;
}

bool min_move_condition(const symmetric_ideal& ideal, int window) {
    const int n = ideal.var_count();
    for (const partition& lambda : window_members(ideal, window)) {
        int j = 0;
        while (lambda[j] != lambda[n - 1])
            ++j;
        for (int i = 0; i < j; ++i) {
            std::vector<int> moved = lambda.parts();
            --moved[static_cast<std::size_t>(j)];
            ++moved[static_cast<std::size_t>(i)];
            if (!std::is_sorted(moved.begin(), moved.end()))
                continue; // the remark only quantifies over partitions
            if (!ideal.contains(partition(std::move(moved))))
                return false;
        }
    }
    return true;
}

bool dominance_closed(const symmetric_ideal& ideal, int window) {
    const int n = ideal.var_count();
    for (int d = 1; d <= window; ++d) {
        const std::vector<partition> layer = partitions_of_degree(n, d);
        for (const partition& lambda : layer) {
            if (!ideal.contains(lambda))
                continue;
            for (const partition& mu : layer)
                if (shifted::dominance_leq(mu, lambda) && !ideal.contains(mu))
                    return false;
        }
    }
    return true;
}

partition random_partition(std::mt19937_64& rng, int n, int max_entry) {
    std::uniform_int_distribution<int> entry(0, max_entry);
    std::vector<int> parts(static_cast<std::size_t>(n));
    do {
        for (int& v : parts)
            v = entry(rng);
    } while (std::all_of(parts.begin(), parts.end(), [](int v) { return v == 0; }));
    std::sort(parts.begin(), parts.end());
    return partition(std::move(parts));
}

symmetric_ideal random_fixed_ideal(std::mt19937_64& rng, int n, int max_entry,
                                   int count) {
    std::vector<partition> seeds;
    for (int k = 0; k < count; ++k)
        seeds.push_back(random_partition(rng, n, max_entry));
    return symmetric_ideal::normalized(n, std::move(seeds));
}

symmetric_ideal dominance_saturated(int n, const std::vector<partition>& seeds) {
    std::vector<partition> generators;
    for (const partition& seed : seeds)
        for (const partition& mu : partitions_of_degree(n, seed.degree()))
            if (shifted::dominance_leq(mu, seed))
                generators.push_back(mu);
    return symmetric_ideal::normalized(n, std::move(generators));
}

symmetric_ideal move_saturated(int n, const std::vector<partition>& seeds) {
    symmetric_ideal ideal = symmetric_ideal::normalized(n, seeds);
    for (;;) {
        std::vector<partition> additions;
        for (const partition& lambda : ideal.generators()) {
            for (int k = 0; k + 1 < n; ++k) {
                if (lambda[k] >= lambda[n - 1])
                    continue;
                partition moved = exchange(lambda, k, n - 1);
                if (!ideal.contains(moved))
                    additions.push_back(std::move(moved));
            }
        }
        if (additions.empty())
            return ideal;
        std::vector<partition> next = ideal.generators();
        next.insert(next.end(), additions.begin(), additions.end());
        ideal = symmetric_ideal::normalized(n, std::move(next));
    }
}

} // namespace brute
