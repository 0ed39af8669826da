#include "shifted/koszul.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "shifted/errors.hpp"
#include "shifted/parallel.hpp"

namespace shifted {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_prime(int p) {
    if (!is_prime(p))
        throw validation_error("characteristic " + std::to_string(p) +
                               " is not prime");
}

/// Rank of a dense matrix over F_2, rows packed into 64-bit words.
long rank_mod2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    long rank = 0;
    std::size_t row_start = 0;
    for (std::size_t col = 0; col < cols && row_start < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = row_start;
        while (pivot < rows.size() && !(rows[pivot][word] & bit))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row_start], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != row_start && (rows[r][word] & bit))
                for (std::size_t w = 0; w < rows[r].size(); ++w)
                    rows[r][w] ^= rows[row_start][w];
        }
        ++row_start;
        ++rank;
    }
    return rank;
}

/// Rank of a dense matrix over F_p.
long rank_modp(std::vector<std::vector<int>> rows, int p) {
    long rank = 0;
    std::size_t row_start = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    auto inverse_mod = [&](int a) {
        // Fermat: a^(p-2) mod p.
        long result = 1;
        long base = a % p;
        int e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<int>(result);
    };
    for (std::size_t col = 0; col < cols && row_start < rows.size(); ++col) {
        std::size_t pivot = row_start;
        while (pivot < rows.size() && rows[pivot][col] % p == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row_start], rows[pivot]);
        const int inv = inverse_mod(((rows[row_start][col] % p) + p) % p);
        for (std::size_t c = col; c < cols; ++c)
            rows[row_start][c] =
                static_cast<int>(static_cast<long>(((rows[row_start][c] % p) + p) % p) *
                                 inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row_start)
                continue;
            const int factor = ((rows[r][col] % p) + p) % p;
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < cols; ++c) {
                long value = rows[r][c] - static_cast<long>(factor) * rows[row_start][c];
                rows[r][c] = static_cast<int>(((value % p) + p) % p);
            }
        }
        ++row_start;
        ++rank;
    }
    return rank;
}

/// Rank of the boundary map from d-faces to (d-1)-faces.
long boundary_rank(const std::vector<std::uint32_t>& lower,
                   const std::vector<std::uint32_t>& upper, int characteristic) {
    if (lower.empty() || upper.empty())
        return 0;
    std::map<std::uint32_t, std::size_t> lower_index;
    for (std::size_t idx = 0; idx < lower.size(); ++idx)
        lower_index[lower[idx]] = idx;

    if (characteristic == 2) {
        const std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(
            upper.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t u = 0; u < upper.size(); ++u) {
            std::uint32_t face = upper[u];
            std::uint32_t remaining = face;
            while (remaining) {
                const std::uint32_t vertex_bit = remaining & (~remaining + 1);
                remaining &= remaining - 1;
                const std::size_t col = lower_index.at(face & ~vertex_bit);
                rows[u][col / 64] ^= std::uint64_t{1} << (col % 64);
            }
        }
        return rank_mod2(std::move(rows), lower.size());
    }

    std::vector<std::vector<int>> rows(upper.size(),
                                       std::vector<int>(lower.size(), 0));
    for (std::size_t u = 0; u < upper.size(); ++u) {
        std::uint32_t face = upper[u];
        std::uint32_t remaining = face;
        int position = 0;
        while (remaining) {
            const std::uint32_t vertex_bit = remaining & (~remaining + 1);
            remaining &= remaining - 1;
            const std::size_t col = lower_index.at(face & ~vertex_bit);
            rows[u][col] = (position % 2 == 0) ? 1 : characteristic - 1;
            ++position;
        }
    }
    return rank_modp(std::move(rows), characteristic);
}

bigint box_size(const exponents& box) {
    bigint total = 1;
    for (int b : box)
        total *= b + 1;
    return total;
}

void accumulate_multidegree(const monomial_set& gens, const exponents& a,
                            int characteristic, betti_table& out) {
    const simplicial_complex complex = upper_koszul(gens, a);
    if (complex.faces.empty())
        return;
    const std::vector<long> dims = reduced_homology_dims(complex, characteristic);
    long degree = 0;
    for (int v : a)
        degree += v;
    // dims[idx] = dim H~_{idx-1}(K^a) = beta_{idx, a}; internal degree |a|.
    for (std::size_t idx = 0; idx < dims.size(); ++idx)
        if (dims[idx] > 0)
            out.add(static_cast<int>(idx), static_cast<int>(degree), bigint(dims[idx]));
}

betti_table oracle_over(const monomial_set& gens, std::size_t count,
                        const std::function<void(std::size_t, exponents&)>& decode,
                        int characteristic) {
    const unsigned threads = std::max(1u, thread_budget());
    const std::size_t chunks =
        std::min<std::size_t>(count, static_cast<std::size_t>(threads) * 8);
    std::vector<betti_table> partial(std::max<std::size_t>(chunks, 1));
    parallel_for(chunks, [&](std::size_t c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        exponents a(static_cast<std::size_t>(gens.var_count()), 0);
        for (std::size_t idx = begin; idx < end; ++idx) {
            decode(idx, a);
            accumulate_multidegree(gens, a, characteristic, partial[c]);
        }
    });
    betti_table table;
    for (const betti_table& piece : partial)
        for (const auto& [key, value] : piece.entries())
            table.add(key.first, key.second, value);
    return table;
}

} // namespace

simplicial_complex upper_koszul(const monomial_set& gens, const exponents& a) {
    const int n = gens.var_count();
    if (static_cast<int>(a.size()) != n)
        throw validation_error("upper_koszul: length mismatch");
    for (int v : a)
        if (v < 0)
            throw validation_error("upper_koszul: negative multidegree");
    if (n > 31)
        throw size_guard_error("upper_koszul: more than 31 variables");

    std::uint32_t support = 0;
    for (int k = 0; k < n; ++k)
        if (a[static_cast<std::size_t>(k)] > 0)
            support |= std::uint32_t{1} << k;

    auto in_ideal = [&](const exponents& e) {
        for (const exponents& g : gens.elements())
            if (divides(g, e))
                return true;
        return false;
    };

    simplicial_complex complex;
    complex.vertex_count = n;
    exponents dropped(a);
    std::uint32_t sub = support;
    for (;;) { // all subsets of the support, largest first
        for (int k = 0; k < n; ++k)
            dropped[static_cast<std::size_t>(k)] =
                a[static_cast<std::size_t>(k)] - ((sub >> k) & 1u);
        if (in_ideal(dropped))
            complex.faces.push_back(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & support;
    }
    std::sort(complex.faces.begin(), complex.faces.end());
    return complex;
}

std::vector<long> reduced_homology_dims(const simplicial_complex& complex,
                                        int characteristic) {
    require_prime(characteristic);
    const int n = complex.vertex_count;
    std::vector<long> dims(static_cast<std::size_t>(n) + 1, 0);
    if (complex.faces.empty())
        return dims;

    // Group faces by dimension; index d+1 holds the d-faces
    // (the empty face sits at index 0).
    std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t face : complex.faces)
        by_dim[static_cast<std::size_t>(std::popcount(face))].push_back(face);

    // rank of the boundary map C_d -> C_{d-1}, stored at index d+1.
    std::vector<long> ranks(static_cast<std::size_t>(n) + 2, 0);
    for (int d = 0; d < n; ++d)
        ranks[static_cast<std::size_t>(d) + 1] =
            boundary_rank(by_dim[static_cast<std::size_t>(d)],
                          by_dim[static_cast<std::size_t>(d) + 1], characteristic);

    for (int d = -1; d < n; ++d) {
        const long chains =
            static_cast<long>(by_dim[static_cast<std::size_t>(d) + 1].size());
        dims[static_cast<std::size_t>(d) + 1] =
            chains - ranks[static_cast<std::size_t>(d) + 1] -
            ranks[static_cast<std::size_t>(d) + 2];
    }
    return dims;
}

betti_table betti_oracle(const monomial_set& gens, const oracle_options& options) {
    require_prime(options.characteristic);
    if (gens.empty())
        throw precondition_error("betti_oracle: zero ideal");
    const monomial_set minimal = minimalize(gens);
    const int n = minimal.var_count();

    exponents box(static_cast<std::size_t>(n), 0);
    for (const exponents& g : minimal.elements())
        for (int k = 0; k < n; ++k)
            box[static_cast<std::size_t>(k)] =
                std::max(box[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);

    if (options.lcm_closure) {
        std::set<exponents> closure(minimal.elements().begin(),
                                    minimal.elements().end());
        std::vector<exponents> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<exponents> next;
            for (const exponents& e : frontier) {
                for (const exponents& g : minimal.elements()) {
                    exponents join(e.size());
                    for (std::size_t k = 0; k < e.size(); ++k)
                        join[k] = std::max(e[k], g[k]);
                    if (closure.insert(join).second)
                        next.push_back(std::move(join));
                }
            }
            if (closure.size() > options.multidegree_guard)
                throw size_guard_error(
                    "betti_oracle: lcm closure exceeds the multidegree guard (" +
                    std::to_string(options.multidegree_guard) +
                    "); shrink the ideal or raise the guard");
            frontier = std::move(next);
        }
        const std::vector<exponents> multidegrees(closure.begin(), closure.end());
        return oracle_over(
            minimal, multidegrees.size(),
            [&](std::size_t idx, exponents& a) { a = multidegrees[idx]; },
            options.characteristic);
    }

    const bigint total = box_size(box);
    if (total > bigint(static_cast<unsigned long>(options.multidegree_guard))) {
        std::ostringstream msg;
        msg << "betti_oracle: bounding box holds " << total.get_str()
            << " multidegrees, beyond the guard of " << options.multidegree_guard
            << "; shrink the ideal parameters or raise the guard";
        throw size_guard_error(msg.str());
    }
    // Mixed-radix decode: the box is never materialized.
    return oracle_over(
        minimal, static_cast<std::size_t>(total.get_ui()),
        [&](std::size_t idx, exponents& a) {
            for (int k = n - 1; k >= 0; --k) {
                const std::size_t radix =
                    static_cast<std::size_t>(box[static_cast<std::size_t>(k)]) + 1;
                a[static_cast<std::size_t>(k)] = static_cast<int>(idx % radix);
                idx /= radix;
            }
        },
        options.characteristic);
}

betti_table betti_oracle(const symmetric_ideal& ideal, const oracle_options& options) {
    if (ideal.zero())
        throw precondition_error("betti_oracle: zero ideal");
    return betti_oracle(ideal.minimal_generators(), options);
}

} // namespace shifted
