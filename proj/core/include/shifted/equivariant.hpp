#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// One induced-module summand of Tor_i(N^lambda, k), tracked at the
/// dimension level: the induction of (permutation module of the prefix
/// lambda_{<=p} tensor a column module of size k on p letters) boxed
/// with a hook module (1^l, r) on n - p letters, where k + l = i.
/// dim = binom(n,p) * |orbit of prefix| * binom(p,k)
///     * binom(n-p, l+r) * binom(r+l-1, l).
struct summand_descriptor {
    int n = 0;
    int p = 0;
    partition lambda_prefix; // length p
    int k = 0;
    int l = 0;
    int r = 0;
    bigint dim;
};

/// Dimension of the hook-shape irreducible (1^i, r): binom(r+i-1, i).
/// Requires r >= 1, i >= 0.
bigint hook_specht_dim(int i, int r);

/// Dimension of the induced hook module on l letters:
/// binom(l, i+r) * hook_specht_dim(i, r). Requires i + r <= l.
bigint u_module_dim(int l, int i, int r);

/// The summands of Tor_i(N^lambda, k) with non-zero dimension,
/// one per (k, l) with k + l = i, listed with l ascending.
std::vector<summand_descriptor> tor_summands(const partition& lambda, int i);

/// For a shifted ideal: the summands of Tor_i(I, k)_{i+d}, keyed by
/// (i, d), concatenated over the generators lambda with |lambda| = d.
std::map<std::pair<int, int>, std::vector<summand_descriptor>>
equivariant_table(const symmetric_ideal& ideal);

/// Linear ASCII rendering, e.g.
///   "Ind[S3xS3->S6](M(0,0,0) (x) U_3^(1^1)) [x] U_3^(1^0,3)". A trivial
/// prefix part (p = 0) collapses to the plain hook module "U_6^(1^2,4)".
std::string to_string(const summand_descriptor& summand);

} // namespace shifted
