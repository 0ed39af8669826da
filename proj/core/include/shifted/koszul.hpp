#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shifted/betti_table.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// A simplicial complex on vertices 1..vertex_count, faces stored as
/// bitmasks in ascending order. Downward closed; may be void (no faces
/// at all) or consist of the empty face alone.
struct simplicial_complex {
    int vertex_count = 0;
    std::vector<std::uint32_t> faces;
};

/// The upper Koszul complex of the ideal generated by gens at the
/// multidegree a: faces are the squarefree drops b <= indicator sets
/// with a - b componentwise non-negative and x^{a-b} in the ideal.
simplicial_complex upper_koszul(const monomial_set& gens, const exponents& a);

/// Reduced homology dimensions over the prime field F_char, computed
/// from boundary-matrix ranks. Index d+1 of the result holds
/// dim H~_d, for d = -1 .. vertex_count-1.
std::vector<long> reduced_homology_dims(const simplicial_complex& complex,
                                        int characteristic);

struct oracle_options {
    int characteristic = 2;
    std::size_t multidegree_guard = 1000000;
    bool lcm_closure = false; // enumerate lcms of generator subsets
                              // instead of the full bounding box
};

/// Brute-force graded Betti numbers: beta_{i,j} is the sum over the
/// multidegrees a with |a| = j of dim H~_{i-1} of the upper Koszul
/// complex at a. Multidegrees range over the bounding box of the
/// generator exponents (or the lcm closure).
betti_table betti_oracle(const monomial_set& gens, const oracle_options& options = {});
betti_table betti_oracle(const symmetric_ideal& ideal,
                         const oracle_options& options = {});

} // namespace shifted
