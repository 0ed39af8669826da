#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "shifted/betti_table.hpp"
#include "shifted/equivariant.hpp"
#include "shifted/linear_quotients.hpp"
#include "shifted/symmetric_ideal.hpp"

namespace shifted {

/// Parsed form of the JSON input document. Exactly one of `partitions`
/// (the partition generators, each non-decreasing of length n) or
/// `monomials` (an explicit monomial list) is populated.
struct ideal_document {
    int n = 0;
    bool has_partitions = false;
    std::vector<partition> partitions;
    bool has_monomials = false;
    std::vector<exponents> monomials;
};

/// Parses {"n": int, "partitions": [[...], ...]} or
/// {"n": int, "monomials": [[...], ...]}. Validation failures carry a
/// message naming the offending entry.
ideal_document parse_ideal_document(const std::string& json_text);

/// The monomials of the document: the orbit union for partition input,
/// the literal list otherwise.
monomial_set monomials_from_document(const ideal_document& doc);

/// A symmetric ideal from either form. Monomial input must be fixed
/// under all permutations of the variables (the list must be a union of
/// orbits); otherwise a validation_error is raised.
symmetric_ideal ideal_from_document(const ideal_document& doc);

/// {"n": ..., "monomials": [[...], ...]} — re-parseable by the functions
/// above.
std::string gens_json(const monomial_set& gens);
std::string render_gens_text(const std::vector<exponents>& ordered);

/// Betti table in the usual text layout: one column per homological
/// index, a "total:" line, then one row per shift degree with "." for
/// zero entries.
std::string render_betti_text(const betti_table& table);

/// {"entries":[{"i":..,"j":..,"beta":..}]} with j the internal degree,
/// sorted by (j, i). Values beyond 64 bits are emitted as strings.
std::string betti_json(const betti_table& table);

std::string render_quotients_text(const std::vector<quotient_record>& table);
std::string quotients_json(int var_count, const std::vector<quotient_record>& table);

using equivariant_cells = std::map<std::pair<int, int>, std::vector<summand_descriptor>>;
std::string render_equivariant_text(const equivariant_cells& cells);
std::string equivariant_json(const equivariant_cells& cells);

std::string render_filtration_text(const std::vector<partition>& chain);

} // namespace shifted
