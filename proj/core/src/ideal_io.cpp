#include "shifted/ideal_io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<int> int_row(const json& row, const std::string& where, int n) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw validation_error(where + " must be an array of length " +
                               std::to_string(n));
    std::vector<int> out;
    out.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
        const json& cell = row[k];
        if (!cell.is_number_integer() || cell.get<long long>() < 0)
            throw validation_error(where + "[" + std::to_string(k) +
                                   "]: entries must be non-negative integers");
        out.push_back(cell.get<int>());
    }
    return out;
}

ordered_json bigint_to_json(const bigint& v) {
    if (v.fits_ulong_p())
        return ordered_json(v.get_ui());
    return ordered_json(v.get_str());
}

} // namespace

ideal_document parse_ideal_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw validation_error("input is not a JSON object");
    if (!doc.contains("n"))
        throw validation_error("missing field \"n\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw validation_error("\"n\" must be a positive integer");

    ideal_document out;
    out.n = doc["n"].get<int>();
    out.has_partitions = doc.contains("partitions");
    out.has_monomials = doc.contains("monomials");
    if (out.has_partitions == out.has_monomials)
        throw validation_error(
            "document must contain exactly one of \"partitions\" or \"monomials\"");

    if (out.has_partitions) {
        const json& rows = doc["partitions"];
        if (!rows.is_array())
            throw validation_error("\"partitions\" must be an array");
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            const std::string where = "partitions[" + std::to_string(idx) + "]";
            std::vector<int> parts = int_row(rows[idx], where, out.n);
            for (std::size_t k = 1; k < parts.size(); ++k)
                if (parts[k - 1] > parts[k])
                    throw validation_error(
                        where + " is not non-decreasing at index " + std::to_string(k) +
                        " (" + std::to_string(parts[k]) + " after " +
                        std::to_string(parts[k - 1]) + ")");
            out.partitions.emplace_back(std::move(parts));
        }
    } else {
        const json& rows = doc["monomials"];
        if (!rows.is_array())
            throw validation_error("\"monomials\" must be an array");
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            const std::string where = "monomials[" + std::to_string(idx) + "]";
            out.monomials.push_back(int_row(rows[idx], where, out.n));
        }
    }
    return out;
}

monomial_set monomials_from_document(const ideal_document& doc) {
    if (doc.has_partitions)
        return orbit_union(doc.n, doc.partitions);
    return monomial_set(doc.n, doc.monomials);
}

symmetric_ideal ideal_from_document(const ideal_document& doc) {
    if (doc.has_partitions)
        return symmetric_ideal::normalized(doc.n, doc.partitions);

    // Reconstruct partition generators and verify the list is a union
    // of orbits (i.e. the ideal really is fixed by the symmetric group).
    std::vector<partition> reconstructed;
    for (const exponents& u : doc.monomials)
        reconstructed.push_back(part(u));
    std::sort(reconstructed.begin(), reconstructed.end(),
              [](const partition& a, const partition& b) { return lex_less(a, b); });
    reconstructed.erase(std::unique(reconstructed.begin(), reconstructed.end()),
                        reconstructed.end());
    const monomial_set given(doc.n, doc.monomials);
    if (!(orbit_union(doc.n, reconstructed) == given))
        throw validation_error(
            "monomial list is not fixed under permutations of the variables; "
            "pass the full orbit of every monomial");
    return symmetric_ideal::normalized(doc.n, std::move(reconstructed));
}

std::string gens_json(const monomial_set& gens) {
    ordered_json doc;
    doc["n"] = gens.var_count();
    ordered_json rows = ordered_json::array();
    for (const exponents& u : gens.elements())
        rows.push_back(u);
    doc["monomials"] = std::move(rows);
    return doc.dump();
}

std::string render_gens_text(const std::vector<exponents>& ordered) {
    std::ostringstream out;
    for (const exponents& u : ordered)
        out << monomial_to_string(u) << '\n';
    return out.str();
}

std::string render_betti_text(const betti_table& table) {
    if (table.empty())
        return "(zero table)\n";
    const int max_i = table.max_homological_index();
    const int min_d = table.min_row();
    const int max_d = table.max_row();

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;

    labels.push_back("");
    {
        std::vector<std::string> header;
        for (int i = 0; i <= max_i; ++i)
            header.push_back(std::to_string(i));
        cells.push_back(std::move(header));
    }
    labels.push_back("total:");
    {
        std::vector<std::string> row;
        for (int i = 0; i <= max_i; ++i)
            row.push_back(table.total(i).get_str());
        cells.push_back(std::move(row));
    }
    for (int d = min_d; d <= max_d; ++d) {
        labels.push_back(std::to_string(d) + ":");
        std::vector<std::string> row;
        for (int i = 0; i <= max_i; ++i) {
            const bigint value = table.get(i, i + d);
            row.push_back(value == 0 ? "." : value.get_str());
        }
        cells.push_back(std::move(row));
    }

    std::size_t label_width = 0;
    for (const std::string& label : labels)
        label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths(static_cast<std::size_t>(max_i) + 1, 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line = labels[r];
        line.append(label_width - labels[r].size(), ' ');
        for (std::size_t i = 0; i < cells[r].size(); ++i) {
            line.append(2 + widths[i] - cells[r][i].size(), ' ');
            line.append(cells[r][i]);
        }
        out << line << '\n';
    }
    return out.str();
}

std::string betti_json(const betti_table& table) {
    std::vector<betti_table::key> keys;
    for (const auto& [key, value] : table.entries())
        keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
    });
    ordered_json entries = ordered_json::array();
    for (const auto& key : keys) {
        ordered_json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        entry["beta"] = bigint_to_json(table.get(key.first, key.second));
        entries.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["entries"] = std::move(entries);
    return doc.dump();
}

std::string render_quotients_text(const std::vector<quotient_record>& table) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"i", "generator", "colon", "max"});
    for (const quotient_record& rec : table) {
        std::string colon;
        if (rec.colon_vars.empty()) {
            colon = "-";
        } else {
            colon = "(";
            for (std::size_t k = 0; k < rec.colon_vars.size(); ++k) {
                if (k > 0)
                    colon += ",";
                colon += "x" + std::to_string(rec.colon_vars[k]);
            }
            colon += ")";
        }
        rows.push_back({std::to_string(rec.position), monomial_to_string(rec.u),
                        colon, std::to_string(rec.max_var)});
    }

    std::vector<std::size_t> widths(4, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 4; ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        // position column right-aligned, the rest left-aligned
        line.append(widths[0] - row[0].size(), ' ');
        line.append(row[0]);
        for (std::size_t c = 1; c < 4; ++c) {
            line.append(2, ' ');
            line.append(row[c]);
            if (c + 1 < 4)
                line.append(widths[c] - row[c].size(), ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

std::string quotients_json(int var_count, const std::vector<quotient_record>& table) {
    ordered_json rows = ordered_json::array();
    for (const quotient_record& rec : table) {
        ordered_json row;
        row["position"] = rec.position;
        row["u"] = rec.u;
        row["colon"] = rec.colon_vars;
        row["max"] = rec.max_var;
        rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["n"] = var_count;
    doc["rows"] = std::move(rows);
    return doc.dump();
}

std::string render_equivariant_text(const equivariant_cells& cells) {
    // Cells arrive keyed by (i, d); print grouped by degree row d.
    std::vector<int> degrees;
    for (const auto& [key, summands] : cells)
        degrees.push_back(key.second);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::ostringstream out;
    for (int d : degrees) {
        out << "d=" << d << ":\n";
        for (const auto& [key, summands] : cells) {
            if (key.second != d)
                continue;
            bigint total = 0;
            for (const summand_descriptor& s : summands)
                total += s.dim;
            out << "  i=" << key.first << ": ";
            for (std::size_t k = 0; k < summands.size(); ++k) {
                if (k > 0)
                    out << " + ";
                out << to_string(summands[k]) << " [dim " << summands[k].dim.get_str()
                    << "]";
            }
            out << "  | total " << total.get_str() << '\n';
        }
    }
    return out.str();
}

std::string equivariant_json(const equivariant_cells& cells) {
    std::vector<std::pair<int, int>> keys; // (d, i)
    for (const auto& [key, summands] : cells)
        keys.emplace_back(key.second, key.first);
    std::sort(keys.begin(), keys.end());

    ordered_json list = ordered_json::array();
    for (const auto& [d, i] : keys) {
        const auto& summands = cells.at({i, d});
        ordered_json cell;
        cell["i"] = i;
        cell["d"] = d;
        ordered_json parts = ordered_json::array();
        bigint total = 0;
        for (const summand_descriptor& s : summands) {
            ordered_json item;
            item["p"] = s.p;
            item["prefix"] = s.lambda_prefix.parts();
            item["k"] = s.k;
            item["l"] = s.l;
            item["r"] = s.r;
            item["dim"] = bigint_to_json(s.dim);
            item["text"] = to_string(s);
            parts.push_back(std::move(item));
            total += s.dim;
        }
        cell["summands"] = std::move(parts);
        cell["total"] = bigint_to_json(total);
        list.push_back(std::move(cell));
    }
    ordered_json doc;
    doc["cells"] = std::move(list);
    return doc.dump();
}

std::string render_filtration_text(const std::vector<partition>& chain) {
    std::ostringstream out;
    for (const partition& lambda : chain)
        out << to_string(lambda) << '\n';
    return out.str();
}

} // namespace shifted
