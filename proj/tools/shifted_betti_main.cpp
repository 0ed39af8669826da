// Command-line front end: parses ideal descriptions (partition
// generators or explicit monomial lists), decides shiftedness, lists
// linear quotients, and prints Betti tables computed by the quotient
// count, the closed partition formula, or the homology oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shifted/equivariant.hpp"
#include "shifted/errors.hpp"
#include "shifted/ideal_io.hpp"
#include "shifted/koszul.hpp"
#include "shifted/linear_quotients.hpp"
#include "shifted/nlambda.hpp"
#include "shifted/star_config.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_validation = 2;
constexpr int exit_precondition = 3;
constexpr int exit_size_guard = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw shifted::validation_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

shifted::ideal_document load_document(const std::string& path) {
    return shifted::parse_ideal_document(read_file(path));
}

std::string witness_text(const shifted::shift_move& move) {
    return shifted::to_string(move.generator) + " -> " +
           shifted::to_string(move.missing);
}

struct betti_options {
    std::string method = "quotients";
    int characteristic = 2;
    std::size_t guard = 1000000;
    bool lcm_closure = false;
};

shifted::oracle_options to_oracle_options(const betti_options& opts) {
    shifted::oracle_options out;
    out.characteristic = opts.characteristic;
    out.multidegree_guard = opts.guard;
    out.lcm_closure = opts.lcm_closure;
    return out;
}

int run_check(const std::string& input, bool strong) {
    const shifted::symmetric_ideal ideal =
        shifted::ideal_from_document(load_document(input));
    std::ostringstream out;
    const auto weak = shifted::shifted_witness(ideal);
    out << "shifted: " << (weak ? "no" : "yes");
    if (weak && !strong)
        out << ", witness: " << witness_text(*weak);
    if (strong) {
        const auto witness = weak ? weak : shifted::strongly_shifted_witness(ideal);
        out << ", strongly shifted: " << (witness ? "no" : "yes");
        if (witness)
            out << ", witness: " << witness_text(*witness);
    }
    std::cout << out.str() << '\n';
    return exit_ok;
}

int run_gens(const std::string& input, const std::string& format) {
    const shifted::symmetric_ideal ideal =
        shifted::ideal_from_document(load_document(input));
    const std::vector<shifted::exponents> ordered = shifted::generator_order(ideal);
    if (format == "json")
        std::cout << shifted::gens_json(ideal.minimal_generators()) << '\n';
    else
        std::cout << shifted::render_gens_text(ordered);
    return exit_ok;
}

int run_quotients(const std::string& input, const std::string& format) {
    const shifted::symmetric_ideal ideal =
        shifted::ideal_from_document(load_document(input));
    const std::vector<shifted::quotient_record> table = shifted::quotient_table(ideal);
    if (format == "json")
        std::cout << shifted::quotients_json(ideal.var_count(), table) << '\n';
    else
        std::cout << shifted::render_quotients_text(table);
    return exit_ok;
}

int run_betti(const std::string& input, const betti_options& opts,
              const std::string& format) {
    const shifted::ideal_document doc = load_document(input);

    auto compute = [&](const std::string& method) -> shifted::betti_table {
        if (method == "quotients")
            return shifted::betti_from_quotients(shifted::ideal_from_document(doc));
        if (method == "formula")
            return shifted::betti_closed_form(shifted::ideal_from_document(doc));
        return shifted::betti_oracle(shifted::monomials_from_document(doc),
                                     to_oracle_options(opts));
    };

    if (opts.method != "all") {
        const shifted::betti_table table = compute(opts.method);
        if (format == "json")
            std::cout << shifted::betti_json(table) << '\n';
        else
            std::cout << shifted::render_betti_text(table);
        return exit_ok;
    }

    const shifted::betti_table by_quotients = compute("quotients");
    const shifted::betti_table by_formula = compute("formula");
    const shifted::betti_table by_oracle = compute("oracle");
    if (by_quotients != by_formula || by_quotients != by_oracle) {
        std::cerr << "internal disagreement between Betti methods\n";
        return exit_internal;
    }
    if (format == "json") {
        nlohmann::ordered_json out;
        out["quotients"] = nlohmann::ordered_json::parse(shifted::betti_json(by_quotients));
        out["formula"] = nlohmann::ordered_json::parse(shifted::betti_json(by_formula));
        out["oracle"] = nlohmann::ordered_json::parse(shifted::betti_json(by_oracle));
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "method: quotients\n"
                  << shifted::render_betti_text(by_quotients);
        std::cout << "method: formula\n" << shifted::render_betti_text(by_formula);
        std::cout << "method: oracle (char " << opts.characteristic << ")\n"
                  << shifted::render_betti_text(by_oracle);
    }
    return exit_ok;
}

int run_star(int n, int c, int m, bool betti, bool closed_form, bool regularity,
             bool defect, const std::string& format) {
    const shifted::star_params params(n, c, m);
    const bool any_action = betti || closed_form || regularity || defect;

    nlohmann::ordered_json json_out;
    std::ostringstream text_out;

    if (!any_action) {
        const shifted::symmetric_ideal ideal = shifted::star_ideal(params);
        if (format == "json") {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const shifted::partition& lambda : ideal.generators())
                list.push_back(lambda.parts());
            json_out["n"] = n;
            json_out["partitions"] = std::move(list);
        } else {
            for (const shifted::partition& lambda : ideal.generators())
                text_out << shifted::to_string(lambda) << '\n';
        }
    }
    if (betti) {
        const shifted::symmetric_ideal ideal = shifted::star_ideal(params);
        const shifted::betti_table table = shifted::betti_from_quotients(ideal);
        if (table != shifted::betti_closed_form(ideal) ||
            (m <= 3 && table != shifted::star_closed_form_table(params))) {
            std::cerr << "internal disagreement between Betti routes\n";
            return exit_internal;
        }
        if (format == "json")
            json_out["betti"] =
                nlohmann::ordered_json::parse(shifted::betti_json(table));
        else
            text_out << shifted::render_betti_text(table);
    }
    if (closed_form) {
        const shifted::betti_table table = shifted::star_closed_form_table(params);
        if (format == "json")
            json_out["closed_form"] =
                nlohmann::ordered_json::parse(shifted::betti_json(table));
        else
            text_out << shifted::render_betti_text(table);
    }
    if (regularity) {
        if (format == "json")
            json_out["regularity"] = shifted::star_regularity(params);
        else
            text_out << "regularity: " << shifted::star_regularity(params) << '\n';
    }
    if (defect) {
        const shifted::bigint value = shifted::third_symbolic_defect(n, c);
        if (format == "json")
            json_out["third_symbolic_defect"] = value.get_str();
        else
            text_out << "third symbolic defect: " << value.get_str() << '\n';
    }

    if (format == "json")
        std::cout << json_out.dump() << '\n';
    else
        std::cout << text_out.str();
    return exit_ok;
}

int run_equivariant(const std::string& input, const std::string& format) {
    const shifted::symmetric_ideal ideal =
        shifted::ideal_from_document(load_document(input));
    const shifted::equivariant_cells cells = shifted::equivariant_table(ideal);
    if (format == "json")
        std::cout << shifted::equivariant_json(cells) << '\n';
    else
        std::cout << shifted::render_equivariant_text(cells);
    return exit_ok;
}

int run_filtration(const std::string& input) {
    const shifted::symmetric_ideal ideal =
        shifted::ideal_from_document(load_document(input));
    std::cout << shifted::render_filtration_text(shifted::filtration(ideal));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric monomial ideals: shiftedness, linear quotients and "
                 "graded Betti numbers"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    bool strong = false;
    betti_options bopts;
    int star_n = 0, star_c = 0, star_m = 0;
    bool star_betti = false, star_closed = false, star_reg = false, star_defect = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "JSON ideal document")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "Decide the shifted property");
    add_input(check);
    check->add_flag("--strong", strong, "Also decide the strongly shifted property");

    CLI::App* gens = app.add_subcommand("gens", "List the minimal monomial generators");
    add_input(gens);
    add_format(gens);

    CLI::App* quotients =
        app.add_subcommand("quotients", "Linear-quotient listing with colon variables");
    add_input(quotients);
    add_format(quotients);

    CLI::App* betti = app.add_subcommand("betti", "Graded Betti numbers");
    add_input(betti);
    add_format(betti);
    betti->add_option("--method", bopts.method,
                      "quotients, formula, oracle, or all")
        ->check(CLI::IsMember({"quotients", "formula", "oracle", "all"}));
    betti->add_option("--char", bopts.characteristic,
                      "Field characteristic for the oracle (prime)");
    betti->add_option("--guard", bopts.guard, "Oracle multidegree guard");
    betti->add_flag("--lcm-closure", bopts.lcm_closure,
                    "Oracle enumerates lcms of generator subsets instead of the box");

    CLI::App* star =
        app.add_subcommand("star", "Symbolic powers of monomial star configurations");
    star->add_option("--n", star_n, "Number of variables")->required();
    star->add_option("--c", star_c, "Codimension")->required();
    star->add_option("--m", star_m, "Symbolic power")->required();
    star->add_flag("--betti", star_betti, "Print the Betti table");
    star->add_flag("--closed-form", star_closed,
                   "Print the Betti table from the closed row formulas (m <= 3)");
    star->add_flag("--regularity", star_reg, "Print the regularity");
    star->add_flag("--defect", star_defect, "Print the third symbolic defect");
    add_format(star);

    CLI::App* equivariant =
        app.add_subcommand("equivariant", "Induced-module summands of Tor, with dimensions");
    add_input(equivariant);
    add_format(equivariant);

    CLI::App* filtration =
        app.add_subcommand("filtration", "Partition generators in filtration order");
    add_input(filtration);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse diagnostic
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(input, strong);
        if (app.got_subcommand(gens))
            return run_gens(input, format);
        if (app.got_subcommand(quotients))
            return run_quotients(input, format);
        if (app.got_subcommand(betti))
            return run_betti(input, bopts, format);
        if (app.got_subcommand(star))
            return run_star(star_n, star_c, star_m, star_betti, star_closed,
                            star_reg, star_defect, format);
        if (app.got_subcommand(equivariant))
            return run_equivariant(input, format);
        if (app.got_subcommand(filtration))
            return run_filtration(input);
    } catch (const shifted::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const shifted::size_guard_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_size_guard;
    } catch (const shifted::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}
