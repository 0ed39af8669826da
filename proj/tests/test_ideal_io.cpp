#include <doctest.h>

#include <string>

#include "shifted/errors.hpp"
#include "shifted/ideal_io.hpp"
#include "shifted/koszul.hpp"
#include "shifted/linear_quotients.hpp"
#include "shifted/nlambda.hpp"
#include "support/fixtures.hpp"

using namespace shifted;

TEST_SUITE_BEGIN("ideal_io");

TEST_CASE("parsing partition documents") {
    const auto doc = parse_ideal_document(
        R"({"n":4,"partitions":[[1,1,2,2],[0,2,2,2],[0,1,2,3]]})");
    CHECK(doc.n == 4);
    REQUIRE(doc.has_partitions);
    CHECK(doc.partitions.size() == 3);
    CHECK(ideal_from_document(doc).generators() ==
          fixtures::example_n4().generators());
}

TEST_CASE("parsing monomial documents") {
    const auto doc =
        parse_ideal_document(R"({"n":2,"monomials":[[1,0],[0,1]]})");
    REQUIRE(doc.has_monomials);
    CHECK(monomials_from_document(doc) == monomial_set(2, {{1, 0}, {0, 1}}));
    CHECK(ideal_from_document(doc).generators() ==
          std::vector<partition>{partition({0, 1})});
}

TEST_CASE("validation failures point at the offending entry") {
    auto expect_message = [](const std::string& text, const std::string& needle) {
        try {
            parse_ideal_document(text);
            FAIL_CHECK("expected a validation_error for ", text);
        } catch (const validation_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_message(R"({"partitions":[[0,1]]})", "missing field \"n\"");
    expect_message(R"({"n":0,"partitions":[[0,1]]})", "positive");
    expect_message(R"({"n":2})", "exactly one");
    expect_message(R"({"n":2,"partitions":[[0,1]],"monomials":[[1,0]]})",
                   "exactly one");
    expect_message(R"({"n":2,"partitions":[[0,1,2]]})", "partitions[0]");
    expect_message(R"({"n":2,"partitions":[[0,1],[0,-1]]})", "partitions[1]");
    expect_message(R"({"n":2,"partitions":[[0,1],[1,0]]})", "not non-decreasing");
    expect_message(R"(not json)", "invalid JSON");
}

TEST_CASE("monomial input must be an orbit union") {
    const auto doc = parse_ideal_document(R"({"n":2,"monomials":[[1,0]]})");
    CHECK_THROWS_AS(ideal_from_document(doc), validation_error);
    CHECK(monomials_from_document(doc) == monomial_set(2, {{1, 0}}));
}

TEST_CASE("gens JSON round-trips") {
    const monomial_set gens = fixtures::example_n3().minimal_generators();
    const auto doc = parse_ideal_document(gens_json(gens));
    CHECK(monomials_from_document(doc) == gens);
    CHECK(ideal_from_document(doc).generators() ==
          fixtures::example_n3().generators());
}

TEST_CASE("Betti text layout") {
    betti_table table;
    table.add(0, 2, 3);
    table.add(1, 3, 2);
    CHECK(render_betti_text(table) == "        0  1\n"
                                      "total:  3  2\n"
                                      "2:      3  2\n");

    betti_table gap;
    gap.add(0, 3, 1);
    gap.add(1, 6, 5);
    CHECK(render_betti_text(gap) == "        0  1\n"
                                    "total:  1  5\n"
                                    "3:      1  .\n"
                                    "4:      .  .\n"
                                    "5:      .  5\n");
}

TEST_CASE("Betti JSON is sorted by (j, i)") {
    betti_table table;
    table.add(1, 7, 72);
    table.add(0, 6, 34);
    CHECK(betti_json(table) ==
          R"({"entries":[{"i":0,"j":6,"beta":34},{"i":1,"j":7,"beta":72}]})");
}

TEST_CASE("counts past 64 bits serialize as decimal strings") {
    betti_table table;
    table.add(0, 3, factorial(25));
    CHECK(betti_json(table) ==
          R"({"entries":[{"i":0,"j":3,"beta":"15511210043330985984000000"}]})");
    CHECK(render_betti_text(table).find("15511210043330985984000000") !=
          std::string::npos);
}

TEST_CASE("quotients rendering") {
    const auto table = quotient_table(symmetric_ideal::normalized(
        2, {partition({1, 1}), partition({0, 2})}));
    const std::string text = render_quotients_text(table);
    CHECK(text.find("i  generator") != std::string::npos);
    CHECK(text.find("x1*x2") != std::string::npos);
    const std::string json = quotients_json(2, table);
    CHECK(json.find("\"rows\"") != std::string::npos);
    CHECK(json.find("\"position\":1") != std::string::npos);
}

TEST_CASE("filtration rendering") {
    CHECK(render_filtration_text(filtration(fixtures::example_n4())) ==
          "(1,1,2,2)\n(0,2,2,2)\n(0,1,2,3)\n");
}

TEST_CASE("equivariant rendering mentions every cell") {
    const auto cells = equivariant_table(fixtures::example_n3());
    const std::string text = render_equivariant_text(cells);
    CHECK(text.find("d=3:") != std::string::npos);
    CHECK(text.find("d=4:") != std::string::npos);
    CHECK(text.find("| total") != std::string::npos);
    const std::string json = equivariant_json(cells);
    CHECK(json.find("\"cells\"") != std::string::npos);
    CHECK(json.find("\"total\"") != std::string::npos);
}

TEST_SUITE_END();
