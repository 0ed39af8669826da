#include <doctest.h>

#include <algorithm>

#include "shifted/errors.hpp"
#include "shifted/linear_quotients.hpp"
#include "shifted/nlambda.hpp"
#include "shifted/star_config.hpp"
#include "support/fixtures.hpp"

using namespace shifted;

TEST_SUITE_BEGIN("star_config");

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(star_params(3, 4, 1), validation_error);
    CHECK_THROWS_AS(star_params(3, 0, 1), validation_error);
    CHECK_THROWS_AS(star_params(3, 2, 0), validation_error);
}

TEST_CASE("partition generators of the symbolic powers") {
    CHECK(star_ideal(star_params(6, 3, 5)).generators() ==
          std::vector<partition>{
              partition({1, 2, 2, 2, 2, 2}), partition({1, 1, 3, 3, 3, 3}),
              partition({0, 2, 3, 3, 3, 3}), partition({0, 1, 4, 4, 4, 4}),
              partition({0, 0, 5, 5, 5, 5})});

    CHECK(star_ideal(star_params(4, 2, 2)).generators() ==
          std::vector<partition>{partition({1, 1, 1, 1}), partition({0, 2, 2, 2})});

    // m = 1: one generator, all squarefree monomials of degree n-c+1.
    for (int n = 2; n <= 6; ++n) {
        for (int c = 1; c <= n; ++c) {
            const auto ideal = star_ideal(star_params(n, c, 1));
            REQUIRE(ideal.generators().size() == 1);
            std::vector<int> expected(static_cast<std::size_t>(n), 1);
            for (int k = 0; k < c - 1; ++k)
                expected[static_cast<std::size_t>(k)] = 0;
            CHECK(ideal.generators().front() == partition(expected));
            CHECK(ideal.minimal_generators().size() ==
                  binomial(n, n - c + 1));
        }
    }

    // c = n: the m-th power of the maximal ideal.
    const auto cube = star_ideal(star_params(3, 3, 3));
    CHECK(cube.generators() ==
          std::vector<partition>{partition({1, 1, 1}), partition({0, 1, 2}),
                                 partition({0, 0, 3})});

    // c = 1: the principal ideal (x1 ... xn)^m.
    const auto principal = star_ideal(star_params(4, 1, 2));
    CHECK(principal.generators() ==
          std::vector<partition>{partition({2, 2, 2, 2})});
}

TEST_CASE("strand degrees") {
    CHECK(star_strand_degrees(star_params(9, 4, 3)) == std::vector<int>{8, 13, 18});
    CHECK(star_strand_degrees(star_params(6, 3, 1)) == std::vector<int>{4});
    CHECK(star_strand_degrees(star_params(6, 3, 5)) ==
          std::vector<int>{8, 11, 14, 17, 20});
    CHECK(star_strand_degrees(star_params(4, 4, 3)) == std::vector<int>{3});
}

TEST_CASE("bottom row formula") {
    const star_params params(9, 4, 3);
    CHECK(star_bottom_row(params, 0) == 84);
    CHECK(star_bottom_row(params, 1) == 252);
    CHECK(star_bottom_row(params, 2) == 252);
    CHECK(star_bottom_row(params, 3) == 84);
    CHECK(star_bottom_row(params, 4) == 0);
    CHECK(star_bottom_row(star_params(6, 3, 2), 2) == 15);
    CHECK_THROWS_AS(star_bottom_row(star_params(6, 3, 1), 0), validation_error);
}

TEST_CASE("top row formula") {
    const star_params params(9, 4, 3);
    CHECK(star_top_row(params, 0) == 9);
    CHECK(star_top_row(params, 1) == 8);
    CHECK(star_top_row(params, 2) == 0);
    CHECK_THROWS_AS(star_top_row(star_params(4, 2, 3), 0), validation_error);

    // m = 1: squarefree Veronese Betti numbers binom(n, r+i) binom(r+i-1, i)
    // with r = n - c + 1, matching the subquotient formula.
    for (int n = 2; n <= 6; ++n) {
        for (int c = 1; c <= n; ++c) {
            const int r = n - c + 1;
            const auto generator = star_ideal(star_params(n, c, 1)).generators().front();
            for (int i = 0; i <= n; ++i) {
                CHECK(star_top_row(star_params(n, c, 1), i) ==
                      binomial(n, r + i) * binomial(r + i - 1, i));
                CHECK(star_top_row(star_params(n, c, 1), i) ==
                      nlambda_betti(generator, i));
            }
        }
    }
}

TEST_CASE("symbolic square and cube closed formulas") {
    const star_params square(4, 2, 2);
    CHECK(star_betti_m2(square, 0, 4) == 1);
    CHECK(star_betti_m2(square, 0, 6) == 4);
    CHECK(star_betti_m2(square, 1, 6) == 4);
    CHECK(star_betti_m2(square, 0, 5) == 0); // off-strand

    const star_params cube(9, 4, 3);
    CHECK(star_betti_m3(cube, 0, 13) == 252);
    CHECK(star_betti_m3(cube, 1, 13) == 720);
    CHECK(star_betti_m3(cube, 2, 13) == 684);
    CHECK(star_betti_m3(cube, 3, 13) == 216);
    CHECK(star_betti_m3(cube, 0, 9) == 0);

    CHECK_THROWS_AS(star_betti_m2(star_params(4, 1, 2), 0, 4), validation_error);
    CHECK_THROWS_AS(star_betti_m3(star_params(4, 2, 3), 0, 5), validation_error);
}

TEST_CASE("closed-form tables agree with the partition formula") {
    for (int n = 2; n <= 6; ++n) {
        for (int c = 1; c <= n; ++c) {
            for (int m = 1; m <= 3; ++m) {
                if ((m == 2 && c < 2) || (m == 3 && c < 3))
                    continue;
                const star_params params(n, c, m);
                CAPTURE(n);
                CAPTURE(c);
                CAPTURE(m);
                CHECK(star_closed_form_table(params) ==
                      betti_closed_form(star_ideal(params)));
            }
        }
    }
    CHECK_THROWS_AS(star_closed_form_table(star_params(6, 3, 4)), validation_error);
}

TEST_CASE("regularity and symbolic defect") {
    CHECK(star_regularity(star_params(9, 4, 3)) == 18);
    CHECK(star_regularity(star_params(6, 3, 5)) == 20);
    CHECK(star_regularity(star_params(5, 5, 4)) == 4);

    CHECK(third_symbolic_defect(9, 4) == 252);
    CHECK(third_symbolic_defect(4, 3) == 12);
    CHECK(third_symbolic_defect(5, 5) == binomial(5, 3) * 2);
}

TEST_CASE("regularity matches the computed Betti tables") {
    for (int n = 2; n <= 6; ++n)
        for (int c = 1; c <= n; ++c)
            for (int m = 1; m <= 3; ++m)
                CHECK(betti_from_quotients(star_ideal(star_params(n, c, m))).max_row() ==
                      star_regularity(star_params(n, c, m)));
}

TEST_CASE("symbolic powers are strongly shifted (small sweep)") {
    for (int n = 1; n <= 5; ++n)
        for (int c = 1; c <= n; ++c)
            for (int m = 1; m <= 3; ++m)
                CHECK(is_strongly_shifted(star_ideal(star_params(n, c, m))));
}

TEST_CASE("defect equals the first column of the middle strand") {
    // The symbolic cube acquires binom(n,c-2)(n-c+2) new generators in
    // degree 2(n-c+1)+1; cross-check against the computed tables.
    for (int n = 3; n <= 7; ++n) {
        for (int c = 3; c <= n; ++c) {
            const star_params params(n, c, 3);
            const betti_table table = betti_from_quotients(star_ideal(params));
            bigint middle = table.get(0, 2 * (n - c + 1) + 1);
            if (c == n) {
                // all three strands collapse onto degree m; peel off the
                // top-row and bottom-row shares
                middle -= star_top_row(params, 0);
                middle -= star_bottom_row(params, 0);
            }
            CHECK(middle == third_symbolic_defect(n, c));
        }
    }
}

TEST_SUITE_END();
