#include "doctest.h"

#include "dilute/combinatorics.hpp"
#include "dilute/errors.hpp"

using namespace dilute;

TEST_CASE("root degree: base values and closed form") {
    CHECK(catalan_root_degree(3, 3) == 1);    // unique 3-edge star
    CHECK(catalan_root_degree(5, 2) == 14);   // t_s^(2) = t_{s-1}
    CHECK(catalan_root_degree(1, 1) == 1);
    CHECK(catalan_root_degree(5, 5) == 1);
    // cross-check one deeper cell against the definitional convolution
    CHECK(catalan_root_degree(10, 7) == catalan_convolution(3, 7));
    CHECK_THROWS_AS(catalan_root_degree(3, 4), ConfigError);
    // table construction verifies (5.2) against (5.4) on every cell
    CHECK_NOTHROW(RootDegreeTable(64));
}

TEST_CASE("catalan convolution") {
    CHECK(catalan_convolution(0, 3) == 1);
    CHECK(catalan_convolution(1, 3) == 3);
    CHECK(catalan_convolution(4, 3) == 90);   // = R_6
    CHECK(catalan_convolution(5, 1) == catalan(5));
    // T_k^(p) = sum_j t_j T_{k-j}^(p-1)
    Integer sum(0);
    for (unsigned j = 0; j <= 6; ++j) sum += catalan(j) * catalan_convolution(6 - j, 2);
    CHECK(catalan_convolution(6, 3) == sum);
}

TEST_CASE("r sequence") {
    CHECK(r_sequence(2) == 1);
    CHECK(r_sequence(3) == 3);
    CHECK(r_sequence(4) == 9);
    CHECK(r_sequence(6) == 90);
    CHECK(r_sequence(10) == catalan_convolution(8, 3));
    CHECK_THROWS_AS(r_sequence(1), ConfigError);
}

TEST_CASE("single multi-edge counts") {
    CHECK(n_one_multiedge(2, 2) == 1);
    CHECK(n_one_multiedge(3, 3) == 1);
    CHECK(n_one_multiedge(7, 7) == 1);  // all 2m steps on one edge
    CHECK(n_one_multiedge(4, 3) == 8);
    CHECK(n_one_multiedge(5, 2) == 120);
    CHECK_THROWS_AS(n_one_multiedge(3, 4), ConfigError);
}

TEST_CASE("n_12 closed form") {
    CHECK(n_12_closed(2) == 1);
    CHECK(n_12_closed(4) == 28);
    CHECK(n_12_closed(12) == n_one_multiedge(12, 2));
    for (unsigned s = 2; s <= 64; ++s) CHECK(n_12_closed(s) == n_one_multiedge(s, 2));
}

TEST_CASE("D/E recurrences vs closed forms") {
    CHECK(de_recurrence(3, 1).first == 15);        // D_3^(1) = 3 t_3
    CHECK(de_recurrence(1, 1).second == 1);        // E_1^(1) = (1/2) t_2
    const auto [d63, e63] = de_recurrence(6, 3);
    CHECK(d63 == exact_div(factorial(12), factorial(3) * factorial(9)));
    CHECK(e63 == exact_div(factorial(13), factorial(3) * factorial(10)));
    CHECK_NOTHROW(de_verify_range(64));
    CHECK_THROWS_AS(de_recurrence(2, 3), ConfigError);
}

TEST_CASE("n_hat_22 closed form") {
    CHECK(n_hat_22(4) == 4);    // 4 * 8!/(0! 8!)
    CHECK(n_hat_22(5) == 40);   // 4 * 10!/(1! 9!)
    CHECK(n_hat_22(6) == 264);
    CHECK_THROWS_AS(n_hat_22(3), ConfigError);
}

TEST_CASE("first correction") {
    const auto t = first_correction(4, Rational(1), Rational(1), Rational(1));
    CHECK(t.value == 12);  // 4*1 + 8!/(1! 7!)
    CHECK(t.v4_sq_component == 4);
    CHECK(t.v6_component == 8);

    const auto z = first_correction(5, Rational(0), Rational(0), Rational(3));
    CHECK(z.value == 0);

    // components match the sibling closed forms at s = 6
    const Rational v4(2, 3), v6(7, 5), rho(11, 2);
    const auto c = first_correction(6, v4, v6, rho);
    CHECK(c.v4_sq_component == Rational(n_hat_22(6)) * v4 * v4 / rho);
    CHECK(c.v6_component == Rational(n_one_multiedge(6, 3)) * v6 / rho);
    CHECK(c.value == c.v4_sq_component + c.v6_component);
    CHECK_THROWS_AS(first_correction(3, v4, v6, rho), ConfigError);
    CHECK_THROWS_AS(first_correction(6, v4, v6, Rational(0)), ConfigError);
}

TEST_CASE("exit degree bound audit") {
    // literal (5.1) fails at (1,1): 4 * t_1^(1) = 4 > 3 = 3 * t_1
    const auto report = check_exit_degree_bound(60);
    CHECK(report.checked == 60 * 61 / 2);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0] == std::make_pair(1u, 1u));

    // (5,5): 4^5 = 1024 <= 3^5 * 42 = 10206
    const RootDegreeTable table(5);
    CHECK(int_pow(Integer(4), 5) * table.at(5, 5) <= int_pow(Integer(3), 5) * catalan(5));
}
