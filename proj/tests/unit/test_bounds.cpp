#include <doctest.h>

#include <cmath>
#include <vector>

#include "evenwalks/bounds.hpp"
#include "evenwalks/examples.hpp"
#include "evenwalks/verify.hpp"

using namespace evenwalks;

TEST_CASE("supremum constant") {
    const double c1 = constant_C1();
    CHECK(c1 > 2.0 * M_E);      // the limit of the terms
    CHECK(c1 < 5.7);
    CHECK(c1 == doctest::Approx(34.0 / std::exp(std::lgamma(17.0) / 17.0)));  // k = 17 term
    // small-k terms
    CHECK(2.0 * 1 / 1.0 == 2.0);
    CHECK(constant_C1(20000) == doctest::Approx(c1));
}

TEST_CASE("placement count bounds") {
    CHECK(bound_T2(4, 1) == 8);
    CHECK(bound_Tk(4, 3, 1) == 32);
    CHECK(bound_T2_open(4, 1, 0, 3) == 8);  // r = 0 reduces to the closed bound
    CHECK(bound_T2_open(4, 1, 1, 2) == 16);
    CHECK(bound_T3_open(4, 1, 0, 1) == 32);
    CHECK(half_round_up(3) == 2);
    CHECK(half_round_up(4) == 2);
    CHECK_THROWS_AS(bound_T2_open(4, 1, 2, 1), std::invalid_argument);

    // exhaustive placement count: ordered pairs of disjoint tau-pairs
    const int s = 5;
    long count = 0;
    for (int a = 1; a <= s; ++a)
        for (int b = a + 1; b <= s; ++b)
            for (int c = 1; c <= s; ++c)
                for (int d = c + 1; d <= s; ++d) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (c < a || (c == a && d < b)) continue;  // unordered collection
                    ++count;
                }
    CHECK(Rational(count) <= bound_T2(5, 2));
    CHECK(count == 15);
}

TEST_CASE("falling factorial exponential bound") {
    const auto r = check_product_exp_bound(2, 10, 1);
    CHECK(r.satisfied);
    CHECK(to_double(r.lhs) == doctest::Approx(0.9));
    CHECK(check_product_exp_bound(5, 100, 1).satisfied);
    CHECK_THROWS_AS(check_product_exp_bound(10, 10, 1), std::invalid_argument);

    // the zero-offset variant holds as well on a small grid (reported, not
    // part of the hard grid)
    for (int s = 2; s <= 20; ++s) {
        for (int n : {s + 1, 2 * s, 100}) {
            CHECK(check_product_exp_bound(s, n, 0).satisfied);
        }
    }
}

TEST_CASE("repeat-direction arrivals sit in exit clusters") {
    CHECK(check_first_arrival_in_exit_cluster(Walk({1, 2, 1, 2, 1})));
    CHECK(check_first_arrival_in_exit_cluster(examples::tree_like_w8()));  // vacuous
    const Walk w18 = minimal_walk_of({1, 2, 3, 4, 3, 5, 3, 6, 3, 7, 3, 8, 3, 9, 3, 2, 3, 2, 1});
    CHECK(check_first_arrival_in_exit_cluster(w18));
}

TEST_CASE("exit positions are paid for by cells") {
    CHECK(check_exit_subclusters_all(examples::tree_like_w8()));
    CHECK(check_exit_subclusters_all(examples::irreducible_w8()));
    CHECK(check_exit_subclusters_all(examples::two_open_one_closed_w16()));
    // delayed closures revert to old positions at the root and elsewhere
    CHECK(check_exit_subclusters_all(Walk({1, 2, 3, 1, 4, 1, 3, 2, 1, 2, 1})));
    CHECK(check_exit_subclusters_all(Walk({1, 2, 3, 4, 2, 5, 2, 4, 3, 2, 6, 2, 1})));

    const WalkGraph gb(examples::irreducible_w8());
    const auto rep = cells(examples::irreducible_w8());
    const auto r2 = check_exit_subclusters(examples::irreducible_w8(), gb, rep, 2);
    CHECK(r2.satisfied);
    CHECK(r2.lhs <= r2.rhs);
    CHECK(r2.rhs == 3);  // cells at vertex 2: times 1, 4, 7
}

TEST_CASE("runs factor") {
    const auto profile = classify_walk(examples::irreducible_w8());
    CHECK(walk_count_factor(profile, 0) == 1);
    CHECK(walk_count_factor(profile, 2) == 9);
}

TEST_CASE("walk censuses stay clean") {
    const auto spec = truncate_spec(MomentSpec::uniform_spec(1), Rational(2));
    for (int s = 1; s <= 4; ++s) {
        const auto summary = run_walk_checks(s, spec, Rational(2));
        CHECK(summary.violations == 0);
        CHECK(summary.checks == summary.walks * 10);
        const auto cells_summary = run_cell_census(s);
        CHECK(cells_summary.violations == 0);
    }
}

TEST_CASE("degree census rows") {
    const auto summary = run_l_property_census(6);
    CHECK(summary.violations == 0);
    CHECK(summary.checks == 7);
    CHECK(summary.walks == 132);
}

TEST_CASE("trend rows") {
    const auto report = trend_report(1.0, {4, 5}, 400, 11, 8);
    CHECK(report.rows.size() == 2);
    CHECK(report.c0 == doctest::Approx(2.0 * M_E * report.c1 * report.c1));
    CHECK(report.c == doctest::Approx(report.c0 + 37.0));
    for (const auto& row : report.rows) {
        CHECK(row.n == static_cast<int>(std::llround(std::pow(row.s, 1.5))));
        CHECK(row.ratio > 0.0);
        CHECK(row.within);
    }
    CHECK(report.all_rows_ok());
}
