#include <doctest.h>

#include <cmath>

#include "evenwalks/examples.hpp"
#include "evenwalks/moments.hpp"

using namespace evenwalks;

TEST_CASE("edge weights") {
    const auto spec = MomentSpec::gaussian_spec(4);
    CHECK(weight(Walk({1, 2, 1}), spec) == 1);
    CHECK(weight(Walk({1, 2, 1, 2, 1}), spec) == 3);       // one edge of multiplicity 4
    CHECK(weight(examples::irreducible_w8(), spec) == 1);  // four doubled edges
    CHECK(weight(minimal_walk_of({1, 2, 3, 1}), spec) == 0);

    auto zd = spec;
    zd.zero_diagonal = true;
    CHECK(weight(Walk({1, 1, 1}), zd) == 0);
    CHECK(weight(Walk({1, 2, 1}), zd) == 1);
}

TEST_CASE("class cardinalities") {
    CHECK(class_cardinality(Walk({1, 2, 1}), 3) == 6);
    CHECK(class_cardinality(Walk({1, 1, 1}), 5) == 5);
    CHECK(class_cardinality(minimal_walk_of({5, 2, 1, 5, 7, 3, 1, 5}), 4) == 0);  // five vertices
}

TEST_CASE("walk sums against closed forms") {
    for (int n : {1, 2, 3, 7}) {
        CHECK(exact_moment(1, MomentSpec::rademacher_spec(n)) == Rational(n));
        CHECK(exact_moment(1, MomentSpec::gaussian_spec(n)) == Rational(n));
        CHECK(exact_moment(1, MomentSpec::uniform_spec(n)) == Rational(n));
    }
    for (int s : {1, 2, 3}) {
        // a single entry: the moment is the plain even moment of the law
        CHECK(exact_moment(s, MomentSpec::gaussian_spec(1)) ==
              MomentSpec::gaussian_spec(1).moment(2 * s));
    }
    // rademacher fourth-power trace grows as 2n-1
    for (int n : {1, 2, 5, 9}) {
        CHECK(exact_moment(2, MomentSpec::rademacher_spec(n)) == Rational(2 * n - 1));
    }
}

TEST_CASE("index sums agree with walk sums") {
    CHECK(brute_force_moment(1, MomentSpec::rademacher_spec(2)) == 2);
    for (int s = 1; s <= 3; ++s) {
        for (int n = 1; n <= 3; ++n) {
            const auto gauss = MomentSpec::gaussian_spec(n);
            CHECK(brute_force_moment(s, gauss) == exact_moment(s, gauss));
            auto zd = MomentSpec::uniform_spec(n);
            zd.zero_diagonal = true;
            CHECK(brute_force_moment(s, zd) == exact_moment(s, zd));
        }
    }
    CHECK_THROWS_AS(brute_force_moment(6, MomentSpec::rademacher_spec(4), 1000), BudgetExceeded);
}

TEST_CASE("moment polynomials") {
    const auto p1 = moment_polynomial(1, MomentSpec::rademacher_spec(1));
    REQUIRE(p1.coeff.size() == 3);
    CHECK(p1.coeff[2] == 1);
    CHECK(p1.coeff[1] == 0);
    CHECK(p1.coeff[0] == 0);

    for (int s = 1; s <= 5; ++s) {
        for (const auto& spec : {MomentSpec::rademacher_spec(1), MomentSpec::gaussian_spec(1),
                                 MomentSpec::uniform_spec(1)}) {
            const auto poly = moment_polynomial(s, spec);
            CHECK(poly.coeff[static_cast<std::size_t>(s) + 1] ==
                  Rational(catalan(static_cast<unsigned>(s))));
        }
    }

    const auto spec43 = MomentSpec::gaussian_spec(4);
    const auto poly3 = moment_polynomial(3, spec43);
    CHECK(poly3.evaluate_moment(4) == brute_force_moment(3, spec43));
}

TEST_CASE("four-way split") {
    // s=1 with a threshold covering both walks: everything in the first part
    const auto spec = MomentSpec::rademacher_spec(2);
    const auto z = z_decomposition(1, spec, Rational(2), Rational(1, 8));
    CHECK(z.z1 == 2);
    CHECK(z.z2 == 0);
    CHECK(z.z3 == 0);
    CHECK(z.z4 == 0);

    // zero threshold pushes every self-intersecting walk into the tail part
    const auto z0 = z_decomposition(1, spec, Rational(0), Rational(1, 8));
    CHECK(z0.z4 == 1);  // the loop walk: (n)_1 / n^s with n = 2
    CHECK(z0.total() == exact_moment(1, spec));

    const auto spec43 = MomentSpec::gaussian_spec(3);
    const auto z43 = z_decomposition(4, spec43, Rational(1), Rational(1, 8));
    CHECK(z43.total() == exact_moment(4, spec43));
}

TEST_CASE("matrix sampling") {
    const auto a = mc_moment(2, 8, EntryLaw::rademacher, 200, 77);
    const auto b = mc_moment(2, 8, EntryLaw::rademacher, 200, 77);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);

    // E Tr A^2 = n exactly for variance-one entries
    const auto t2 = mc_moment(1, 20, EntryLaw::uniform_symmetric, 4000, 5);
    CHECK(std::abs(t2.estimate - 20.0) <= 4.0 * t2.std_error);

    const auto g = mc_moment(1, 10, EntryLaw::gaussian, 4000, 6);
    CHECK(std::abs(g.estimate - 10.0) <= 4.0 * g.std_error);
}

TEST_CASE("moment truncation") {
    const auto rad = MomentSpec::rademacher_spec(3);
    CHECK(truncate_spec(rad, Rational(1)).even_moments == rad.even_moments);
    CHECK(truncate_spec(rad, Rational(1, 2)).even_moments.front() == 0);

    const auto uni4 = MomentSpec::uniform_spec(3, Rational(4));  // uniform on [-2, 2]
    CHECK(truncate_spec(uni4, Rational(2)).even_moments == uni4.even_moments);
    CHECK(truncate_spec(uni4, Rational(3)).even_moments == uni4.even_moments);
    const auto clipped = truncate_spec(uni4, Rational(1));
    CHECK(clipped.even_moments[0] == Rational(1, 6));   // integral of x^2/4 over [-1,1]
    CHECK(clipped.even_moments[1] == Rational(1, 10));  // integral of x^4/4 over [-1,1]

    // variance-one uniform law: clipping level is irrational, no-op is exact
    const auto uni3 = MomentSpec::uniform_spec(3);
    CHECK(truncate_spec(uni3, Rational(2)).even_moments == uni3.even_moments);
    CHECK_THROWS_AS(truncate_spec(uni3, Rational(1)), std::invalid_argument);

    CHECK(truncate_spec_power(rad, 5, 1, 25).even_moments == rad.even_moments);
    CHECK(truncate_spec_power(uni4, 1 << 25, 1, 25).even_moments == uni4.even_moments);
    CHECK_THROWS_AS(truncate_spec_power(uni4, (1 << 25) - 1, 1, 25), std::invalid_argument);
    CHECK_THROWS_AS(truncate_spec(MomentSpec::gaussian_spec(3), Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("per-walk weight bound") {
    const auto spec = truncate_spec(MomentSpec::uniform_spec(1), Rational(2));
    CHECK(check_weight_bound(examples::tree_like_w8(), spec, Rational(2)));
    CHECK(check_weight_bound(Walk({1, 2, 1, 2, 1}), spec, Rational(2)));
    // V4 <= V12 for the variance-one uniform law
    CHECK(spec.moment(4) <= spec.moment(12));
}

TEST_CASE("missing moment orders are reported") {
    MomentSpec spec = MomentSpec::rademacher_spec(2, 2);
    CHECK_THROWS_AS(spec.moment(6), std::out_of_range);
    CHECK_THROWS_AS(weight(Walk({1, 2, 1, 2, 1, 2, 1}), spec), std::out_of_range);
}
