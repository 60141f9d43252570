#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "evenwalks/dyck.hpp"

using namespace evenwalks;

namespace {

// test-local path generator, kept independent of for_each_dyck
void gen_paths(int s, std::string& prefix, int ones, int height, std::vector<std::string>& out) {
    if (static_cast<int>(prefix.size()) == 2 * s) {
        out.push_back(prefix);
        return;
    }
    if (ones < s) {
        prefix.push_back('1');
        gen_paths(s, prefix, ones + 1, height + 1, out);
        prefix.pop_back();
    }
    if (height > 0) {
        prefix.push_back('0');
        gen_paths(s, prefix, ones, height - 1, out);
        prefix.pop_back();
    }
}

std::vector<std::string> all_paths(int s) {
    std::vector<std::string> out;
    std::string prefix;
    gen_paths(s, prefix, 0, 0, out);
    return out;
}

int oracle_max_height(const std::string& bits) {
    int h = 0, best = 0;
    for (char c : bits) {
        h += c == '1' ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

}  // namespace

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(8) == 1430);
    CHECK(catalan(12) == 208012);
}

TEST_CASE("path validation") {
    CHECK_NOTHROW(DyckPath::from_string("1100"));
    CHECK_THROWS_AS(DyckPath::from_string("100"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::from_string("0011"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::from_string("1b"), std::invalid_argument);
    CHECK(DyckPath::from_string("1010").to_string() == "1010");
}

TEST_CASE("enumeration is complete, ordered and duplicate-free") {
    for (int s = 0; s <= 8; ++s) {
        const auto paths = enumerate_dyck(s);
        CHECK(BigInt(paths.size()) == catalan(static_cast<unsigned>(s)));
        std::set<std::string> uniq;
        for (const auto& p : paths) uniq.insert(p.to_string());
        CHECK(uniq.size() == paths.size());
        for (std::size_t i = 1; i < paths.size(); ++i) {
            CHECK(paths[i - 1] < paths[i]);
        }
    }
    CHECK(enumerate_dyck(1).front().to_string() == "10");
    CHECK(enumerate_dyck(8).size() == 1430);
    CHECK_THROWS_AS(enumerate_dyck(8, 100), BudgetExceeded);
}

TEST_CASE("max height agrees with a direct scan") {
    CHECK(max_height(DyckPath::from_string("1010")).max_height == 1);
    CHECK(max_height(DyckPath::from_string("11110000")).max_height == 4);
    CHECK(max_height(DyckPath::from_string("110100")).max_height == 2);
    for (const auto& bits : all_paths(6)) {
        CHECK(max_height(DyckPath::from_string(bits)).max_height == oracle_max_height(bits));
    }
}

TEST_CASE("contour trees") {
    const auto single = tree_of(DyckPath::from_string("10"));
    CHECK(single.vertex_count() == 2);
    CHECK(single.exit_degree(0) == 1);

    const auto chain2 = tree_of(DyckPath::from_string("1100"));
    CHECK(chain2.vertex_count() == 3);
    CHECK(chain2.max_exit_degree() == 1);

    const auto chain4 = tree_of(DyckPath::from_string("11110000"));
    CHECK(chain4.edge_count() == 4);
    CHECK(chain4.max_exit_degree() == 1);

    // creation indices are exactly 1..s along depth-first discovery
    const auto t = tree_of(DyckPath::from_string("110100"));
    CHECK(t.edge_count() == 3);
    for (int tau = 1; tau <= 3; ++tau) {
        CHECK(t.edge_child[static_cast<std::size_t>(tau - 1)] == tau);
    }
}

TEST_CASE("contour round trip is the identity") {
    for (int s = 0; s <= 6; ++s) {
        for (const auto& p : enumerate_dyck(s)) {
            CHECK(contour_of(tree_of(p)) == p);
        }
    }
}

TEST_CASE("branching census") {
    CHECK(has_L_property(DyckPath::from_string("1010"), 2));
    CHECK_FALSE(has_L_property(DyckPath::from_string("1100"), 2));
    // two independent routes: stack scan vs materialized tree
    for (const auto& p : enumerate_dyck(6)) {
        const int best = tree_of(p).max_exit_degree();
        for (int m = 1; m <= 7; ++m) {
            CHECK(has_L_property(p, m) == (best >= m));
        }
    }

    CHECK(count_L_property(2, 2) == 1);
    CHECK(count_L_property(3, 3) == 1);
    CHECK(count_L_property(4, 5) == 0);
    CHECK(count_L_property(6, 1) == catalan(6));

    for (int s = 1; s <= 7; ++s) {
        BigInt prev = -1;
        for (int m = s + 1; m >= 1; --m) {
            const BigInt c = count_L_property(s, m);
            CHECK(c >= prev);  // non-increasing in m
            prev = c;
            CHECK(Rational(c) <= l_property_bound(s, m));
        }
        CHECK(count_L_property(s, 1) == catalan(static_cast<unsigned>(s)));
        CHECK(count_L_property(s, s + 1) == 0);
    }
}

TEST_CASE("uniform sampling") {
    CHECK(sample_dyck_uniform(1, 7).to_string() == "10");
    CHECK(sample_dyck_uniform(9, 42).to_string() == sample_dyck_uniform(9, 42).to_string());

    // chi-square style frequency check against the exhaustive list, 5 sigma
    const int s = 3;
    const auto paths = enumerate_dyck(s);
    std::map<std::string, int> freq;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        ++freq[sample_dyck_uniform(s, 1000 + static_cast<std::uint64_t>(i)).to_string()];
    }
    CHECK(freq.size() == paths.size());
    const double expected = trials / 5.0;
    const double sigma = std::sqrt(trials * 0.2 * 0.8);
    for (const auto& [bits, count] : freq) {
        CHECK(std::abs(count - expected) <= 5.0 * sigma);
    }
}

TEST_CASE("height exponential mean") {
    const auto b1 = estimate_B(1, 1.0);
    CHECK(b1.value == doctest::Approx(std::exp(1.0)));
    const auto b2 = estimate_B(2, 1.0);
    CHECK(b2.value ==
          doctest::Approx((std::exp(1.0 / std::sqrt(2.0)) + std::exp(2.0 / std::sqrt(2.0))) / 2));

    // independent accumulation over a test-local enumeration
    double sum = 0.0;
    const auto paths = all_paths(7);
    for (const auto& bits : paths) {
        sum += std::exp(0.5 * oracle_max_height(bits) / std::sqrt(7.0));
    }
    CHECK(estimate_B(7, 0.5).value == doctest::Approx(sum / static_cast<double>(paths.size())));

    const auto sampled = estimate_B(7, 0.5, BMode::sampled, 20000, 9);
    CHECK(std::abs(sampled.value - sum / static_cast<double>(paths.size())) <=
          5.0 * sampled.std_error);
}
