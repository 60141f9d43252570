#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <map>

#include "evenwalks/examples.hpp"
#include "evenwalks/reduce.hpp"

#ifndef EVENWALKS_FIXTURE_FILE
#define EVENWALKS_FIXTURE_FILE "fixtures/walks_v1.jsonl"
#endif

using namespace evenwalks;

namespace {

std::map<std::string, Walk> load_fixtures() {
    std::ifstream in(EVENWALKS_FIXTURE_FILE);
    REQUIRE(in.good());
    std::map<std::string, Walk> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        out.emplace(j.at("name").get<std::string>(),
                    Walk(j.at("labels").get<std::vector<int>>()));
    }
    return out;
}

}  // namespace

TEST_CASE("fixture corpus matches the generators") {
    const auto fixtures = load_fixtures();
    CHECK(fixtures.at("tree_like_w8") == examples::tree_like_w8());
    CHECK(fixtures.at("irreducible_w8") == examples::irreducible_w8());
    CHECK(fixtures.at("two_open_one_closed_w16") == examples::two_open_one_closed_w16());
    CHECK(fixtures.at("imported_cell_walk_plain_q3") == examples::imported_cell_walk(3, false));
    for (int q : {1, 2, 5, 10}) {
        CHECK(fixtures.at("imported_cell_walk_q" + std::to_string(q)) ==
              examples::imported_cell_walk(q));
    }
}

TEST_CASE("every fixture is a valid minimal even walk") {
    for (const auto& [name, walk] : load_fixtures()) {
        CAPTURE(name);
        CHECK(is_even(walk));
        CHECK(is_minimal(walk));
        CHECK(check_bts_arrivals_open(walk));
        CHECK(check_imported_cell_bounds(walk));
    }
}
