#include <doctest.h>

#include <sstream>

#include "evenwalks/examples.hpp"
#include "evenwalks/io.hpp"

using namespace evenwalks;

TEST_CASE("walk records round trip") {
    for (const auto& w : enumerate_even_walks(3)) {
        CHECK(walk_from_json_line(walk_json_line(w)) == w);
    }
    CHECK_THROWS_AS(walk_from_json_line("{\"s\":2,\"labels\":[1,2,1]}"), std::invalid_argument);
    CHECK_THROWS_AS(walk_from_json_line("{\"s\":1,\"labels\":[1,2,3]}"), std::invalid_argument);

    std::stringstream buffer;
    const auto walks = enumerate_even_walks(2);
    write_walks_jsonl(buffer, walks);
    CHECK(read_walks_jsonl(buffer) == walks);
}

TEST_CASE("csv quoting") {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.row({"plain", "with,comma", "with\"quote"});
    CHECK(out.str() == "plain,\"with,comma\",\"with\"\"quote\"\n");
}

TEST_CASE("bound report rows") {
    const auto report = BoundReport::make("demo", "{\"s\":1}", Rational(1, 2), Rational(2));
    const auto row = bound_report_row(report);
    CHECK(row[0] == "demo");
    CHECK(row[2] == "1/2");
    CHECK(row[3] == "2/1");
    CHECK(row[4] == "1");
}

TEST_CASE("graph edge lists") {
    std::ostringstream out;
    write_graph_csv(out, WalkGraph(Walk({1, 2, 1})));
    CHECK(out.str() == "t,tail,head,marked\n1,1,2,1\n2,2,1,0\n");
}

TEST_CASE("profile and cell payloads parse back") {
    const auto w = examples::irreducible_w8();
    const auto profile_text = profile_json(w, classify_walk(w));
    CHECK(profile_text.find("\"delta\"") != std::string::npos);
    const auto cells_text = cells_json(w, cells(w));
    CHECK(cells_text.find("\"K\":1") != std::string::npos);
}
