#include <doctest.h>

#include <algorithm>
#include <set>

#include "evenwalks/examples.hpp"
#include "evenwalks/reduce.hpp"

using namespace evenwalks;

TEST_CASE("single removals") {
    const auto r1 = reduce_once(Walk({1, 2, 1}));
    REQUIRE(r1.has_value());
    CHECK(r1->first.empty());
    CHECK(r1->second == std::pair<int, int>{1, 2});

    auto r2 = reduce_once(Walk({1, 2, 3, 2, 1}));
    REQUIRE(r2.has_value());
    CHECK(r2->first.labels() == std::vector<int>{1, 2, 1});
    CHECK_FALSE(reduce_once(examples::irreducible_w8()).has_value());
}

TEST_CASE("full reduction") {
    CHECK(reduce_full(examples::tree_like_w8()).reduced.empty());
    CHECK(reduce_full(Walk({1, 1, 1})).reduced.empty());
    CHECK(reduce_full(examples::irreducible_w8()).reduced == examples::irreducible_w8());

    const auto trace = reduce_full(examples::two_open_one_closed_w16());
    CHECK(trace.removed_step_pairs.size() == 4);
    CHECK(trace.reduced == examples::irreducible_w8());
    CHECK(trace.surviving_times == std::vector<int>{1, 2, 3, 4, 5, 12, 13, 14});
    // surviving times strictly increase by construction
    CHECK(std::is_sorted(trace.surviving_times.begin(), trace.surviving_times.end()));
}

TEST_CASE("surviving break instants") {
    CHECK(bts_instants(examples::tree_like_w8()).count == 0);
    const auto b8 = bts_instants(examples::irreducible_w8());
    CHECK(b8.times == std::vector<int>{4});
    const auto b16 = bts_instants(examples::two_open_one_closed_w16());
    CHECK(b16.times == std::vector<int>{4});
    CHECK(b16.count == 1);
}

TEST_CASE("primary and imported cells") {
    const auto tree = cells(examples::tree_like_w8());
    for (const auto& [v, vc] : tree.at) CHECK(vc.J() == 0);

    const auto breve = cells(examples::irreducible_w8());
    CHECK(breve.at.at(2).primary == std::vector<int>{1, 4});
    CHECK(breve.at.at(2).imported == std::vector<int>{7});
    CHECK(breve.at.at(2).J() == 1);
    CHECK(breve.at.at(3).primary == std::vector<int>{2});
    CHECK(breve.at.at(3).imported == std::vector<int>{5});
    CHECK(breve.at.at(3).J() == 1);
    CHECK(breve.K == 1);
    CHECK(breve.at.at(2).local_bts == 1);  // the t=4 break happens at vertex 2

    const auto w16 = cells(examples::two_open_one_closed_w16());
    CHECK(w16.at.at(3).primary == std::vector<int>{2, 8});
    CHECK(w16.at.at(3).imported == std::vector<int>{5});
    CHECK(w16.at.at(1).imported == std::vector<int>{14});
    CHECK(w16.at.at(6).primary == std::vector<int>{7, 15});
    CHECK(w16.at.at(6).imported.empty());
    CHECK(w16.K == 1);
}

TEST_CASE("imported-cell family") {
    // undecorated q=3: marked instants and imported cells at the hub
    const auto w0 = examples::imported_cell_walk(3, false);
    CHECK(w0.step_count() == 18);
    const auto m = marked_instants(w0);
    CHECK(m.times == std::vector<int>{1, 2, 3, 5, 6, 8, 9, 11, 12});
    const auto rep = cells(w0);
    CHECK(rep.at.at(2).imported == std::vector<int>{4, 7, 10, 13});
    CHECK(rep.K == 4);
    CHECK(kappa(w0, 2) == 1);

    for (int q : {1, 2, 5, 10}) {
        const auto w = examples::imported_cell_walk(q);
        const WalkGraph g(w);
        CHECK(g.exit_degree(2) == 4 * q + 1);
        CHECK(kappa(g, w.root(), 2) == 1);
        CHECK(cells(w).at.at(2).J() == q + 1);
    }
}

TEST_CASE("break instants are open arrivals") {
    CHECK(check_bts_arrivals_open(examples::irreducible_w8()));
    CHECK(check_bts_arrivals_open(examples::tree_like_w8()));
    CHECK(check_bts_arrivals_open(examples::two_open_one_closed_w16()));
}

TEST_CASE("cell count bounds") {
    CHECK(check_imported_cell_bounds(examples::irreducible_w8()));
    CHECK(check_imported_cell_bounds(examples::two_open_one_closed_w16()));
    // J(2) = 1 <= remote breaks (0) + kappa (2) on the irreducible walk
    const auto rep = cells(examples::irreducible_w8());
    CHECK(rep.at.at(2).J() == 1);
    CHECK(rep.K - rep.at.at(2).local_bts == 0);
}

TEST_CASE("arrival step parity of the open-edge count") {
    CHECK(check_open_edge_steps(examples::irreducible_w8()));
    CHECK(check_open_edge_steps(examples::two_open_one_closed_w16()));
    CHECK(check_open_edge_steps(Walk({1, 2, 2, 3, 4, 2, 3, 4, 2, 2, 1})));  // loop at 2 survives
}

TEST_CASE("reduction never raises degrees") {
    for (const auto& w : enumerate_even_walks(4)) {
        CHECK(check_kappa_monotone(w));
    }
}

TEST_CASE("derived quantities ignore removal order") {
    for (int s = 1; s <= 4; ++s) {
        for (const auto& w : enumerate_even_walks(s)) {
            const auto canon = reduce_full(w);
            const auto canon_bts = bts_instants(canon);
            const auto canon_cells = cells(canon);
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                const auto alt = reduce_full_randomized(w, seed);
                CHECK(alt.reduced == canon.reduced);
                const auto alt_bts = bts_instants(alt);
                CHECK(alt_bts.times == canon_bts.times);
                const auto alt_cells = cells(alt);
                for (const auto& [v, vc] : canon_cells.at) {
                    CHECK(alt_cells.at.at(v).J() == vc.J());
                    CHECK(alt_cells.at.at(v).imported == vc.imported);
                }
            }
        }
    }
}
