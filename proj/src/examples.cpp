#include "evenwalks/examples.hpp"

#include <stdexcept>

namespace evenwalks {
namespace examples {

Walk tree_like_w8() { return Walk({1, 2, 3, 4, 2, 4, 3, 2, 1}); }

Walk irreducible_w8() { return Walk({1, 2, 3, 4, 2, 3, 4, 2, 1}); }

Walk two_open_one_closed_w16() {
    return Walk({1, 2, 3, 4, 2, 3, 5, 6, 3, 6, 5, 3, 4, 2, 1, 6, 1});
}

Walk imported_cell_walk(int q, bool decorated) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    // symbolic vertices: 1 = start, 2 = hub, 3+i = chain vertex i,
    // fresh ids beyond for the round-trip decorations
    const int start = 1;
    const int hub = 2;
    auto chain = [](int i) { return 3 + i; };  // i = 0 .. q
    int fresh = 4 + q;

    std::vector<int> seq{start, hub, chain(0), start, hub};
    for (int i = 0; i < q; ++i) {
        seq.push_back(chain(i + 1));
        seq.push_back(chain(i));
        seq.push_back(hub);
        if (decorated) {
            for (int j = 0; j < 3; ++j) {
                seq.push_back(fresh++);
                seq.push_back(hub);
            }
        }
    }
    for (int i = q; i >= 0; --i) seq.push_back(chain(i));
    seq.push_back(start);
    return minimal_walk_of(seq);
}

}  // namespace examples
}  // namespace evenwalks
