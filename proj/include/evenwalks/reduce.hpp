#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "evenwalks/classify.hpp"
#include "evenwalks/walk.hpp"

namespace evenwalks {

/// One backtrack removal: the earliest marked step (t-1,t) whose next label
/// repeats w(t-1); the two steps t, t+1 are dropped. Absent such a step,
/// returns nullopt. Removed times refer to the walk passed in.
std::optional<std::pair<Walk, std::pair<int, int>>> reduce_once(const Walk& walk);

struct ReductionTrace {
    Walk original;
    Walk reduced;  // fixed point; a single-label walk when fully tree-like
    std::vector<std::pair<int, int>> removed_step_pairs;  // original times, removal order
    std::vector<int> surviving_times;  // surviving_times[j-1] = original time of reduced step j
};

/// Iterate reduce_once to a fixed point, always removing the earliest
/// qualifying pair. Labels are kept as-is so surviving structure maps back to
/// original vertices.
ReductionTrace reduce_full(const Walk& walk);

struct BtsInstants {
    std::vector<int> times;  // original times of marked steps followed by non-marked ones
    int count = 0;           // K
};

/// Instants where the reduced walk takes a marked step immediately followed
/// by a non-marked one, mapped back to original time.
BtsInstants bts_instants(const Walk& walk);
BtsInstants bts_instants(const ReductionTrace& trace);

struct VertexCells {
    std::vector<int> primary;   // marked arrival times in the original walk
    std::vector<int> imported;  // original times of surviving non-marked arrivals
    int local_bts = 0;
    int J() const { return static_cast<int>(imported.size()); }
    int L() const { return static_cast<int>(primary.size() + imported.size()); }
};

struct CellReport {
    std::map<int, VertexCells> at;  // every vertex of the original walk
    std::vector<int> bts_times;
    int K = 0;
};

CellReport cells(const Walk& walk);
CellReport cells(const ReductionTrace& trace);

/// Every surviving marked-then-non-marked instant is an open arrival of the
/// original walk.
bool check_bts_arrivals_open(const Walk& walk);

/// Per vertex: imported cells <= remote bts count + kappa, and total cells
/// <= 2 kappa + K.
bool check_imported_cell_bounds(const Walk& walk);

/// Endpoint-weighted count of odd edges at each reduced-walk vertex changes
/// by 0 or +-2 between consecutive arrivals and ends at zero. Loop edges
/// count twice (both endpoints).
bool check_open_edge_steps(const Walk& walk);

/// kappa never grows under reduction (surviving vertices only).
bool check_kappa_monotone(const Walk& walk);

/// Randomized removal order; used to probe order-independence of the derived
/// quantities (K, J, bts time set).
ReductionTrace reduce_full_randomized(const Walk& walk, std::uint64_t seed);

}  // namespace evenwalks
