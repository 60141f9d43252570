#include "evenwalks/reduce.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace evenwalks {

namespace {

std::vector<bool> marked_flags(const Walk& walk) {
    std::vector<bool> flags(static_cast<std::size_t>(walk.step_count()) + 1, false);
    for (int t : marked_instants(walk).times) flags[static_cast<std::size_t>(t)] = true;
    return flags;
}

/// Positions j (1-based step index) where step j is marked and
/// labels[j-1] == labels[j+1].
std::vector<int> removable_positions(const std::vector<int>& labels,
                                     const std::vector<bool>& flags) {
    std::vector<int> out;
    const int steps = static_cast<int>(labels.size()) - 1;
    for (int j = 1; j < steps; ++j) {
        if (flags[static_cast<std::size_t>(j)] &&
            labels[static_cast<std::size_t>(j - 1)] == labels[static_cast<std::size_t>(j + 1)]) {
            out.push_back(j);
        }
    }
    return out;
}

ReductionTrace reduce_with_choice(const Walk& walk,
                                  const std::function<std::size_t(std::size_t)>& pick) {
    ReductionTrace trace;
    trace.original = walk;
    std::vector<int> labels = walk.labels();
    std::vector<int> times(static_cast<std::size_t>(walk.step_count()));
    for (int t = 1; t <= walk.step_count(); ++t) times[static_cast<std::size_t>(t - 1)] = t;

    // Marked flags of surviving steps are invariant under pair removal: a
    // removed pair changes its own edge's multiplicity by two and no other.
    const std::vector<bool> original_flags = marked_flags(walk);
    auto flag_at = [&](int j) { return original_flags[static_cast<std::size_t>(times[static_cast<std::size_t>(j - 1)])]; };

    while (true) {
        std::vector<int> candidates;
        const int steps = static_cast<int>(labels.size()) - 1;
        for (int j = 1; j < steps; ++j) {
            if (flag_at(j) &&
                labels[static_cast<std::size_t>(j - 1)] == labels[static_cast<std::size_t>(j + 1)]) {
                candidates.push_back(j);
            }
        }
        if (candidates.empty()) break;
        const int j = candidates[pick(candidates.size())];
        trace.removed_step_pairs.emplace_back(times[static_cast<std::size_t>(j - 1)],
                                              times[static_cast<std::size_t>(j)]);
        labels.erase(labels.begin() + j, labels.begin() + j + 2);
        times.erase(times.begin() + (j - 1), times.begin() + (j + 1));
    }
    trace.reduced = Walk(labels);
    trace.surviving_times = std::move(times);
    return trace;
}

}  // namespace

std::optional<std::pair<Walk, std::pair<int, int>>> reduce_once(const Walk& walk) {
    const auto flags = marked_flags(walk);
    const auto candidates = removable_positions(walk.labels(), flags);
    if (candidates.empty()) return std::nullopt;
    const int j = candidates.front();
    std::vector<int> labels = walk.labels();
    labels.erase(labels.begin() + j, labels.begin() + j + 2);
    return std::make_pair(Walk(std::move(labels)), std::make_pair(j, j + 1));
}

ReductionTrace reduce_full(const Walk& walk) {
    return reduce_with_choice(walk, [](std::size_t) { return 0; });
}

ReductionTrace reduce_full_randomized(const Walk& walk, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    return reduce_with_choice(walk, [&gen](std::size_t n) {
        return static_cast<std::size_t>(gen() % n);
    });
}

BtsInstants bts_instants(const ReductionTrace& trace) {
    BtsInstants out;
    const Walk& reduced = trace.reduced;
    if (reduced.empty()) return out;
    const auto flags = marked_flags(reduced);
    for (int j = 1; j < reduced.step_count(); ++j) {
        if (flags[static_cast<std::size_t>(j)] && !flags[static_cast<std::size_t>(j + 1)]) {
            out.times.push_back(trace.surviving_times[static_cast<std::size_t>(j - 1)]);
        }
    }
    out.count = static_cast<int>(out.times.size());
    return out;
}

BtsInstants bts_instants(const Walk& walk) { return bts_instants(reduce_full(walk)); }

CellReport cells(const ReductionTrace& trace) {
    CellReport report;
    const Walk& walk = trace.original;
    const WalkGraph graph(walk);
    for (int v : graph.vertices()) report.at[v] = VertexCells{};
    for (const auto& e : graph.edges()) {
        if (e.marked) report.at[e.head].primary.push_back(e.time);
    }

    const Walk& reduced = trace.reduced;
    if (!reduced.empty()) {
        const auto flags = marked_flags(reduced);
        for (int j = 1; j <= reduced.step_count(); ++j) {
            if (!flags[static_cast<std::size_t>(j)]) {
                const int vertex = reduced.label(j);
                report.at[vertex].imported.push_back(
                    trace.surviving_times[static_cast<std::size_t>(j - 1)]);
            }
        }
    }

    const BtsInstants bts = bts_instants(trace);
    report.bts_times = bts.times;
    report.K = bts.count;
    for (int t : bts.times) {
        report.at[walk.label(t)].local_bts += 1;
    }
    return report;
}

CellReport cells(const Walk& walk) { return cells(reduce_full(walk)); }

bool check_bts_arrivals_open(const Walk& walk) {
    const WalkGraph graph(walk);
    for (int t : bts_instants(walk).times) {
        if (arrival_openness(graph, t) == Openness::closed) return false;
    }
    return true;
}

bool check_imported_cell_bounds(const Walk& walk) {
    const auto trace = reduce_full(walk);
    const auto report = cells(trace);
    const WalkGraph graph(walk);
    for (const auto& [v, vc] : report.at) {
        const int k = kappa(graph, walk.root(), v);
        const int remote = report.K - vc.local_bts;
        if (vc.J() > remote + k) return false;
        if (vc.L() > 2 * k + report.K) return false;
    }
    return true;
}

bool check_open_edge_steps(const Walk& walk) {
    const auto trace = reduce_full(walk);
    const Walk& reduced = trace.reduced;
    if (reduced.empty()) return true;
    const WalkGraph graph(reduced);
    for (int v : graph.vertices()) {
        std::vector<int> lambda_after;  // endpoint-weighted odd-edge count
        if (v == reduced.root()) lambda_after.push_back(0);
        for (const auto& e : graph.edges()) {
            if (e.head != v) continue;
            int lambda = 0;
            for (const auto& [a, b] : graph.open_edges_at(v, e.time)) {
                lambda += (a == b) ? 2 : 1;
            }
            lambda_after.push_back(lambda);
        }
        for (std::size_t i = 1; i < lambda_after.size(); ++i) {
            const int delta = lambda_after[i] - lambda_after[i - 1];
            if (delta != 0 && delta != 2 && delta != -2) return false;
        }
        int final_lambda = 0;
        for (const auto& [a, b] : graph.open_edges_at(v, graph.step_count())) {
            final_lambda += (a == b) ? 2 : 1;
        }
        if (final_lambda != 0) return false;
    }
    return true;
}

bool check_kappa_monotone(const Walk& walk) {
    const auto trace = reduce_full(walk);
    if (trace.reduced.empty()) return true;
    const WalkGraph original(walk);
    const WalkGraph reduced(trace.reduced);
    for (int v : reduced.vertices()) {
        if (kappa(reduced, trace.reduced.root(), v) > kappa(original, walk.root(), v)) return false;
    }
    return true;
}

}  // namespace evenwalks
