#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evenwalks/bounds.hpp"
#include "evenwalks/moments.hpp"
#include "evenwalks/walk.hpp"

namespace evenwalks {

using ReportSink = std::function<void(const BoundReport&)>;

struct CensusSummary {
    int s = 0;
    std::uint64_t walks = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> witnesses;  // offending walks as JSON lines

    bool all_passed() const { return violations == 0; }
    void merge(const CensusSummary& other);
};

/// Structural checks over every minimal even closed walk of 2s steps:
/// openness of surviving marked-then-unmarked instants, imported-cell and
/// total-cell bounds, exit balance, open-edge caps, arrival-step parity,
/// repeated-direction arrivals vs exit clusters, exit sub-clusters,
/// profile identities, and the per-walk weight bound for weight_spec.
CensusSummary run_walk_checks(int s, const MomentSpec& weight_spec, const Rational& weight_bound,
                              const ReportSink& sink = nullptr);

/// Walk-count bounds: per-placement counts vs the runs factor over the full
/// census, and placement-count x runs bounds over walks whose
/// self-intersections avoid the root and loops.
CensusSummary run_cell_census(int s, const ReportSink& sink = nullptr);

/// Tree exit-degree census against 2 s C(s) (3/4)^m for m = 1 .. s+1
/// (or the weaker s^2 C(s) (3/4)^m variant).
CensusSummary run_l_property_census(int s, const ReportSink& sink = nullptr,
                                    bool weak_variant = false);

/// Falling-factorial exponential bound over a (s, n, sigma) grid.
CensusSummary run_product_exp_grid(int s_min, int s_max, int n_max,
                                   const ReportSink& sink = nullptr);

/// Partition identity: the four-way split reproduces the exact moment.
CensusSummary run_z_identity_checks(int s, const MomentSpec& spec,
                                    const std::vector<Rational>& c0_values,
                                    const std::vector<Rational>& eps_values,
                                    const ReportSink& sink = nullptr);

}  // namespace evenwalks
