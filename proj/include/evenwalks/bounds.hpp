#pragma once

#include <string>
#include <vector>

#include "evenwalks/classify.hpp"
#include "evenwalks/numeric.hpp"
#include "evenwalks/reduce.hpp"
#include "evenwalks/walk.hpp"

namespace evenwalks {

struct BoundReport {
    std::string bound_id;
    std::string params;  // JSON object text
    Rational lhs = 0;
    Rational rhs = 0;
    bool satisfied = false;
    double slack = 0.0;  // lhs/rhs when rhs > 0

    static BoundReport make(std::string id, std::string params_json, Rational lhs_value,
                            Rational rhs_value);
};

/// sup over k >= 1 of 2k / ((k-1)!)^(1/k), found by scanning k up to
/// scan_limit; the tail beyond the scan is certified below the running
/// maximum via (k-1)! >= ((k-1)/e)^(k-1).
double constant_C1(int scan_limit = 10'000);

/// Placement-count bounds for self-intersection instants.
Rational bound_T2(int s, int nu2);
Rational bound_Tk(int s, int k, int nuk);
Rational bound_T2_open(int s, int nu2, int r, int max_height);
Rational bound_T3_open(int s, int nu3, int r3, int max_height);

/// <x/2> rounding used by the triple-intersection bound: l for 2l, l+1 for 2l+1.
int half_round_up(int x);

/// Runs-per-placement factor 3^r * prod_{k>=3} (2k)^(k nu_k).
Rational walk_count_factor(const SelfIntersectionProfile& profile, int r);

/// prod_{k=1}^{s-sigma} (1 - k/n) <= exp(-s^2/2n + s sigma/n); lhs exact,
/// rhs compared with an outward-rounded margin.
BoundReport check_product_exp_bound(int s, int n, int sigma);

/// For every two-fold self-intersection whose second arrival repeats the
/// first arrival's direction, the first-arrival edge lies in the exit
/// cluster of the second arrival's tail at that time.
bool check_first_arrival_in_exit_cluster(const Walk& walk);

/// Partition the exit cluster of v by the cell instants; edges grouped
/// between consecutive cells must map to tree edges sharing one parent, and
/// the number of distinct parents is at most the number of intervals.
BoundReport check_exit_subclusters(const Walk& walk, const WalkGraph& graph,
                                   const CellReport& cell_report, int v);
bool check_exit_subclusters_all(const Walk& walk);

struct TrendRow {
    int s = 0;
    int n = 0;
    double ratio = 0.0;      // sqrt(pi mu) 4^-s * estimated trace moment
    double ratio_err = 0.0;  // same scaling applied to the MC standard error
    double bound = 0.0;      // B(6 sqrt(mu)) * exp(C mu)
    bool within = false;
    bool flagged = false;  // exceeded, but the 4-sigma error bar crosses the bound
};

struct TrendReport {
    double mu = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    double c = 0.0;
    double b_value = 0.0;  // exhaustive B(6 sqrt(mu)) estimate
    int b_s = 0;
    std::vector<TrendRow> rows;
    bool all_rows_ok() const;  // every row within or flagged
};

/// Scaled-moment trend: for each s, n = round(sqrt(s^3/mu)); trace moments by
/// Monte Carlo; bound column B(6 sqrt(mu)) e^(C mu) with C = 2e C1^2 U^4 + c_margin.
TrendReport trend_report(double mu, const std::vector<int>& s_list, std::uint64_t trials,
                         std::uint64_t seed, int b_exhaustive_s = 12, double c_margin = 37.0,
                         double entry_bound = 1.0);

}  // namespace evenwalks
