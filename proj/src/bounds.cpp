#include "evenwalks/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evenwalks/dyck.hpp"
#include "evenwalks/moments.hpp"

namespace evenwalks {

BoundReport BoundReport::make(std::string id, std::string params_json, Rational lhs_value,
                              Rational rhs_value) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.params = std::move(params_json);
    r.lhs = std::move(lhs_value);
    r.rhs = std::move(rhs_value);
    r.satisfied = r.lhs <= r.rhs;
    r.slack = r.rhs > 0 ? to_double(r.lhs / r.rhs) : (r.lhs == 0 ? 0.0 : HUGE_VAL);
    return r;
}

double constant_C1(int scan_limit) {
    double best = 0.0;
    double lgamma_k = 0.0;  // log((k-1)!)
    for (int k = 1; k <= scan_limit; ++k) {
        if (k >= 2) lgamma_k += std::log(static_cast<double>(k - 1));
        const double term = 2.0 * k / std::exp(lgamma_k / k);
        best = std::max(best, term);
    }
    // Tail: (k-1)! >= ((k-1)/e)^(k-1) gives term <= 2ek/(k-1) * ((k-1)/e)^(1/k),
    // decreasing toward 2e for large k; confirm it sits below the scanned max.
    const double k = scan_limit + 1;
    const double tail = 2.0 * M_E * k / (k - 1) * std::exp(std::log((k - 1) / M_E) / k);
    if (tail >= best) throw std::logic_error("scan limit too small to certify the supremum");
    return best;
}

Rational bound_T2(int s, int nu2) {
    if (nu2 < 0) throw std::invalid_argument("nu2 must be nonnegative");
    return pow_rational(Rational(BigInt(s) * s, 2), static_cast<unsigned>(nu2)) /
           Rational(factorial(static_cast<unsigned>(nu2)));
}

Rational bound_Tk(int s, int k, int nuk) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (nuk < 0) throw std::invalid_argument("nuk must be nonnegative");
    const Rational base(boost::multiprecision::pow(BigInt(s), static_cast<unsigned>(k)),
                        factorial(static_cast<unsigned>(k - 1)));
    return pow_rational(base, static_cast<unsigned>(nuk)) /
           Rational(factorial(static_cast<unsigned>(nuk)));
}

Rational bound_T2_open(int s, int nu2, int r, int max_height) {
    if (r < 0 || r > nu2) throw std::invalid_argument("need 0 <= r <= nu2");
    const Rational open_term = pow_rational(Rational(2 * BigInt(s) * max_height),
                                            static_cast<unsigned>(r));
    const Rational closed_term = pow_rational(Rational(BigInt(s) * s, 2),
                                              static_cast<unsigned>(nu2 - r));
    return open_term * closed_term /
           Rational(factorial(static_cast<unsigned>(nu2 - r)) * factorial(static_cast<unsigned>(r)));
}

int half_round_up(int x) { return x % 2 == 0 ? x / 2 : x / 2 + 1; }

Rational bound_T3_open(int s, int nu3, int r3, int max_height) {
    if (r3 < 0 || r3 > 2 * nu3) throw std::invalid_argument("need 0 <= r3 <= 2*nu3");
    const int open_vertices = half_round_up(r3);
    const Rational open_term = pow_rational(Rational(4 * BigInt(s) * s * max_height),
                                            static_cast<unsigned>(open_vertices));
    const Rational closed_term = pow_rational(
        Rational(boost::multiprecision::pow(BigInt(s), 3), 2),
        static_cast<unsigned>(nu3 - open_vertices));
    return Rational(binomial(static_cast<unsigned>(2 * nu3), static_cast<unsigned>(r3))) *
           open_term * closed_term / Rational(factorial(static_cast<unsigned>(nu3)));
}

Rational walk_count_factor(const SelfIntersectionProfile& profile, int r) {
    BigInt w = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(r));
    for (std::size_t k = 3; k < profile.nu.size(); ++k) {
        if (profile.nu[k] == 0) continue;
        const BigInt per_vertex = boost::multiprecision::pow(BigInt(2 * k), static_cast<unsigned>(k));
        w *= boost::multiprecision::pow(per_vertex, static_cast<unsigned>(profile.nu[k]));
    }
    return Rational(w);
}

BoundReport check_product_exp_bound(int s, int n, int sigma) {
    if (s >= n) throw std::invalid_argument("need s < n");
    if (sigma < 0) throw std::invalid_argument("sigma must be nonnegative");
    Rational lhs = 1;
    for (int k = 1; k <= s - sigma; ++k) lhs *= Rational(n - k, n);
    const double exponent = (static_cast<double>(s) * sigma - 0.5 * s * s) / n;
    // outward rounding: inflate lhs, deflate the transcendental rhs, then
    // compare exactly (double -> rational conversion is exact)
    const Rational lhs_up = lhs * Rational(1'000'000'000'001, 1'000'000'000'000);
    const Rational rhs_down(std::exp(exponent) * (1.0 - 1e-12));
    std::ostringstream params;
    params << "{\"s\":" << s << ",\"n\":" << n << ",\"sigma\":" << sigma << "}";
    BoundReport report = BoundReport::make("product_exp_bound", params.str(), lhs_up, rhs_down);
    return report;
}

bool check_first_arrival_in_exit_cluster(const Walk& walk) {
    const WalkGraph graph(walk);
    for (int v : graph.vertices()) {
        if (v == walk.root()) continue;
        if (kappa(graph, walk.root(), v) != 2) continue;
        if (classify_simple(walk, v) != SimpleKind::same_direction) continue;
        const auto arrivals = graph.marked_arrivals(v);
        const int t1 = arrivals[0];
        const int t2 = arrivals[1];
        const int tail = graph.edge(t2).tail;
        const auto cluster = graph.exit_cluster(tail);
        const bool found = std::find_if(cluster.begin(), cluster.end(), [&](int t) {
                               return t < t2 && t == t1;
                           }) != cluster.end();
        if (!found) return false;
    }
    return true;
}

BoundReport check_exit_subclusters(const Walk& walk, const WalkGraph& graph,
                                   const CellReport& cell_report, int v) {
    const auto marked = marked_instants(walk);
    // contour position after each step: ascending steps create children in
    // the same order as tree_of
    const int steps = walk.step_count();
    std::vector<int> position(static_cast<std::size_t>(steps) + 1, 0);
    std::vector<int> parent_of{-1};
    int current = 0;
    int next_vertex = 1;
    for (int t = 1; t <= steps; ++t) {
        if (marked.path.ascending(t)) {
            parent_of.push_back(current);
            current = next_vertex++;
        } else {
            current = parent_of[static_cast<std::size_t>(current)];
        }
        position[static_cast<std::size_t>(t)] = current;
    }

    std::vector<int> cell_times;
    if (v == walk.root()) cell_times.push_back(0);  // the origin acts as a cell
    const auto& vc = cell_report.at.at(v);
    cell_times.insert(cell_times.end(), vc.primary.begin(), vc.primary.end());
    cell_times.insert(cell_times.end(), vc.imported.begin(), vc.imported.end());
    std::sort(cell_times.begin(), cell_times.end());

    // Exits created between consecutive cells hang from one tree vertex
    // unless the walk returns to a position it already held; so a position
    // never seen before must be the one established by the latest cell.
    bool new_positions_from_cells = true;
    std::set<int> seen_positions;
    for (int t : graph.exit_cluster(v)) {
        const int exit_parent = position[static_cast<std::size_t>(t - 1)];
        if (seen_positions.insert(exit_parent).second) {
            const auto it = std::lower_bound(cell_times.begin(), cell_times.end(), t);
            if (it == cell_times.begin()) {
                new_positions_from_cells = false;  // exit before any cell
                continue;
            }
            const int latest_cell = *(it - 1);
            if (exit_parent != position[static_cast<std::size_t>(latest_cell)]) {
                new_positions_from_cells = false;
            }
        }
    }

    std::ostringstream params;
    params << "{\"vertex\":" << v << "}";
    BoundReport report = BoundReport::make("exit_subclusters", params.str(),
                                           Rational(static_cast<long>(seen_positions.size())),
                                           Rational(static_cast<long>(cell_times.size())));
    report.satisfied = report.satisfied && new_positions_from_cells;
    return report;
}

bool check_exit_subclusters_all(const Walk& walk) {
    const WalkGraph graph(walk);
    const CellReport report = cells(walk);
    for (int v : graph.vertices()) {
        if (!check_exit_subclusters(walk, graph, report, v).satisfied) return false;
    }
    return true;
}

bool TrendReport::all_rows_ok() const {
    for (const auto& row : rows) {
        if (!row.within && !row.flagged) return false;
    }
    return true;
}

TrendReport trend_report(double mu, const std::vector<int>& s_list, std::uint64_t trials,
                         std::uint64_t seed, int b_exhaustive_s, double c_margin,
                         double entry_bound) {
    if (mu <= 0) throw std::invalid_argument("mu must be positive");
    TrendReport report;
    report.mu = mu;
    report.c1 = constant_C1();
    report.c0 = 2.0 * M_E * report.c1 * report.c1 * std::pow(entry_bound, 4.0);
    report.c = report.c0 + c_margin;
    report.b_s = b_exhaustive_s;
    const double lambda = 6.0 * std::sqrt(mu);
    report.b_value = estimate_B(b_exhaustive_s, lambda).value;
    const double bound = report.b_value * std::exp(report.c * mu);

    std::uint64_t row_seed = seed;
    for (int s : s_list) {
        TrendRow row;
        row.s = s;
        row.n = static_cast<int>(std::llround(std::sqrt(std::pow(s, 3) / mu)));
        const McResult mc = mc_moment(s, row.n, EntryLaw::rademacher, trials, row_seed++);
        const double scale = std::sqrt(M_PI * mu) / std::pow(4.0, s);
        row.ratio = scale * mc.estimate;
        row.ratio_err = scale * mc.std_error;
        row.bound = bound;
        row.within = row.ratio <= row.bound;
        row.flagged = !row.within && (row.ratio - 4.0 * row.ratio_err) <= row.bound;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace evenwalks
