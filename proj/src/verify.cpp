#include "evenwalks/verify.hpp"

#include <map>
#include <sstream>

#include "evenwalks/io.hpp"

namespace evenwalks {

void CensusSummary::merge(const CensusSummary& other) {
    walks += other.walks;
    checks += other.checks;
    violations += other.violations;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

namespace {

void record(CensusSummary& summary, const ReportSink& sink, const BoundReport& report,
            const Walk* witness) {
    ++summary.checks;
    if (!report.satisfied) {
        ++summary.violations;
        if (witness != nullptr && summary.witnesses.size() < 32) {
            summary.witnesses.push_back(report.bound_id + " " + walk_json_line(*witness));
        }
    }
    if (sink) sink(report);
}

BoundReport boolean_report(const std::string& id, const Walk& walk, bool ok) {
    std::ostringstream params;
    params << "{\"walk\":" << walk_labels_json(walk) << "}";
    return BoundReport::make(id, params.str(), ok ? 0 : 1, 0);
}

}  // namespace

CensusSummary run_walk_checks(int s, const MomentSpec& weight_spec, const Rational& weight_bound,
                              const ReportSink& sink) {
    CensusSummary summary;
    summary.s = s;
    for_each_even_walk(s, [&](const Walk& walk) {
        ++summary.walks;
        const WalkGraph graph(walk);
        const auto profile = classify_walk(walk, graph);
        const auto trace = reduce_full(walk);
        const auto cell_report = cells(trace);

        record(summary, sink, boolean_report("bts_arrivals_open", walk, check_bts_arrivals_open(walk)),
               &walk);
        record(summary, sink,
               boolean_report("imported_cell_bounds", walk, check_imported_cell_bounds(walk)), &walk);
        record(summary, sink, boolean_report("open_edge_steps", walk, check_open_edge_steps(walk)),
               &walk);
        record(summary, sink, boolean_report("kappa_monotone", walk, check_kappa_monotone(walk)),
               &walk);

        // exit balance: non-marked exits from v equal marked arrivals at v
        bool balance = true;
        bool open_cap = true;
        for (int v : graph.vertices()) {
            if (non_marked_exits(graph, v) != static_cast<int>(graph.marked_arrivals(v).size())) {
                balance = false;
            }
            const int cap = 2 * kappa(graph, walk.root(), v);
            for (int t = 0; t <= walk.step_count(); ++t) {
                if (count_open_marked_edges(graph, v, t) > cap) {
                    open_cap = false;
                    break;
                }
            }
        }
        record(summary, sink, boolean_report("exit_balance", walk, balance), &walk);
        record(summary, sink, boolean_report("open_edge_cap", walk, open_cap), &walk);

        record(summary, sink,
               boolean_report("first_arrival_in_exit_cluster", walk,
                              check_first_arrival_in_exit_cluster(walk)),
               &walk);

        bool subclusters = true;
        for (int v : graph.vertices()) {
            if (!check_exit_subclusters(walk, graph, cell_report, v).satisfied) {
                subclusters = false;
                break;
            }
        }
        record(summary, sink, boolean_report("exit_subclusters", walk, subclusters), &walk);

        const bool identities = profile.sum_k_nu() == static_cast<long>(s) + 1 &&
                                graph.vertex_count() == static_cast<long>(s) + 1 - profile.nu1_norm;
        record(summary, sink, boolean_report("profile_identities", walk, identities), &walk);

        record(summary, sink,
               boolean_report("weight_bound", walk,
                              check_weight_bound(walk, weight_spec, weight_bound)),
               &walk);
    });
    return summary;
}

CensusSummary run_cell_census(int s, const ReportSink& sink) {
    CensusSummary summary;
    summary.s = s;

    struct TypeCell {
        long count = 0;
        SelfIntersectionProfile profile;
        int max_height = 0;
        int r = 0;
        int r3 = 0;
    };
    std::map<std::string, TypeCell> type_cells;       // restricted universe
    std::map<std::string, TypeCell> placement_cells;  // full universe

    for_each_even_walk(s, [&](const Walk& walk) {
        ++summary.walks;
        const WalkGraph graph(walk);
        const auto profile = classify_walk(walk, graph);
        const auto marked = marked_instants(walk);
        const int m_theta = max_height(marked.path).max_height;

        // placement signature: per-vertex ordered lists of marked-arrival
        // tau-indices (the root's origin contributes a zero)
        std::map<int, int> tau_of;
        for (std::size_t i = 0; i < marked.times.size(); ++i) {
            tau_of[marked.times[i]] = static_cast<int>(i) + 1;
        }
        std::ostringstream placement;
        for (int v : graph.vertices()) {
            const auto arrivals = graph.marked_arrivals(v);
            const bool is_root = v == walk.root();
            if (static_cast<int>(arrivals.size()) + (is_root ? 1 : 0) < 2) continue;
            placement << "(";
            if (is_root) placement << "0,";
            for (int t : arrivals) placement << tau_of.at(t) << ",";
            placement << ")";
        }

        const std::string theta = marked.path.to_string();
        {
            auto& cell = placement_cells[theta + "|" + placement.str() + "|" +
                                         std::to_string(profile.open_simple)];
            ++cell.count;
            if (cell.count == 1) {
                cell.profile = profile;
                cell.r = profile.open_simple;
            }
        }
        if (profile.loop_steps == 0 && profile.root_marked_arrivals == 0) {
            auto& cell = type_cells[theta + "|" + profile.nu_signature() + "|" +
                                    std::to_string(profile.open_simple) + "|" +
                                    std::to_string(profile.open_triple_arrivals)];
            ++cell.count;
            if (cell.count == 1) {
                cell.profile = profile;
                cell.max_height = m_theta;
                cell.r = profile.open_simple;
                cell.r3 = profile.open_triple_arrivals;
            }
        }
    });

    for (const auto& [key, cell] : placement_cells) {
        const Rational rhs = walk_count_factor(cell.profile, cell.r);
        std::ostringstream params;
        params << "{\"cell\":\"" << key << "\"}";
        record(summary, sink,
               BoundReport::make("walk_count_per_placement", params.str(), Rational(cell.count), rhs),
               nullptr);
    }
    for (const auto& [key, cell] : type_cells) {
        const auto& nu = cell.profile.nu;
        const int nu2 = nu.size() > 2 ? static_cast<int>(nu[2]) : 0;
        const int nu3 = nu.size() > 3 ? static_cast<int>(nu[3]) : 0;
        Rational rhs = bound_T2_open(s, nu2, cell.r, cell.max_height) *
                       bound_T3_open(s, nu3, cell.r3, cell.max_height) *
                       walk_count_factor(cell.profile, cell.r);
        for (std::size_t k = 4; k < nu.size(); ++k) {
            if (nu[k] > 0) rhs *= bound_Tk(s, static_cast<int>(k), static_cast<int>(nu[k]));
        }
        std::ostringstream params;
        params << "{\"cell\":\"" << key << "\"}";
        record(summary, sink,
               BoundReport::make("walk_count_per_type", params.str(), Rational(cell.count), rhs),
               nullptr);
    }
    return summary;
}

CensusSummary run_l_property_census(int s, const ReportSink& sink, bool weak_variant) {
    CensusSummary summary;
    summary.s = s;
    std::vector<long> counts(static_cast<std::size_t>(s) + 2, 0);  // counts[m], 1 <= m <= s+1
    for_each_dyck(s, [&](const DyckPath& path) {
        ++summary.walks;
        std::vector<int> open_degrees{0};
        int best = 0;
        for (int t = 1; t <= path.length(); ++t) {
            if (path.ascending(t)) {
                best = std::max(best, ++open_degrees.back());
                open_degrees.push_back(0);
            } else {
                open_degrees.pop_back();
            }
        }
        for (int m = 1; m <= best; ++m) counts[static_cast<std::size_t>(m)] += 1;
    });
    for (int m = 1; m <= s + 1; ++m) {
        std::ostringstream params;
        params << "{\"s\":" << s << ",\"m\":" << m << "}";
        record(summary, sink,
               BoundReport::make("tree_degree_census", params.str(),
                                 Rational(counts[static_cast<std::size_t>(m)]),
                                 l_property_bound(s, m, weak_variant)),
               nullptr);
    }
    return summary;
}

CensusSummary run_product_exp_grid(int s_min, int s_max, int n_max, const ReportSink& sink) {
    CensusSummary summary;
    for (int s = s_min; s <= s_max; ++s) {
        for (int n = s + 1; n <= n_max; ++n) {
            for (int sigma = 1; sigma <= s; ++sigma) {
                record(summary, sink, check_product_exp_bound(s, n, sigma), nullptr);
            }
        }
    }
    return summary;
}

CensusSummary run_z_identity_checks(int s, const MomentSpec& spec,
                                    const std::vector<Rational>& c0_values,
                                    const std::vector<Rational>& eps_values,
                                    const ReportSink& sink) {
    CensusSummary summary;
    summary.s = s;
    const Rational reference = exact_moment(s, spec);
    for (const auto& c0 : c0_values) {
        for (const auto& eps : eps_values) {
            const auto z = z_decomposition(s, spec, c0, eps);
            std::ostringstream params;
            params << "{\"s\":" << s << ",\"n\":" << spec.n << ",\"c0\":\"" << fraction_string(c0)
                   << "\",\"eps\":\"" << fraction_string(eps) << "\"}";
            BoundReport report = BoundReport::make("z_partition_identity", params.str(), z.total(),
                                                   reference);
            report.satisfied = z.total() == reference;
            record(summary, sink, report, nullptr);
        }
    }
    return summary;
}

}  // namespace evenwalks
