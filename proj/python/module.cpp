// Python bindings for the core operations. Exact rationals cross the
// boundary as "num/den" strings; big integers as python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evenwalks/bounds.hpp"
#include "evenwalks/examples.hpp"
#include "evenwalks/moments.hpp"
#include "evenwalks/verify.hpp"

namespace py = pybind11;
using namespace evenwalks;

namespace {

py::int_ big_to_py(const BigInt& value) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(py::str(value.str())));
}

std::string frac(const Rational& q) { return fraction_string(q); }

MomentSpec spec_for(const std::string& law, int n) {
    switch (parse_law(law)) {
        case EntryLaw::rademacher: return MomentSpec::rademacher_spec(n);
        case EntryLaw::gaussian: return MomentSpec::gaussian_spec(n);
        case EntryLaw::uniform_symmetric: return MomentSpec::uniform_spec(n);
    }
    return MomentSpec::rademacher_spec(n);
}

std::string openness_text(Openness o) {
    switch (o) {
        case Openness::closed: return "closed";
        case Openness::open_head: return "E";
        case Openness::open_tail: return "S";
        case Openness::open_both: return "both";
    }
    return "?";
}

py::dict profile_dict(const Walk& walk) {
    const auto p = classify_walk(walk);
    py::dict out;
    py::dict kappa_map;
    for (const auto& [v, k] : p.kappa) kappa_map[py::int_(v)] = k;
    out["kappa"] = kappa_map;
    py::list nu;
    for (std::size_t k = 1; k < p.nu.size(); ++k) nu.append(p.nu[k]);
    out["nu"] = nu;
    out["nu1_norm"] = p.nu1_norm;
    out["nu2_norm"] = p.nu2_norm;
    out["delta"] = p.max_exit_degree;
    out["max_edge_multiplicity"] = p.max_edge_multiplicity;
    out["open_simple"] = p.open_simple;
    py::list arrivals;
    for (const auto& a : p.open_arrivals) {
        arrivals.append(py::make_tuple(a.time, a.vertex, openness_text(a.type)));
    }
    out["open_arrivals"] = arrivals;
    py::dict degrees;
    for (const auto& [v, d] : p.exit_degree) degrees[py::int_(v)] = d;
    out["exit_degree"] = degrees;
    return out;
}

py::dict cells_dict(const Walk& walk) {
    const auto report = cells(walk);
    py::dict out;
    out["K"] = report.K;
    out["bts_times"] = report.bts_times;
    py::dict per_vertex;
    for (const auto& [v, vc] : report.at) {
        py::dict entry;
        entry["primary"] = vc.primary;
        entry["imported"] = vc.imported;
        entry["J"] = vc.J();
        entry["L"] = vc.L();
        entry["local_bts"] = vc.local_bts;
        per_vertex[py::int_(v)] = entry;
    }
    out["cells"] = per_vertex;
    return out;
}

}  // namespace

PYBIND11_MODULE(evenwalks, m) {
    m.doc() = "Even closed walks of symmetric random matrices: enumeration, "
              "classification, reduction, exact trace moments, and bound checks";

    // lattice paths
    m.def("catalan", [](unsigned s) { return big_to_py(catalan(s)); }, py::arg("s"));
    m.def("enumerate_dyck", [](int s) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_dyck(s)) out.push_back(p.to_string());
        return out;
    }, py::arg("s"));
    m.def("max_height", [](const std::string& bits) {
        const auto stat = max_height(DyckPath::from_string(bits));
        return py::make_tuple(stat.max_height, stat.argmax);
    }, py::arg("path"));
    m.def("has_branching", [](const std::string& bits, int mdeg) {
        return has_L_property(DyckPath::from_string(bits), mdeg);
    }, py::arg("path"), py::arg("m"));
    m.def("count_branching", [](int s, int mdeg) { return big_to_py(count_L_property(s, mdeg)); },
          py::arg("s"), py::arg("m"));
    m.def("branching_bound", [](int s, int mdeg) { return frac(l_property_bound(s, mdeg)); },
          py::arg("s"), py::arg("m"));
    m.def("tree_parents", [](const std::string& bits) {
        return tree_of(DyckPath::from_string(bits)).parent;
    }, py::arg("path"));
    m.def("sample_dyck_uniform", [](int s, std::uint64_t seed) {
        return sample_dyck_uniform(s, seed).to_string();
    }, py::arg("s"), py::arg("seed"));
    m.def("estimate_height_mean", [](int s, double lam, bool exhaustive, std::uint64_t trials,
                                     std::uint64_t seed) {
        const auto b = estimate_B(s, lam, exhaustive ? BMode::exhaustive : BMode::sampled,
                                  trials, seed);
        return py::make_tuple(b.value, b.std_error);
    }, py::arg("s"), py::arg("lam"), py::arg("exhaustive") = true, py::arg("trials") = 100000,
       py::arg("seed") = 1);

    // walks
    m.def("minimal_walk_of", [](const std::vector<int>& path) {
        return minimal_walk_of(path).labels();
    }, py::arg("index_path"));
    m.def("is_even", [](const std::vector<int>& labels) { return is_even(Walk(labels)); });
    m.def("is_double_even",
          [](const std::vector<int>& labels) { return is_double_even(Walk(labels)); });
    m.def("is_minimal", [](const std::vector<int>& labels) { return is_minimal(Walk(labels)); });
    m.def("enumerate_even_walks", [](int s) {
        std::vector<std::vector<int>> out;
        for (const auto& w : enumerate_even_walks(s)) out.push_back(w.labels());
        return out;
    }, py::arg("s"));
    m.def("count_even_walks", [](int s) { return count_even_walks(s); }, py::arg("s"));
    m.def("marked_instants", [](const std::vector<int>& labels) {
        const auto mi = marked_instants(Walk(labels));
        return py::make_tuple(mi.times, mi.path.to_string());
    }, py::arg("labels"));
    m.def("multiplicity", [](const std::vector<int>& labels, int a, int b, int t) {
        return multiplicity(Walk(labels), a, b, t);
    }, py::arg("labels"), py::arg("a"), py::arg("b"), py::arg("t"));

    // classification
    m.def("kappa", [](const std::vector<int>& labels, int v) { return kappa(Walk(labels), v); },
          py::arg("labels"), py::arg("vertex"));
    m.def("classify_walk", [](const std::vector<int>& labels) { return profile_dict(Walk(labels)); },
          py::arg("labels"));
    m.def("classify_simple", [](const std::vector<int>& labels, int v) {
        switch (classify_simple(Walk(labels), v)) {
            case SimpleKind::same_direction: return "same_direction";
            case SimpleKind::reversed_closure: return "reversed_closure";
            case SimpleKind::other: return "other";
        }
        return "?";
    }, py::arg("labels"), py::arg("vertex"));
    m.def("is_open_arrival", [](const std::vector<int>& labels, int t, bool first_edge_rule) {
        return is_open_arrival(Walk(labels), t,
                               first_edge_rule ? OpennessRule::first_edge : OpennessRule::parity);
    }, py::arg("labels"), py::arg("t"), py::arg("first_edge_rule") = false);
    m.def("count_open_marked_edges", [](const std::vector<int>& labels, int v, int t) {
        return count_open_marked_edges(Walk(labels), v, t);
    }, py::arg("labels"), py::arg("vertex"), py::arg("t"));

    // reduction
    m.def("reduce_full", [](const std::vector<int>& labels) {
        const auto trace = reduce_full(Walk(labels));
        py::dict out;
        out["reduced"] = trace.reduced.labels();
        out["removed_step_pairs"] = trace.removed_step_pairs;
        out["surviving_times"] = trace.surviving_times;
        return out;
    }, py::arg("labels"));
    m.def("bts_instants", [](const std::vector<int>& labels) {
        const auto b = bts_instants(Walk(labels));
        return py::make_tuple(b.times, b.count);
    }, py::arg("labels"));
    m.def("cells", [](const std::vector<int>& labels) { return cells_dict(Walk(labels)); },
          py::arg("labels"));
    m.def("check_bts_arrivals_open",
          [](const std::vector<int>& labels) { return check_bts_arrivals_open(Walk(labels)); });
    m.def("check_imported_cell_bounds",
          [](const std::vector<int>& labels) { return check_imported_cell_bounds(Walk(labels)); });

    // moments
    m.def("weight", [](const std::vector<int>& labels, const std::string& law) {
        return frac(weight(Walk(labels), spec_for(law, 1)));
    }, py::arg("labels"), py::arg("law") = "gaussian");
    m.def("class_cardinality", [](const std::vector<int>& labels, int n) {
        return big_to_py(class_cardinality(Walk(labels), n));
    }, py::arg("labels"), py::arg("n"));
    m.def("exact_moment", [](int s, int n, const std::string& law) {
        return frac(exact_moment(s, spec_for(law, n)));
    }, py::arg("s"), py::arg("n"), py::arg("law") = "rademacher");
    m.def("brute_force_moment", [](int s, int n, const std::string& law) {
        return frac(brute_force_moment(s, spec_for(law, n)));
    }, py::arg("s"), py::arg("n"), py::arg("law") = "rademacher");
    m.def("moment_polynomial", [](int s, const std::string& law) {
        std::vector<std::string> out;
        for (const auto& c : moment_polynomial(s, spec_for(law, 1)).coeff) out.push_back(frac(c));
        return out;
    }, py::arg("s"), py::arg("law") = "rademacher");
    m.def("z_decomposition", [](int s, int n, const std::string& law, const std::string& c0,
                                const std::string& eps) {
        const auto z = z_decomposition(s, spec_for(law, n), parse_fraction(c0), parse_fraction(eps));
        py::dict out;
        out["z1"] = frac(z.z1);
        out["z2"] = frac(z.z2);
        out["z3"] = frac(z.z3);
        out["z4"] = frac(z.z4);
        out["total"] = frac(z.total());
        return out;
    }, py::arg("s"), py::arg("n"), py::arg("law") = "rademacher", py::arg("c0") = "1",
       py::arg("eps") = "1/8");
    m.def("mc_moment", [](int s, int n, const std::string& law, std::uint64_t trials,
                          std::uint64_t seed, double trunc) {
        const auto r = mc_moment(s, n, parse_law(law), trials, seed, trunc);
        return py::make_tuple(r.estimate, r.std_error);
    }, py::arg("s"), py::arg("n"), py::arg("law") = "rademacher", py::arg("trials") = 1000,
       py::arg("seed") = 1, py::arg("trunc") = 0.0);
    m.def("truncated_uniform_moments", [](const std::string& half_width_sq, const std::string& U,
                                          int orders) {
        const auto spec = truncate_spec(
            MomentSpec::uniform_spec(1, parse_fraction(half_width_sq), orders), parse_fraction(U));
        std::vector<std::string> out;
        for (const auto& v : spec.even_moments) out.push_back(frac(v));
        return out;
    }, py::arg("half_width_sq") = "3", py::arg("U") = "2", py::arg("orders") = 8);

    // bounds and censuses
    m.def("constant_C1", [](int limit) { return constant_C1(limit); }, py::arg("scan_limit") = 10000);
    m.def("check_product_exp_bound", [](int s, int n, int sigma) {
        return check_product_exp_bound(s, n, sigma).satisfied;
    }, py::arg("s"), py::arg("n"), py::arg("sigma"));
    m.def("run_walk_checks", [](int s) {
        const auto summary = run_walk_checks(
            s, truncate_spec(MomentSpec::uniform_spec(1), Rational(2)), Rational(2));
        return py::make_tuple(summary.walks, summary.checks, summary.violations);
    }, py::arg("s"));
    m.def("run_cell_census", [](int s) {
        const auto summary = run_cell_census(s);
        return py::make_tuple(summary.walks, summary.checks, summary.violations);
    }, py::arg("s"));
    m.def("trend_report", [](double mu, const std::vector<int>& s_list, std::uint64_t trials,
                             std::uint64_t seed) {
        const auto report = trend_report(mu, s_list, trials, seed);
        py::list rows;
        for (const auto& row : report.rows) {
            py::dict r;
            r["s"] = row.s;
            r["n"] = row.n;
            r["ratio"] = row.ratio;
            r["ratio_err"] = row.ratio_err;
            r["bound"] = row.bound;
            r["within"] = row.within;
            rows.append(r);
        }
        return rows;
    }, py::arg("mu"), py::arg("s_list"), py::arg("trials") = 500, py::arg("seed") = 1);

    // named example walks
    m.def("example_walk", [](const std::string& name, int q) {
        if (name == "tree_like_w8") return examples::tree_like_w8().labels();
        if (name == "irreducible_w8") return examples::irreducible_w8().labels();
        if (name == "two_open_one_closed_w16") return examples::two_open_one_closed_w16().labels();
        if (name == "imported_cell_walk") return examples::imported_cell_walk(q).labels();
        if (name == "imported_cell_walk_plain")
            return examples::imported_cell_walk(q, false).labels();
        throw std::invalid_argument("unknown example: " + name);
    }, py::arg("name"), py::arg("q") = 3);
}
