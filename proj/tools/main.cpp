// Batch front end: enumerate walks, classify them, reduce them, verify the
// census bounds, tabulate trace moments, and emit trend reports. Exact
// values are serialized as "num/den"; outputs are deterministic for a fixed
// configuration and seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "evenwalks/bounds.hpp"
#include "evenwalks/examples.hpp"
#include "evenwalks/io.hpp"
#include "evenwalks/moments.hpp"
#include "evenwalks/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace evenwalks;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    int s = 3;
    int n = 4;
    int max_s = 5;
    int grid_s = 50;
    int grid_n = 200;
    std::string law = "rademacher";
    std::string walks_file;
    std::string out_dir = "out";
    std::string format = "csv";
    std::string c0 = "1";
    std::string eps = "1/8";
    std::string trunc = "2";
    double mu = 1.0;
    double c_margin = 37.0;
    double lambda = 6.0;
    int b_exhaustive_s = 12;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::uint64_t max_catalan = 5'000'000;
    std::uint64_t max_walks = 20'000'000;
    std::uint64_t max_sequences = 10'000'000;
    unsigned threads = 0;  // 0 = EVENWALKS_THREADS or hardware
    bool zero_diagonal = false;
    bool openness_first_edge = false;
    bool export_graphs = false;
    bool weak_degree_bound = false;

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read config file: " + path);
        json j = json::parse(in);
        if (j.contains("s")) s = j["s"].get<int>();
        if (j.contains("n")) n = j["n"].get<int>();
        if (j.contains("max_s")) max_s = j["max_s"].get<int>();
        if (j.contains("grid_s")) grid_s = j["grid_s"].get<int>();
        if (j.contains("grid_n")) grid_n = j["grid_n"].get<int>();
        if (j.contains("law")) law = j["law"].get<std::string>();
        if (j.contains("out")) out_dir = j["out"].get<std::string>();
        if (j.contains("format")) format = j["format"].get<std::string>();
        if (j.contains("c0")) c0 = j["c0"].get<std::string>();
        if (j.contains("eps")) eps = j["eps"].get<std::string>();
        if (j.contains("trunc")) trunc = j["trunc"].get<std::string>();
        if (j.contains("mu")) mu = j["mu"].get<double>();
        if (j.contains("c_margin")) c_margin = j["c_margin"].get<double>();
        if (j.contains("lambda")) lambda = j["lambda"].get<double>();
        if (j.contains("b_exhaustive_s")) b_exhaustive_s = j["b_exhaustive_s"].get<int>();
        if (j.contains("trials")) trials = j["trials"].get<std::uint64_t>();
        if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
        if (j.contains("zero_diagonal")) zero_diagonal = j["zero_diagonal"].get<bool>();
        if (j.contains("budgets")) {
            const auto& b = j["budgets"];
            if (b.contains("max_catalan")) max_catalan = b["max_catalan"].get<std::uint64_t>();
            if (b.contains("max_walks")) max_walks = b["max_walks"].get<std::uint64_t>();
            if (b.contains("max_sequences")) max_sequences = b["max_sequences"].get<std::uint64_t>();
        }
    }

    void validate() const {
        const Rational e = parse_fraction(eps);
        if (e <= 0 || e >= Rational(1, 6)) {
            throw std::invalid_argument("eps must lie strictly between 0 and 1/6");
        }
        if (format != "csv" && format != "json") {
            throw std::invalid_argument("format must be csv or json");
        }
        if (max_catalan == 0 || max_walks == 0 || max_sequences == 0) {
            throw std::invalid_argument("budgets must be positive");
        }
        if (s < 0 || max_s < 0) throw std::invalid_argument("s must be nonnegative");
        if (n < 1) throw std::invalid_argument("n must be positive");
        parse_law(law);
    }

    unsigned worker_count() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("EVENWALKS_THREADS")) {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed > 0) return static_cast<unsigned>(parsed);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }

    MomentSpec make_spec() const {
        auto spec = [&] {
            switch (parse_law(law)) {
                case EntryLaw::rademacher: return MomentSpec::rademacher_spec(n);
                case EntryLaw::gaussian: return MomentSpec::gaussian_spec(n);
                case EntryLaw::uniform_symmetric: return MomentSpec::uniform_spec(n);
            }
            return MomentSpec::rademacher_spec(n);
        }();
        spec.zero_diagonal = zero_diagonal;
        return spec;
    }
};

std::ofstream open_output(const RunConfig& config, const std::string& name) {
    fs::create_directories(config.out_dir);
    const fs::path path = fs::path(config.out_dir) / name;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    return out;
}

std::vector<Walk> load_or_enumerate(const RunConfig& config) {
    if (!config.walks_file.empty()) {
        std::ifstream in(config.walks_file);
        if (!in) throw std::invalid_argument("cannot read walk file: " + config.walks_file);
        auto walks = read_walks_jsonl(in);
        for (const auto& w : walks) {
            if (!is_even(w)) {
                throw std::invalid_argument("walk file contains a non-even walk: " +
                                            walk_json_line(w));
            }
        }
        return walks;
    }
    return enumerate_even_walks(config.s, config.max_walks);
}

int cmd_enumerate(const RunConfig& config) {
    const auto walks = enumerate_even_walks(config.s, config.max_walks);

    auto out = open_output(config, "walks_s" + std::to_string(config.s) + ".jsonl");
    write_walks_jsonl(out, walks);

    std::map<std::string, long> per_nu;
    std::map<std::string, long> per_theta;
    for (const auto& w : walks) {
        per_nu[classify_walk(w).nu_signature()] += 1;
        per_theta[marked_instants(w).path.to_string()] += 1;
    }
    if (config.format == "json") {
        json summary;
        summary["s"] = config.s;
        summary["walks"] = walks.size();
        summary["per_nu"] = per_nu;
        summary["per_theta"] = per_theta;
        auto sfile = open_output(config, "enumerate_summary.json");
        sfile << summary.dump(2) << '\n';
    } else {
        auto sfile = open_output(config, "enumerate_summary.csv");
        CsvWriter csv(sfile);
        csv.row({"kind", "key", "count"});
        for (const auto& [key, count] : per_nu) csv.row({"nu", key, std::to_string(count)});
        for (const auto& [key, count] : per_theta) csv.row({"theta", key, std::to_string(count)});
    }
    std::cout << "enumerated " << walks.size() << " walks for s=" << config.s << "\n";
    return kExitOk;
}

int cmd_classify(const RunConfig& config) {
    const auto walks = load_or_enumerate(config);
    const auto rule =
        config.openness_first_edge ? OpennessRule::first_edge : OpennessRule::parity;
    auto out = open_output(config, "profiles.jsonl");
    for (const auto& w : walks) {
        out << profile_json(w, classify_walk(w, rule)) << '\n';
    }
    if (config.export_graphs) {
        auto gfile = open_output(config, "graphs.csv");
        CsvWriter csv(gfile);
        csv.row({"walk", "t", "tail", "head", "marked"});
        for (std::size_t i = 0; i < walks.size(); ++i) {
            const WalkGraph graph(walks[i]);
            for (const auto& e : graph.edges()) {
                csv.row({std::to_string(i), std::to_string(e.time), std::to_string(e.tail),
                         std::to_string(e.head), e.marked ? "1" : "0"});
            }
        }
    }
    std::cout << "classified " << walks.size() << " walks\n";
    return kExitOk;
}

int cmd_reduce(const RunConfig& config) {
    const auto walks = load_or_enumerate(config);
    auto out = open_output(config, "cells.jsonl");
    for (const auto& w : walks) {
        out << cells_json(w, cells(w)) << '\n';
    }
    std::cout << "reduced " << walks.size() << " walks\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& config) {
    const MomentSpec weight_spec =
        truncate_spec(MomentSpec::uniform_spec(1), parse_fraction(config.trunc));
    const Rational bound = parse_fraction(config.trunc);

    // independent census tasks run concurrently; reports are written in a
    // fixed order afterwards
    struct Task {
        std::string name;
        std::function<std::pair<CensusSummary, std::vector<BoundReport>>()> run;
    };
    std::vector<Task> tasks;
    for (int s = 1; s <= config.max_s; ++s) {
        tasks.push_back({"walk_checks_s" + std::to_string(s), [=] {
                             std::vector<BoundReport> rows;
                             auto summary = run_walk_checks(
                                 s, weight_spec, bound,
                                 [&rows](const BoundReport& r) { rows.push_back(r); });
                             return std::make_pair(summary, rows);
                         }});
        tasks.push_back({"cell_census_s" + std::to_string(s), [=] {
                             std::vector<BoundReport> rows;
                             auto summary = run_cell_census(
                                 s, [&rows](const BoundReport& r) { rows.push_back(r); });
                             return std::make_pair(summary, rows);
                         }});
        tasks.push_back({"degree_census_s" + std::to_string(s), [=] {
                             std::vector<BoundReport> rows;
                             auto summary = run_l_property_census(
                                 s, [&rows](const BoundReport& r) { rows.push_back(r); },
                                 config.weak_degree_bound);
                             return std::make_pair(summary, rows);
                         }});
    }
    tasks.push_back({"product_exp_grid", [=] {
                         std::vector<BoundReport> rows;
                         auto summary = run_product_exp_grid(
                             2, config.grid_s, config.grid_n,
                             [&rows](const BoundReport& r) { rows.push_back(r); });
                         return std::make_pair(summary, rows);
                     }});

    const unsigned workers = std::max(1u, config.worker_count());
    std::vector<std::pair<CensusSummary, std::vector<BoundReport>>> results(tasks.size());
    std::size_t next = 0;
    while (next < tasks.size()) {
        const std::size_t batch = std::min<std::size_t>(workers, tasks.size() - next);
        std::vector<std::future<std::pair<CensusSummary, std::vector<BoundReport>>>> futures;
        for (std::size_t i = 0; i < batch; ++i) {
            futures.push_back(std::async(std::launch::async, tasks[next + i].run));
        }
        for (std::size_t i = 0; i < batch; ++i) results[next + i] = futures[i].get();
        next += batch;
    }

    auto out = open_output(config, "bound_reports.csv");
    CsvWriter csv(out);
    auto header = bound_report_header();
    header.insert(header.begin(), "census");
    csv.row(header);
    std::uint64_t violations = 0;
    std::uint64_t rows_written = 0;
    std::vector<std::string> witnesses;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        for (const auto& report : results[i].second) {
            auto row = bound_report_row(report);
            row.insert(row.begin(), tasks[i].name);
            csv.row(row);
            ++rows_written;
        }
        violations += results[i].first.violations;
        for (const auto& w : results[i].first.witnesses) witnesses.push_back(w);
    }

    auto census_out = open_output(config, "degree_census.csv");
    CsvWriter census_csv(census_out);
    census_csv.row({"s", "m", "count", "bound"});
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].name.rfind("degree_census", 0) != 0) continue;
        for (const auto& report : results[i].second) {
            const auto params = json::parse(report.params);
            census_csv.row({params["s"].dump(), params["m"].dump(),
                            numerator(report.lhs).str(), fraction_string(report.rhs)});
        }
    }

    std::cout << "wrote " << rows_written << " bound reports, " << violations << " violations\n";
    if (violations > 0) {
        auto wfile = open_output(config, "witnesses.txt");
        for (const auto& w : witnesses) wfile << w << '\n';
        std::cerr << json{{"error", "verification_failed"}, {"violations", violations}}.dump()
                  << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_moments(const RunConfig& config) {
    const auto spec = config.make_spec();
    auto out = open_output(config, "moments.csv");
    CsvWriter csv(out);
    csv.row({"s", "n", "method", "value_num", "value_den", "estimate", "stderr"});

    const auto s_str = std::to_string(config.s);
    const auto n_str = std::to_string(config.n);
    auto emit_exact = [&](const std::string& method, const Rational& value) {
        csv.row({s_str, n_str, method, numerator(value).str(), denominator(value).str(), "", ""});
    };

    const Rational exact = exact_moment(config.s, spec, config.max_walks);
    emit_exact("exact", exact);
    const auto poly = moment_polynomial(config.s, spec, config.max_walks);
    emit_exact("polynomial", poly.evaluate_moment(config.n));

    const double total = std::pow(static_cast<double>(config.n), 2.0 * config.s);
    if (total <= static_cast<double>(config.max_sequences)) {
        emit_exact("brute_force", brute_force_moment(config.s, spec, config.max_sequences));
    }

    const auto mc = mc_moment(config.s, config.n, parse_law(config.law), config.trials,
                              config.seed, 0.0, config.zero_diagonal);
    std::ostringstream est, se;
    est << std::setprecision(17) << mc.estimate;
    se << std::setprecision(17) << mc.std_error;
    csv.row({s_str, n_str, "mc", "", "", est.str(), se.str()});

    const auto z = z_decomposition(config.s, spec, parse_fraction(config.c0),
                                   parse_fraction(config.eps), config.max_walks);
    if (z.total() != exact) {
        std::cerr << json{{"error", "z_partition_mismatch"}}.dump() << "\n";
        return kExitVerification;
    }
    emit_exact("z1", z.z1);
    emit_exact("z2", z.z2);
    emit_exact("z3", z.z3);
    emit_exact("z4", z.z4);
    std::cout << "moment table for s=" << config.s << " n=" << config.n << " written\n";
    return kExitOk;
}

int cmd_report(const RunConfig& config) {
    std::vector<int> s_list;
    const int top = std::max(4, config.s);
    for (int s = 4; s <= top; ++s) s_list.push_back(s);
    const auto report = trend_report(config.mu, s_list, config.trials, config.seed,
                                     config.b_exhaustive_s, config.c_margin);

    auto out = open_output(config, "trend.csv");
    CsvWriter csv(out);
    csv.row({"s", "n", "ratio", "ratio_stderr", "bound", "within", "flagged"});
    for (const auto& row : report.rows) {
        std::ostringstream ratio, err, bound;
        ratio << std::setprecision(17) << row.ratio;
        err << std::setprecision(17) << row.ratio_err;
        bound << std::setprecision(17) << row.bound;
        csv.row({std::to_string(row.s), std::to_string(row.n), ratio.str(), err.str(),
                 bound.str(), row.within ? "1" : "0", row.flagged ? "1" : "0"});
    }

    auto btab = open_output(config, "b_table.csv");
    CsvWriter bcsv(btab);
    bcsv.row({"s", "lambda", "value", "stderr", "exhaustive"});
    for (int s = 4; s <= config.b_exhaustive_s; ++s) {
        const auto b = estimate_B(s, config.lambda, BMode::exhaustive, config.trials, config.seed,
                                  config.max_catalan);
        std::ostringstream value;
        value << std::setprecision(17) << b.value;
        std::ostringstream lambda;
        lambda << config.lambda;
        bcsv.row({std::to_string(s), lambda.str(), value.str(), "0", "1"});
    }
    std::cout << "trend report with " << report.rows.size() << " rows written\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Even closed walks, their classification, and trace-moment checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    RunConfig config;
    std::string config_path;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", config.out_dir, "output directory");
    app.add_option("--format", config.format, "summary format: csv or json");
    app.add_option("--threads", config.threads, "worker threads (0 = EVENWALKS_THREADS or auto)");
    app.add_option("--max-catalan", config.max_catalan, "path enumeration budget");
    app.add_option("--max-walks", config.max_walks, "walk enumeration budget");
    app.add_option("--max-sequences", config.max_sequences, "index-sum budget");

    auto* enumerate = app.add_subcommand("enumerate", "write all minimal even closed walks");
    enumerate->add_option("--s", config.s, "half length");

    auto* classify = app.add_subcommand("classify", "self-intersection profiles");
    classify->add_option("--s", config.s, "half length");
    classify->add_option("--walks", config.walks_file, "newline-delimited walk JSON input");
    classify->add_flag("--openness-first-edge", config.openness_first_edge,
                       "use the stricter first-arrival-edge openness rule");
    classify->add_flag("--graphs", config.export_graphs, "also export edge lists as CSV");

    auto* reduce = app.add_subcommand("reduce", "reduction traces and cell reports");
    reduce->add_option("--s", config.s, "half length");
    reduce->add_option("--walks", config.walks_file, "newline-delimited walk JSON input");

    auto* verify = app.add_subcommand("verify", "run every census check and bound");
    verify->add_option("--max-s", config.max_s, "largest census half length");
    verify->add_option("--grid-s", config.grid_s, "largest s in the exponential-bound grid");
    verify->add_option("--grid-n", config.grid_n, "largest n in the exponential-bound grid");
    verify->add_option("--trunc", config.trunc, "truncation level for the weight bound");
    verify->add_flag("--weak-degree-bound", config.weak_degree_bound,
                     "use the s^2 C(s) (3/4)^m variant of the degree-census bound");

    auto* moments = app.add_subcommand("moments", "exact, polynomial, brute-force, sampled");
    moments->add_option("--s", config.s, "half length");
    moments->add_option("--n", config.n, "matrix size");
    moments->add_option("--law", config.law, "entry law: rademacher, gaussian, uniform");
    moments->add_option("--trials", config.trials, "Monte Carlo trials");
    moments->add_option("--seed", config.seed, "Monte Carlo seed");
    moments->add_option("--c0", config.c0, "split threshold constant (fraction)");
    moments->add_option("--eps", config.eps, "exit-degree exponent offset (fraction)");
    moments->add_flag("--zero-diagonal", config.zero_diagonal, "zero the diagonal entries");

    auto* report = app.add_subcommand("report", "scaled-moment trend and height-mean tables");
    report->add_option("--mu", config.mu, "limit ratio s^3/n^2");
    report->add_option("--s", config.s, "largest s in the trend table");
    report->add_option("--trials", config.trials, "Monte Carlo trials per row");
    report->add_option("--seed", config.seed, "base seed");
    report->add_option("--c-margin", config.c_margin, "additive constant in the exponent");
    report->add_option("--b-s", config.b_exhaustive_s, "half length for the exhaustive height mean");
    report->add_option("--lambda", config.lambda, "height-mean exponent scale");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            config.load(config_path);
            // flags win over file values
            app.clear();
            app.parse(argc, argv);
        }
        config.validate();
        if (enumerate->parsed()) return cmd_enumerate(config);
        if (classify->parsed()) return cmd_classify(config);
        if (reduce->parsed()) return cmd_reduce(config);
        if (verify->parsed()) return cmd_verify(config);
        if (moments->parsed()) return cmd_moments(config);
        if (report->parsed()) return cmd_report(config);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::cerr << json{{"error", "budget_exceeded"},
                          {"what", e.what()},
                          {"requested", e.requested()},
                          {"limit", e.limit()}}
                         .dump()
                  << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "invalid_configuration"}, {"what", e.what()}}.dump() << "\n";
        return kExitConfig;
    }
}
