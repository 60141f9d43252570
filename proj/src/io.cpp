#include "evenwalks/io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace evenwalks {

using nlohmann::json;

std::string walk_labels_json(const Walk& walk) {
    json labels = json::array();
    for (int v : walk.labels()) labels.push_back(v);
    return labels.dump();
}

std::string walk_json_line(const Walk& walk) {
    json j;
    j["s"] = walk.half_length();
    j["labels"] = walk.labels();
    return j.dump();
}

Walk walk_from_json_line(const std::string& line) {
    const json j = json::parse(line);
    if (!j.contains("labels") || !j["labels"].is_array()) {
        throw std::invalid_argument("walk record needs a labels array");
    }
    std::vector<int> labels = j["labels"].get<std::vector<int>>();
    Walk walk{std::move(labels)};
    if (j.contains("s") && j["s"].get<int>() != walk.half_length()) {
        throw std::invalid_argument("walk record length disagrees with s");
    }
    return walk;
}

void write_walks_jsonl(std::ostream& out, const std::vector<Walk>& walks) {
    for (const auto& w : walks) out << walk_json_line(w) << '\n';
}

std::vector<Walk> read_walks_jsonl(std::istream& in) {
    std::vector<Walk> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(walk_from_json_line(line));
    }
    return out;
}

namespace {

std::string openness_name(Openness o) {
    switch (o) {
        case Openness::closed: return "closed";
        case Openness::open_head: return "E";
        case Openness::open_tail: return "S";
        case Openness::open_both: return "both";
    }
    return "?";
}

}  // namespace

std::string profile_json(const Walk& walk, const SelfIntersectionProfile& profile) {
    json j;
    j["labels"] = walk.labels();
    json kappa = json::object();
    for (const auto& [v, k] : profile.kappa) kappa[std::to_string(v)] = k;
    j["kappa"] = kappa;
    json nu = json::array();
    for (std::size_t k = 1; k < profile.nu.size(); ++k) nu.push_back(profile.nu[k]);
    j["nu"] = nu;
    j["nu1_norm"] = profile.nu1_norm;
    j["nu2_norm"] = profile.nu2_norm;
    json arrivals = json::array();
    for (const auto& a : profile.open_arrivals) {
        arrivals.push_back({{"time", a.time}, {"vertex", a.vertex}, {"type", openness_name(a.type)}});
    }
    j["open_arrivals"] = arrivals;
    j["delta"] = profile.max_exit_degree;
    json degrees = json::object();
    for (const auto& [v, d] : profile.exit_degree) degrees[std::to_string(v)] = d;
    j["exit_degree"] = degrees;
    j["max_edge_multiplicity"] = profile.max_edge_multiplicity;
    return j.dump();
}

std::string cells_json(const Walk& walk, const CellReport& report) {
    json j;
    j["labels"] = walk.labels();
    j["K"] = report.K;
    j["bts_times"] = report.bts_times;
    json per_vertex = json::object();
    for (const auto& [v, vc] : report.at) {
        per_vertex[std::to_string(v)] = {{"primary", vc.primary},
                                         {"imported", vc.imported},
                                         {"J", vc.J()},
                                         {"L", vc.L()},
                                         {"local_bts", vc.local_bts}};
    }
    j["cells"] = per_vertex;
    return j.dump();
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    bool first = true;
    for (const auto& field : fields) {
        if (!first) out_ << ',';
        first = false;
        const bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
        if (!needs_quotes) {
            out_ << field;
            continue;
        }
        out_ << '"';
        for (char c : field) {
            if (c == '"') out_ << '"';
            out_ << c;
        }
        out_ << '"';
    }
    out_ << '\n';
}

std::vector<std::string> bound_report_header() {
    return {"bound_id", "params_json", "lhs", "rhs", "satisfied", "slack"};
}

std::vector<std::string> bound_report_row(const BoundReport& report) {
    std::ostringstream slack;
    slack << report.slack;
    return {report.bound_id,           report.params,
            fraction_string(report.lhs), fraction_string(report.rhs),
            report.satisfied ? "1" : "0", slack.str()};
}

void write_graph_csv(std::ostream& out, const WalkGraph& graph) {
    CsvWriter csv(out);
    csv.row({"t", "tail", "head", "marked"});
    for (const auto& e : graph.edges()) {
        csv.row({std::to_string(e.time), std::to_string(e.tail), std::to_string(e.head),
                 e.marked ? "1" : "0"});
    }
}

}  // namespace evenwalks
