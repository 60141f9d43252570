#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evenwalks/bounds.hpp"
#include "evenwalks/classify.hpp"
#include "evenwalks/reduce.hpp"
#include "evenwalks/walk.hpp"

namespace evenwalks {

/// {"s": int, "labels": [...]} on a single line.
std::string walk_json_line(const Walk& walk);
std::string walk_labels_json(const Walk& walk);
Walk walk_from_json_line(const std::string& line);

void write_walks_jsonl(std::ostream& out, const std::vector<Walk>& walks);
std::vector<Walk> read_walks_jsonl(std::istream& in);

std::string profile_json(const Walk& walk, const SelfIntersectionProfile& profile);
std::string cells_json(const Walk& walk, const CellReport& report);

/// Minimal CSV writer with RFC-style quoting.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

std::vector<std::string> bound_report_header();
std::vector<std::string> bound_report_row(const BoundReport& report);

/// Edge list rows (t, tail, head, marked).
void write_graph_csv(std::ostream& out, const WalkGraph& graph);

}  // namespace evenwalks
