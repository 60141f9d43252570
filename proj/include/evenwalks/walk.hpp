#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "evenwalks/dyck.hpp"
#include "evenwalks/numeric.hpp"

namespace evenwalks {

/// Closed walk of 2s steps over positive integer vertex labels. Minimality
/// and evenness are properties of how a walk was produced (enumeration and
/// relabeling guarantee them); they are queryable, not enforced, so reduced
/// walks with label gaps remain representable.
class Walk {
public:
    Walk() : labels_{1} {}
    explicit Walk(std::vector<int> labels);

    int half_length() const { return static_cast<int>((labels_.size() - 1) / 2); }
    int step_count() const { return static_cast<int>(labels_.size() - 1); }
    int label(int t) const { return labels_[static_cast<std::size_t>(t)]; }
    const std::vector<int>& labels() const { return labels_; }
    int root() const { return labels_.front(); }
    bool empty() const { return labels_.size() == 1; }

    int vertex_count() const;
    std::vector<int> vertices() const;  // sorted distinct labels

    bool operator==(const Walk& other) const { return labels_ == other.labels_; }
    bool operator<(const Walk& other) const { return labels_ < other.labels_; }

private:
    std::vector<int> labels_;
};

/// Canonical relabeling: each label new to the prefix becomes (number of
/// distinct labels seen so far) + 1. Idempotent on already-minimal walks.
Walk minimal_walk_of(const std::vector<int>& index_path);

bool is_minimal(const Walk& walk);

/// Every non-oriented edge is traversed an even number of times.
bool is_even(const Walk& walk);

/// Every non-oriented edge is traversed equally often in both directions;
/// loop traversals count toward both directions at once.
bool is_double_even(const Walk& walk);

/// Traversals of the non-oriented edge [a,b] during steps 1..t (either
/// direction); 0 for labels the walk never visits.
int multiplicity(const Walk& walk, int a, int b, int t);

struct MarkedInstants {
    std::vector<int> times;  // increasing
    DyckPath path;
};

/// Step t is marked when its edge has odd multiplicity at time t. The marked
/// pattern of an even closed walk is a Dyck path with s ascending steps.
MarkedInstants marked_instants(const Walk& walk);

struct WalkEdge {
    int tail = 0;
    int head = 0;
    int time = 0;
    bool marked = false;
};

/// Timestamped oriented multigraph of a walk with multiplicity queries.
class WalkGraph {
public:
    explicit WalkGraph(const Walk& walk);

    int step_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<WalkEdge>& edges() const { return edges_; }
    const WalkEdge& edge(int t) const { return edges_[static_cast<std::size_t>(t - 1)]; }
    const std::vector<int>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    bool has_vertex(int v) const;

    int multiplicity(int a, int b, int t) const;
    bool odd_at(int a, int b, int t) const { return multiplicity(a, b, t) % 2 == 1; }

    /// Times of marked edges with tail v, in time order.
    std::vector<int> exit_cluster(int v) const;
    int exit_degree(int v) const;
    int max_exit_degree() const;

    /// Times t >= 1 with head v (loop steps included).
    std::vector<int> arrivals(int v) const;
    /// Subset of arrivals(v) whose step is marked.
    std::vector<int> marked_arrivals(int v) const;

    int max_edge_multiplicity() const;
    /// Non-oriented edges with odd multiplicity at time t that touch v;
    /// loops count once.
    std::vector<std::pair<int, int>> open_edges_at(int v, int t) const;

private:
    std::vector<WalkEdge> edges_;
    std::vector<int> vertices_;
    std::map<std::pair<int, int>, std::vector<int>> pair_times_;  // (min,max) -> times
};

WalkGraph graph_of(const Walk& walk);

/// Visit all minimal even closed walks of 2s steps in label-lexicographic
/// order.
void for_each_even_walk(int s, const std::function<void(const Walk&)>& fn);

std::vector<Walk> enumerate_even_walks(int s, std::uint64_t max_walks = 20'000'000);

/// Number of minimal even closed walks of 2s steps.
std::uint64_t count_even_walks(int s);

}  // namespace evenwalks
