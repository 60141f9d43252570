#include "evenwalks/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace evenwalks {

long SelfIntersectionProfile::sum_k_nu() const {
    long sum = 0;
    for (std::size_t k = 1; k < nu.size(); ++k) sum += static_cast<long>(k) * nu[k];
    return sum;
}

std::string SelfIntersectionProfile::nu_signature() const {
    std::ostringstream out;
    for (std::size_t k = 2; k < nu.size(); ++k) {
        if (nu[k] > 0) out << k << ":" << nu[k] << ";";
    }
    return out.str();
}

int kappa(const WalkGraph& graph, int root, int v) {
    if (!graph.has_vertex(v)) throw std::invalid_argument("vertex not in walk graph");
    const int marked = static_cast<int>(graph.marked_arrivals(v).size());
    return marked + (v == root ? 1 : 0);
}

int kappa(const Walk& walk, int v) { return kappa(WalkGraph(walk), walk.root(), v); }

Openness arrival_openness(const WalkGraph& graph, int t, OpennessRule rule) {
    const auto& e = graph.edge(t);
    if (!e.marked) throw std::invalid_argument("not a marked arrival instant");
    const int v = e.head;
    if (rule == OpennessRule::first_edge) {
        const auto arrivals = graph.marked_arrivals(v);
        const auto& first = graph.edge(arrivals.front());
        const bool open = graph.multiplicity(first.tail, first.head, t - 1) == 1 &&
                          arrivals.front() < t;
        if (!open) return Openness::closed;
        return first.tail == v ? Openness::open_tail : Openness::open_head;
    }
    bool head = false;
    bool tail = false;
    for (const auto& [a, b] : graph.open_edges_at(v, t - 1)) {
        if (a == b) {  // odd loop offers both endpoints
            head = tail = true;
            continue;
        }
        // direction of any traversal so far decides head/tail of the open edge
        for (const auto& edge : graph.edges()) {
            if (edge.time >= t) break;
            if (std::minmax(edge.tail, edge.head) != std::minmax(a, b)) continue;
            if (edge.head == v) head = true;
            if (edge.tail == v) tail = true;
        }
    }
    if (head && tail) return Openness::open_both;
    if (head) return Openness::open_head;
    if (tail) return Openness::open_tail;
    return Openness::closed;
}

bool is_open_arrival(const Walk& walk, int t, OpennessRule rule) {
    return arrival_openness(WalkGraph(walk), t, rule) != Openness::closed;
}

SelfIntersectionProfile classify_walk(const Walk& walk, OpennessRule rule) {
    return classify_walk(walk, WalkGraph(walk), rule);
}

SelfIntersectionProfile classify_walk(const Walk& walk, const WalkGraph& graph,
                                      OpennessRule rule) {
    SelfIntersectionProfile profile;
    const int s = walk.half_length();
    profile.nu.assign(static_cast<std::size_t>(s) + 2, 0);

    for (int v : graph.vertices()) {
        const int k = kappa(graph, walk.root(), v);
        profile.kappa[v] = k;
        profile.nu[static_cast<std::size_t>(k)] += 1;
        profile.exit_degree[v] = graph.exit_degree(v);
    }
    for (std::size_t k = 2; k < profile.nu.size(); ++k) {
        profile.nu1_norm += (static_cast<long>(k) - 1) * profile.nu[k];
        profile.nu2_norm += (static_cast<long>(k) - 2) * profile.nu[k];
    }
    profile.max_exit_degree = graph.max_exit_degree();
    profile.max_edge_multiplicity = graph.max_edge_multiplicity();
    profile.root_marked_arrivals = static_cast<int>(graph.marked_arrivals(walk.root()).size());
    for (const auto& e : graph.edges()) {
        if (e.tail == e.head) ++profile.loop_steps;
    }

    std::map<int, bool> open_simple_seen;
    for (const auto& e : graph.edges()) {
        if (!e.marked) continue;
        const Openness type = arrival_openness(graph, e.time, rule);
        if (type == Openness::closed) continue;
        profile.open_arrivals.push_back(OpenArrival{e.time, e.head, type});
        const int k = profile.kappa[e.head];
        if (k == 2) open_simple_seen[e.head] = true;
        if (k == 3) ++profile.open_triple_arrivals;
    }
    profile.open_simple = static_cast<int>(open_simple_seen.size());
    return profile;
}

SimpleKind classify_simple(const Walk& walk, int v) {
    const WalkGraph graph(walk);
    if (v == walk.root()) throw std::invalid_argument("root vertex has no second arrival pair");
    const auto arrivals = graph.marked_arrivals(v);
    if (kappa(graph, walk.root(), v) != 2 || arrivals.size() != 2) {
        throw std::invalid_argument("not a two-fold self-intersection");
    }
    const auto& first = graph.edge(arrivals[0]);
    const auto& second = graph.edge(arrivals[1]);
    if (second.tail == first.tail) return SimpleKind::same_direction;
    for (const auto& e : graph.edges()) {
        if (e.time >= second.time) break;
        if (e.marked && e.tail == v && e.head == second.tail) return SimpleKind::reversed_closure;
    }
    return SimpleKind::other;
}

int count_open_marked_edges(const WalkGraph& graph, int v, int t) {
    if (t > graph.step_count()) throw std::invalid_argument("time beyond walk end");
    // every odd non-oriented edge carries exactly one unclosed marked
    // traversal; a loop is attached by both endpoints
    int count = 0;
    for (const auto& [a, b] : graph.open_edges_at(v, t)) {
        count += (a == b) ? 2 : 1;
    }
    return count;
}

int count_open_marked_edges(const Walk& walk, int v, int t) {
    return count_open_marked_edges(WalkGraph(walk), v, t);
}

int non_marked_exits(const WalkGraph& graph, int v) {
    int count = 0;
    for (const auto& e : graph.edges()) {
        if (!e.marked && e.tail == v) ++count;
    }
    return count;
}

}  // namespace evenwalks
