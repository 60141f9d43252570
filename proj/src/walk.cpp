#include "evenwalks/walk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace evenwalks {

Walk::Walk(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("walk needs at least one label");
    if (labels_.front() != labels_.back()) throw std::invalid_argument("walk must be closed");
    for (int v : labels_) {
        if (v < 1) throw std::invalid_argument("labels must be positive");
    }
}

int Walk::vertex_count() const { return static_cast<int>(vertices().size()); }

std::vector<int> Walk::vertices() const {
    std::set<int> uniq(labels_.begin(), labels_.end());
    return {uniq.begin(), uniq.end()};
}

Walk minimal_walk_of(const std::vector<int>& index_path) {
    if (index_path.empty()) throw std::invalid_argument("empty index path");
    if (index_path.front() != index_path.back()) throw std::invalid_argument("index path must be closed");
    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(index_path.size());
    for (int v : index_path) {
        auto [it, inserted] = relabel.try_emplace(v, static_cast<int>(relabel.size()) + 1);
        out.push_back(it->second);
    }
    return Walk(std::move(out));
}

bool is_minimal(const Walk& walk) {
    int seen = 0;
    for (int t = 0; t <= walk.step_count(); ++t) {
        const int v = walk.label(t);
        if (v > seen) {
            if (v != seen + 1) return false;
            seen = v;
        }
    }
    return true;
}

namespace {

std::pair<int, int> edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

bool is_even(const Walk& walk) {
    std::map<std::pair<int, int>, int> mult;
    for (int t = 1; t <= walk.step_count(); ++t) {
        mult[edge_key(walk.label(t - 1), walk.label(t))] ^= 1;
    }
    for (const auto& [edge, parity] : mult) {
        if (parity != 0) return false;
    }
    return true;
}

bool is_double_even(const Walk& walk) {
    std::map<std::pair<int, int>, int> net;  // signed traversal balance, loops excluded
    for (int t = 1; t <= walk.step_count(); ++t) {
        const int a = walk.label(t - 1);
        const int b = walk.label(t);
        if (a == b) continue;
        net[edge_key(a, b)] += a < b ? 1 : -1;
    }
    for (const auto& [edge, balance] : net) {
        if (balance != 0) return false;
    }
    return is_even(walk);
}

int multiplicity(const Walk& walk, int a, int b, int t) {
    if (t > walk.step_count()) throw std::invalid_argument("time beyond walk end");
    const auto key = edge_key(a, b);
    int count = 0;
    for (int u = 1; u <= t; ++u) {
        if (edge_key(walk.label(u - 1), walk.label(u)) == key) ++count;
    }
    return count;
}

MarkedInstants marked_instants(const Walk& walk) {
    MarkedInstants out;
    std::map<std::pair<int, int>, int> parity;
    std::vector<std::uint8_t> steps;
    steps.reserve(static_cast<std::size_t>(walk.step_count()));
    for (int t = 1; t <= walk.step_count(); ++t) {
        int& p = parity[edge_key(walk.label(t - 1), walk.label(t))];
        p ^= 1;
        steps.push_back(static_cast<std::uint8_t>(p));
        if (p) out.times.push_back(t);
    }
    out.path = DyckPath(std::move(steps));  // throws when the walk is not even
    return out;
}

WalkGraph::WalkGraph(const Walk& walk) {
    std::map<std::pair<int, int>, int> parity;
    edges_.reserve(static_cast<std::size_t>(walk.step_count()));
    for (int t = 1; t <= walk.step_count(); ++t) {
        const int a = walk.label(t - 1);
        const int b = walk.label(t);
        const auto key = edge_key(a, b);
        int& p = parity[key];
        p ^= 1;
        edges_.push_back(WalkEdge{a, b, t, p != 0});
        pair_times_[key].push_back(t);
    }
    vertices_ = walk.vertices();
}

bool WalkGraph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int WalkGraph::multiplicity(int a, int b, int t) const {
    auto it = pair_times_.find(edge_key(a, b));
    if (it == pair_times_.end()) return 0;
    const auto& times = it->second;
    return static_cast<int>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
}

std::vector<int> WalkGraph::exit_cluster(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.marked && e.tail == v) out.push_back(e.time);
    }
    return out;
}

int WalkGraph::exit_degree(int v) const { return static_cast<int>(exit_cluster(v).size()); }

int WalkGraph::max_exit_degree() const {
    std::map<int, int> deg;
    for (const auto& e : edges_) {
        if (e.marked) ++deg[e.tail];
    }
    int best = 0;
    for (const auto& [v, d] : deg) best = std::max(best, d);
    return best;
}

std::vector<int> WalkGraph::arrivals(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.head == v) out.push_back(e.time);
    }
    return out;
}

std::vector<int> WalkGraph::marked_arrivals(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.marked && e.head == v) out.push_back(e.time);
    }
    return out;
}

int WalkGraph::max_edge_multiplicity() const {
    int best = 0;
    for (const auto& [key, times] : pair_times_) best = std::max(best, static_cast<int>(times.size()));
    return best;
}

std::vector<std::pair<int, int>> WalkGraph::open_edges_at(int v, int t) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, times] : pair_times_) {
        if (key.first != v && key.second != v) continue;
        const auto count = std::upper_bound(times.begin(), times.end(), t) - times.begin();
        if (count % 2 == 1) out.push_back(key);
    }
    return out;
}

WalkGraph graph_of(const Walk& walk) { return WalkGraph(walk); }

namespace {

struct WalkEnumerator {
    int s;
    int steps;
    const std::function<void(const Walk&)>* fn;
    std::vector<int> labels;
    std::vector<std::uint8_t> parity;  // (a-1)*(s+1) + (b-1), a <= b
    int odd_edges = 0;
    int max_label = 1;

    explicit WalkEnumerator(int s_, const std::function<void(const Walk&)>& f)
        : s(s_), steps(2 * s_), fn(&f) {
        labels.reserve(static_cast<std::size_t>(steps + 1));
        labels.push_back(1);
        parity.assign(static_cast<std::size_t>((s + 1) * (s + 1)), 0);
    }

    std::size_t slot(int a, int b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>((a - 1) * (s + 1) + (b - 1));
    }

    void run() {
        if (s == 0) {
            (*fn)(Walk());
            return;
        }
        extend();
    }

    void extend() {
        const int t = static_cast<int>(labels.size()) - 1;
        if (t == steps) {
            (*fn)(Walk(labels));
            return;
        }
        const int remaining = steps - t - 1;
        const int cur = labels.back();
        const int limit = std::min(max_label + 1, s + 1);
        for (int next = 1; next <= limit; ++next) {
            const std::size_t e = slot(cur, next);
            const int delta = parity[e] ? -1 : 1;
            // after this step every odd edge still needs a closing traversal
            if (odd_edges + delta > remaining) continue;
            parity[e] ^= 1;
            odd_edges += delta;
            labels.push_back(next);
            const int saved_max = max_label;
            max_label = std::max(max_label, next);
            extend();
            max_label = saved_max;
            labels.pop_back();
            parity[e] ^= 1;
            odd_edges -= delta;
        }
    }
};

}  // namespace

void for_each_even_walk(int s, const std::function<void(const Walk&)>& fn) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    WalkEnumerator enumerator(s, fn);
    enumerator.run();
}

std::vector<Walk> enumerate_even_walks(int s, std::uint64_t max_walks) {
    std::vector<Walk> out;
    for_each_even_walk(s, [&](const Walk& w) {
        if (out.size() >= max_walks) {
            throw BudgetExceeded("even-walk enumeration over budget", out.size() + 1, max_walks);
        }
        out.push_back(w);
    });
    return out;
}

std::uint64_t count_even_walks(int s) {
    std::uint64_t n = 0;
    for_each_even_walk(s, [&](const Walk&) { ++n; });
    return n;
}

}  // namespace evenwalks
