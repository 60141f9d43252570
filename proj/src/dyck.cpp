#include "evenwalks/dyck.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace evenwalks {

DyckPath::DyckPath(std::vector<std::uint8_t> steps) : steps_(std::move(steps)) {
    if (steps_.size() % 2 != 0) throw std::invalid_argument("path length must be even");
    int h = 0;
    for (std::uint8_t b : steps_) {
        if (b > 1) throw std::invalid_argument("path steps must be 0 or 1");
        h += b ? 1 : -1;
        if (h < 0) throw std::invalid_argument("path drops below zero");
    }
    if (h != 0) throw std::invalid_argument("path does not return to zero");
}

DyckPath DyckPath::from_string(const std::string& bits) {
    std::vector<std::uint8_t> steps;
    steps.reserve(bits.size());
    for (char c : bits) {
        if (c == '1') steps.push_back(1);
        else if (c == '0') steps.push_back(0);
        else throw std::invalid_argument("path string must contain only '0' and '1'");
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (std::uint8_t b : steps_) out.push_back(b ? '1' : '0');
    return out;
}

int DyckPath::height(int t) const {
    int h = 0;
    for (int i = 0; i < t; ++i) h += steps_[static_cast<std::size_t>(i)] ? 1 : -1;
    return h;
}

bool DyckPath::operator<(const DyckPath& other) const {
    // ascending steps sort before descending ones
    const std::size_t n = std::min(steps_.size(), other.steps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (steps_[i] != other.steps_[i]) return steps_[i] > other.steps_[i];
    }
    return steps_.size() < other.steps_.size();
}

int PlaneTree::max_exit_degree() const {
    int best = 0;
    for (const auto& c : children) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

BigInt catalan(unsigned s) {
    if (s == 0) return 1;
    return binomial(2 * s, s) / BigInt(s + 1);
}

namespace {

void dyck_dfs(int s, std::vector<std::uint8_t>& steps, int ones, int height,
              const std::function<void(const DyckPath&)>& fn) {
    const int t = static_cast<int>(steps.size());
    if (t == 2 * s) {
        fn(DyckPath(steps));
        return;
    }
    if (ones < s) {
        steps.push_back(1);
        dyck_dfs(s, steps, ones + 1, height + 1, fn);
        steps.pop_back();
    }
    if (height > 0) {
        steps.push_back(0);
        dyck_dfs(s, steps, ones, height - 1, fn);
        steps.pop_back();
    }
}

}  // namespace

void for_each_dyck(int s, const std::function<void(const DyckPath&)>& fn) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    std::vector<std::uint8_t> steps;
    steps.reserve(static_cast<std::size_t>(2 * s));
    dyck_dfs(s, steps, 0, 0, fn);
}

std::vector<DyckPath> enumerate_dyck(int s, std::uint64_t max_paths) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    const BigInt total = catalan(static_cast<unsigned>(s));
    if (total > max_paths) {
        throw BudgetExceeded("Dyck path enumeration over budget",
                             total.convert_to<std::uint64_t>(), max_paths);
    }
    std::vector<DyckPath> out;
    out.reserve(total.convert_to<std::size_t>());
    for_each_dyck(s, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

HeightStat max_height(const DyckPath& path) {
    HeightStat stat;
    int h = 0;
    for (int t = 1; t <= path.length(); ++t) {
        h += path.ascending(t) ? 1 : -1;
        if (h > stat.max_height) {
            stat.max_height = h;
            stat.argmax = t;
        }
    }
    return stat;
}

PlaneTree tree_of(const DyckPath& path) {
    PlaneTree tree;
    tree.children.emplace_back();
    tree.parent.push_back(-1);
    int current = 0;
    for (int t = 1; t <= path.length(); ++t) {
        if (path.ascending(t)) {
            const int v = tree.vertex_count();
            tree.children.emplace_back();
            tree.parent.push_back(current);
            tree.children[static_cast<std::size_t>(current)].push_back(v);
            tree.edge_child.push_back(v);
            current = v;
        } else {
            current = tree.parent[static_cast<std::size_t>(current)];
        }
    }
    return tree;
}

namespace {

void contour_dfs(const PlaneTree& tree, int v, std::vector<std::uint8_t>& steps) {
    for (int c : tree.children[static_cast<std::size_t>(v)]) {
        steps.push_back(1);
        contour_dfs(tree, c, steps);
        steps.push_back(0);
    }
}

}  // namespace

DyckPath contour_of(const PlaneTree& tree) {
    std::vector<std::uint8_t> steps;
    steps.reserve(static_cast<std::size_t>(2 * tree.edge_count()));
    contour_dfs(tree, 0, steps);
    return DyckPath(std::move(steps));
}

bool has_L_property(const DyckPath& path, int m) {
    if (m <= 0) throw std::invalid_argument("m must be positive");
    // child counts along the contour, no tree materialization
    std::vector<int> open_degrees{0};
    for (int t = 1; t <= path.length(); ++t) {
        if (path.ascending(t)) {
            if (++open_degrees.back() >= m) return true;
            open_degrees.push_back(0);
        } else {
            open_degrees.pop_back();
        }
    }
    return false;
}

BigInt count_L_property(int s, int m, std::uint64_t max_paths) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    const BigInt total = catalan(static_cast<unsigned>(s));
    if (total > max_paths) {
        throw BudgetExceeded("Dyck path census over budget", total.convert_to<std::uint64_t>(),
                             max_paths);
    }
    BigInt count = 0;
    for_each_dyck(s, [&](const DyckPath& p) {
        if (has_L_property(p, m)) ++count;
    });
    return count;
}

Rational l_property_bound(int s, int m, bool weak_variant) {
    const Rational decay = pow_rational(Rational(3, 4), static_cast<unsigned>(std::max(m, 0)));
    const BigInt cs = catalan(static_cast<unsigned>(s));
    if (weak_variant) return Rational(BigInt(s) * BigInt(s) * cs) * decay;
    return Rational(2 * BigInt(s) * cs) * decay;
}

DyckPath sample_dyck_uniform(int s, std::uint64_t seed) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    // s ascents and s+1 descents; exactly one cyclic rotation of the shuffled
    // sequence is a ballot sequence, and it ends with a descent.
    std::vector<std::int8_t> arr(static_cast<std::size_t>(2 * s + 1), -1);
    std::fill_n(arr.begin(), s, static_cast<std::int8_t>(1));
    std::mt19937_64 gen(seed);
    std::shuffle(arr.begin(), arr.end(), gen);

    int sum = 0;
    int min_sum = 1;
    std::size_t cut = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        sum += arr[i];
        if (sum < min_sum) {
            min_sum = sum;
            cut = i + 1;
        }
    }
    cut %= arr.size();

    std::vector<std::uint8_t> steps;
    steps.reserve(static_cast<std::size_t>(2 * s));
    for (std::size_t i = 0; i + 1 < arr.size(); ++i) {
        steps.push_back(arr[(cut + i) % arr.size()] == 1 ? 1 : 0);
    }
    return DyckPath(std::move(steps));
}

BEstimate estimate_B(int s, double lambda, BMode mode, std::uint64_t trials, std::uint64_t seed,
                     std::uint64_t max_paths) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    const double scale = lambda / std::sqrt(static_cast<double>(s));
    BEstimate est;
    if (mode == BMode::exhaustive) {
        const BigInt total = catalan(static_cast<unsigned>(s));
        if (total > max_paths) {
            throw BudgetExceeded("exhaustive height statistic over budget",
                                 total.convert_to<std::uint64_t>(), max_paths);
        }
        double sum = 0.0;
        std::uint64_t n = 0;
        for_each_dyck(s, [&](const DyckPath& p) {
            sum += std::exp(scale * max_height(p).max_height);
            ++n;
        });
        est.value = sum / static_cast<double>(n);
        est.paths = n;
        return est;
    }
    // Welford over independent uniform samples
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const DyckPath p = sample_dyck_uniform(s, seed + i);
        const double x = std::exp(scale * max_height(p).max_height);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    est.value = mean;
    est.std_error = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                                           static_cast<double>(trials))
                               : 0.0;
    est.exhaustive = false;
    est.paths = trials;
    return est;
}

}  // namespace evenwalks
