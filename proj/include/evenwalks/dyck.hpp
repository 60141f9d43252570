#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evenwalks/numeric.hpp"

namespace evenwalks {

/// Nonnegative balanced lattice path of 2s steps, stored as bits
/// (1 = ascending step, 0 = descending step).
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<std::uint8_t> steps);

    static DyckPath from_string(const std::string& bits);
    std::string to_string() const;

    int half_length() const { return static_cast<int>(steps_.size() / 2); }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<std::uint8_t>& steps() const { return steps_; }
    bool ascending(int t) const { return steps_[static_cast<std::size_t>(t - 1)] != 0; }

    /// Height after the first t steps.
    int height(int t) const;

    bool operator==(const DyckPath& other) const { return steps_ == other.steps_; }
    bool operator<(const DyckPath& other) const;  // canonical order, 1 < 0 at each branch

private:
    std::vector<std::uint8_t> steps_;
};

struct HeightStat {
    int max_height = 0;
    int argmax = 0;  // earliest instant attaining the maximum
};

/// Rooted ordered tree with s+1 vertices; vertex 0 is the root. The edge to
/// vertex created_order(tau) carries creation index tau in depth-first order.
struct PlaneTree {
    std::vector<std::vector<int>> children;  // ordered child lists
    std::vector<int> parent;                 // parent[0] == -1
    std::vector<int> edge_child;             // edge_child[tau-1] = child vertex of edge tau

    int vertex_count() const { return static_cast<int>(children.size()); }
    int edge_count() const { return static_cast<int>(edge_child.size()); }
    int exit_degree(int v) const { return static_cast<int>(children[static_cast<std::size_t>(v)].size()); }
    int max_exit_degree() const;
};

BigInt catalan(unsigned s);

/// Visit all Dyck paths of 2s steps in canonical order.
void for_each_dyck(int s, const std::function<void(const DyckPath&)>& fn);

/// All Dyck paths of 2s steps in canonical order; checks the count against
/// max_paths before enumerating.
std::vector<DyckPath> enumerate_dyck(int s, std::uint64_t max_paths = 5'000'000);

HeightStat max_height(const DyckPath& path);

PlaneTree tree_of(const DyckPath& path);
DyckPath contour_of(const PlaneTree& tree);

/// True when some vertex of tree_of(path) has at least m children.
bool has_L_property(const DyckPath& path, int m);

/// Number of Dyck paths of 2s steps whose tree has a vertex of exit degree >= m.
BigInt count_L_property(int s, int m, std::uint64_t max_paths = 5'000'000);

/// Census bound 2*s*catalan(s)*(3/4)^m; the weaker variant uses s^2*catalan(s)*(3/4)^m.
Rational l_property_bound(int s, int m, bool weak_variant = false);

/// Exactly uniform over Dyck paths of 2s steps (cycle-lemma rotation of a
/// shuffled balanced sequence); deterministic for a fixed seed.
DyckPath sample_dyck_uniform(int s, std::uint64_t seed);

struct BEstimate {
    double value = 0.0;
    double std_error = 0.0;  // 0 for exhaustive evaluation
    bool exhaustive = true;
    std::uint64_t paths = 0;  // paths visited or samples drawn
};

enum class BMode { exhaustive, sampled };

/// Mean of exp(lambda * max_height / sqrt(s)) over Dyck paths of 2s steps.
BEstimate estimate_B(int s, double lambda, BMode mode = BMode::exhaustive,
                     std::uint64_t trials = 100'000, std::uint64_t seed = 1,
                     std::uint64_t max_paths = 5'000'000);

}  // namespace evenwalks
