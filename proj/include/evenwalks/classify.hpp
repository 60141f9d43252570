#pragma once

#include <map>
#include <string>
#include <vector>

#include "evenwalks/walk.hpp"

namespace evenwalks {

/// Arrival openness: the arriving vertex touches an edge with odd
/// multiplicity just before the arrival. The head/tail tag records whether
/// some traversal of an open edge points into or out of the vertex.
enum class Openness { closed, open_head, open_tail, open_both };

/// Openness rules: `parity` accepts any odd edge at the vertex; `first_edge`
/// requires the first-arrival edge itself to be untouched since creation.
enum class OpennessRule { parity, first_edge };

struct OpenArrival {
    int time = 0;
    int vertex = 0;
    Openness type = Openness::closed;
};

struct SelfIntersectionProfile {
    std::map<int, int> kappa;       // per vertex; the root's t=0 arrival adds 1
    std::vector<long> nu;           // nu[k] = #vertices with kappa == k, k <= s+1
    long nu1_norm = 0;              // sum (k-1) nu_k over k >= 2
    long nu2_norm = 0;              // sum (k-2) nu_k over k >= 2
    std::vector<OpenArrival> open_arrivals;
    std::map<int, int> exit_degree;
    int max_exit_degree = 0;
    int max_edge_multiplicity = 0;
    int open_simple = 0;            // kappa == 2 vertices with an open marked arrival
    int open_triple_arrivals = 0;   // open marked arrivals at kappa == 3 vertices
    int loop_steps = 0;
    int root_marked_arrivals = 0;

    long sum_k_nu() const;
    std::string nu_signature() const;  // "k:count" pairs for k >= 2, ordered
};

/// Marked arrivals at v, plus one for the root's arrival at the origin.
int kappa(const Walk& walk, int v);
int kappa(const WalkGraph& graph, int root, int v);

SelfIntersectionProfile classify_walk(const Walk& walk,
                                      OpennessRule rule = OpennessRule::parity);
SelfIntersectionProfile classify_walk(const Walk& walk, const WalkGraph& graph,
                                      OpennessRule rule = OpennessRule::parity);

/// Openness of the marked arrival at time t; throws when step t is not a
/// marked arrival.
Openness arrival_openness(const WalkGraph& graph, int t,
                          OpennessRule rule = OpennessRule::parity);
bool is_open_arrival(const Walk& walk, int t, OpennessRule rule = OpennessRule::parity);

enum class SimpleKind { same_direction, reversed_closure, other };

/// Kind of a two-fold self-intersection at a non-root vertex: the second
/// marked arrival repeats the first arrival's oriented edge
/// (same_direction), or closes an existing marked edge in reverse
/// (reversed_closure).
SimpleKind classify_simple(const Walk& walk, int v);

/// Marked edges attached to v whose non-oriented edge is odd at time t.
int count_open_marked_edges(const Walk& walk, int v, int t);
int count_open_marked_edges(const WalkGraph& graph, int v, int t);

/// Non-marked steps with tail v; equals the number of marked arrivals at v
/// for every even closed walk (loop steps count on both sides).
int non_marked_exits(const WalkGraph& graph, int v);

}  // namespace evenwalks
