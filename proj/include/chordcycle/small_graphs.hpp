#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chordcycle/graph.hpp"

namespace chordcycle {

// Dense bitmask view of a graph on at most 16 vertices; the working
// representation for exhaustive enumeration and canonical forms.
struct MaskGraph {
    int n = 0;
    std::array<uint16_t, 16> rows{};

    bool adjacent(int u, int v) const { return (rows[u] >> v) & 1; }
    void add_edge(int u, int v) {
        rows[u] |= static_cast<uint16_t>(1u << v);
        rows[v] |= static_cast<uint16_t>(1u << u);
    }
    int degree(int v) const;
};

MaskGraph to_mask_graph(const Graph& g);
Graph from_mask_graph(const MaskGraph& g);

// Upper-triangle bitstring under the identity labeling, column-major like
// graph6: x(0,1), x(0,2), x(1,2), x(0,3), ... with the first pair as the most
// significant of the n(n-1)/2 used bits. Fits in 64 bits for n <= 11.
uint64_t identity_key(const MaskGraph& g);
MaskGraph mask_from_key(int n, uint64_t key);

// Minimum identity_key over all relabelings; equal exactly for isomorphic
// graphs. Backtracking with prefix pruning and twin skipping.
uint64_t canonical_key(const MaskGraph& g);
uint64_t canonical_key(const Graph& g);

// graph6 line of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

struct GraphFilter {
    int min_degree = 0;
    int connectivity = 0;  // required vertex connectivity, 0..3

    bool passes(const MaskGraph& g) const;
    std::string id_fragment() const;
    bool operator==(const GraphFilter&) const = default;
};

// Exhaustive generator of all non-isomorphic graphs of a given order, by
// augmenting every (n-1)-vertex graph with one new vertex and rejecting
// isomorphs via canonical keys. Orders above the guard must come from
// external graph6 streams instead.
class SmallGraphEnumerator {
public:
    static constexpr int kDefaultMaxOrder = 11;

    explicit SmallGraphEnumerator(int max_order_guard = kDefaultMaxOrder)
        : guard_(max_order_guard) {}

    int max_order() const { return guard_; }

    // Every isomorphism class of order n, as sorted canonical keys. Cached.
    const std::vector<uint64_t>& all_graphs(int n, int jobs = 1);

    // Isomorphism classes of order n passing the filter, sorted. Built from
    // the cached full population of order n-1; not cached itself.
    std::vector<uint64_t> filtered_graphs(int n, const GraphFilter& f, int jobs = 1);

private:
    std::vector<uint64_t> generate(int n, const GraphFilter* f, int jobs);

    int guard_;
    std::map<int, std::vector<uint64_t>> cache_;
};

}  // namespace chordcycle
