#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chordcycle/cycles.hpp"
#include "chordcycle/graph.hpp"
#include "chordcycle/recognizers.hpp"

namespace chordcycle {

// Rooted tree with every edge directed away from the apex (equivalently, no
// two edges share a head). Leaves are the outdegree-zero non-apex nodes.
class Arborescence {
public:
    // parent[v] = head-side predecessor of v; exactly one node (the apex) has
    // parent -1. Throws unless this encodes a single tree rooted at the apex.
    explicit Arborescence(std::vector<int> parent);

    int node_count() const { return static_cast<int>(parent_.size()); }
    int apex() const { return apex_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    std::vector<int> leaves() const;
    int depth(int v) const;

    // True iff some directed path contains u then v (u strictly above v).
    bool is_strict_ancestor(int u, int v) const;

    // Leaf nodes reachable from v by directed paths (v itself if a leaf).
    std::vector<int> leaf_descendants(int v) const;

    static Arborescence star(int leaf_count);          // apex 0, leaves 1..leaf_count
    static Arborescence directed_path(int node_count);  // apex 0 -> 1 -> ...

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    int apex_ = -1;
};

// Undirected graph on V(T): u ~ v iff one is a strict ancestor of the other.
Graph transitive_closure(const Arborescence& t);

// Does t live in the tree s? s's vertex i stands for the t-leaf
// leaf_of_s[i]; requires that correspondence to be a bijection with L(t).
// True iff every node's leaf-descendant set induces a subtree of s.
bool lives_in(const Arborescence& t, const Graph& s, const std::vector<int>& leaf_of_s);

struct CoarborealResult {
    bool coarboreal = false;
    std::optional<Graph> common_tree;  // vertex i <-> leaf_labels[i] of t1
    std::vector<int> leaf_labels;
    explicit operator bool() const { return coarboreal; }
};

// Brute search over all labeled trees on L(t1) (guarded to at most 8 leaves)
// for one in which t1 lives and t2 lives under the bijection phi: L(t1)->L(t2).
CoarborealResult coarboreal(const Arborescence& t1, const Arborescence& t2,
                            const std::map<int, int>& phi);

// C_rim joined to one extra center vertex (ids: rim 0..rim-1, center rim).
Graph wheel(int rim);

// Clique sizes plus one monotone "staircase" profile per cyclic boundary.
// boundaries[i][a] = how many initial vertices of part i+1 the a-th vertex of
// part i is joined to; an empty profile means the boundary is complete.
struct BlowupCycleSpec {
    int ell = 0;
    std::vector<int> sizes;
    std::vector<std::vector<int>> boundaries;
};

struct BlowupCycleResult {
    Graph graph;
    CliquePartition partition;
};

// Builds the graph and re-verifies all four blow-up conditions before
// returning; a spec that produces an incompatible boundary is rejected.
BlowupCycleResult blowup_of_cycle(const BlowupCycleSpec& spec);

// Random valid spec: every boundary's first vertex is complete to the next
// part (so all cross degrees stay positive), remaining rows random staircases.
BlowupCycleSpec random_blowup_spec(int ell, int max_vertices, std::mt19937& rng);

// One tent of a framework: an arborescence whose apex sits on a_i (upper) or
// b_i (lower) and whose leaves are a consecutive run of path endpoints.
// `shape` is a parent array over local nodes -- node 0 the apex, leaves in
// ascending node order matching base_indices -- and empty means a star.
struct TentSpec {
    int apex_index = 0;
    std::vector<int> base_indices;
    std::vector<int> shape_parent;
};

struct FrameworkSpec {
    int ell = 7;
    int k = 2;
    int m = 0;
    std::vector<TentSpec> upper_tents;
    std::vector<TentSpec> lower_tents;
    // Clique size per blown-up vertex, keyed by name ("a3", "b1", "p2.1");
    // only vertices on the vertical paths may exceed size one.
    std::map<std::string, int> blow_sizes;
    // Optional staircase overrides for boundaries that are not forced
    // complete, keyed "t|t'"; values are prefix counts as in BlowupCycleSpec.
    std::map<std::string, std::vector<int>> boundary_profiles;

    bool odd() const { return ell % 2 == 1; }
};

// The restricted family synthesized directly: star tents, m = 0, clique size
// 2 on each path vertex next to a_i (the least blow-up reaching min degree 3).
FrameworkSpec canonical_framework_spec(int ell, int k);

struct FrameworkGraph {
    FrameworkSpec spec;
    Graph base;                              // D = closure(T) u closure(S) u paths
    Graph graph;                             // the blow-up G
    std::vector<std::string> names;          // base vertex -> name
    std::vector<std::vector<int>> cliques;   // base vertex t -> W_t (t first)
    std::vector<int> upper_parent;           // T as parent map over base ids (-2 = not in T)
    std::vector<int> lower_parent;           // S likewise

    int vertex(const std::string& name) const;  // throws on unknown name
    int a(int i) const { return vertex("a" + std::to_string(i)); }
    int b(int i) const { return vertex("b" + std::to_string(i)); }
    int path_vertex(int i, int j) const {
        return vertex("p" + std::to_string(i) + "." + std::to_string(j));
    }
    int path_length() const;      // edges per vertical path P_i (odd case)
    int path_length(int i) const; // per-path (even case lengths differ)
};

// Builds D and the blow-up, then validates: the result must be ell-holed,
// with the violating hole reported otherwise.
FrameworkGraph framework(const FrameworkSpec& spec);

// The explicit length >= ell+2 cycle through P_k and P_{k-1}, using one extra
// clique vertex next to a_k and one next to a_{k-1}; re-validated before
// returning. Requires those two cliques to have size at least 2.
CycleWitness framework_witness_cycle(const FrameworkGraph& fg);

}  // namespace chordcycle
