#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordcycle/cycles.hpp"
#include "chordcycle/graph.hpp"

namespace chordcycle {

// Ordered bipartition (X, Y) of some of a graph's vertices; the orderings are
// the data the obeys-orderings predicate quantifies over.
struct OrderedBipartition {
    std::vector<int> x;
    std::vector<int> y;
};

// Disjoint nonempty cliques W_1..W_l covering all vertices, each internally
// ordered.
struct CliquePartition {
    std::vector<std::vector<int>> parts;
};

struct WheelShape {
    int center;
    std::vector<int> rim;  // cyclic order
};

// g == C_{n-1} v K_1? Returns the center and rim order when so.
std::optional<WheelShape> is_wheel(const Graph& g);

struct EllHoledResult {
    bool holds = false;
    bool no_holes = false;                      // failed because g is chordal
    std::optional<CycleWitness> violating_hole;  // a hole of length != ell
    explicit operator bool() const { return holds; }
};

// Every hole has length exactly ell. The strict reading requires at least one
// hole: a chordal graph is vacuously l-holed for every l, which would make
// hole-structure scans meaningless; pass allow_vacuous to get that reading.
EllHoledResult is_ell_holed(const Graph& g, int ell, bool allow_vacuous = false);

// Perfect-elimination-ordering test (maximum cardinality search).
bool is_chordal(const Graph& g);

// For an edge e of a cycle c in a chordal graph, some third cycle vertex
// forms a triangle with e. Throws when the preconditions fail.
int chordal_edge_triangle(const Graph& g, const CycleWitness& c, Edge e);

// No induced two-edge matching between X and Y. Requires every edge of g to
// run between X and Y.
bool is_half_graph(const Graph& g, const OrderedBipartition& b);

// Every x_i' y_j' edge forces all x_i y_j with i <= i', j <= j'; equivalently
// each vertex sees an initial segment of the other side.
bool obeys_orderings(const Graph& g, const OrderedBipartition& b);

// G[X, Y u Z] is a half-graph, for disjoint cliques X, Y, Z of g.
bool are_compatible(const Graph& g, const std::vector<int>& x, const std::vector<int>& y,
                    const std::vector<int>& z);

struct BlowupCheck {
    bool ok = false;
    int violated_condition = 0;  // 1..4 when !ok
    std::string detail;
    std::vector<int> witness;  // offending vertices
    explicit operator bool() const { return ok; }
};

// Checks Definition-of-blow-up conditions against a supplied partition:
// (1) parts are nonempty cliques, (2) consecutive boundaries are half-graphs,
// (3) edges only between cyclically consecutive parts, (4) the two boundaries
// of each part are compatible. Throws when parts do not partition V.
BlowupCheck verify_blowup_of_cycle(const Graph& g, const CliquePartition& p);

// Some minimum-size clique whose removal disconnects g, or nullopt.
std::optional<VertexSet> find_clique_cutset(const Graph& g);

std::optional<int> find_universal_vertex(const Graph& g);

}  // namespace chordcycle
