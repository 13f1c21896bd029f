#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chordcycle/graph.hpp"

namespace chordcycle {

// An ordered vertex sequence certifying a cycle (closing edge implied).
// Witnesses are kept in canonical form: the smallest vertex first, and the
// second vertex is the smaller of its two cycle neighbors, so equal cycles
// compare equal and ties can be broken lexicographically.
struct CycleWitness {
    std::vector<int> vertices;
    bool chordless = false;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
};

// Canonical rotation/reflection of an arbitrary cyclic vertex sequence.
CycleWitness make_cycle_witness(std::vector<int> cycle, bool chordless);

// True iff w is a genuine cycle of g: length >= 3, distinct vertices,
// consecutive (cyclic) adjacency, and, when flagged chordless, no adjacency
// between non-consecutive vertices.
bool validate_cycle(const Graph& g, const CycleWitness& w);

// Longest cycle with witness; nullopt on forests. Branch-and-bound DFS path
// extension; the bound is |path| + vertices still reachable from the head.
// Among equal-length longest cycles the lexicographically least canonical
// witness is returned.
std::optional<CycleWitness> circumference(const Graph& g);

// Longest chordless cycle (triangles count); nullopt on forests. Backtracking
// over induced paths; ties resolved as above.
std::optional<CycleWitness> induced_circumference(const Graph& g);

// Value-only variants used by scans: same exact lengths, cheaper tie handling.
std::optional<int> circumference_length(const Graph& g);
std::optional<int> induced_circumference_length(const Graph& g);

bool is_hamiltonian(const Graph& g);

// Every chordless cycle of length in [4, max_len], canonical, sorted.
std::vector<CycleWitness> enumerate_holes(const Graph& g, int max_len);

// Visitor form: return false from the callback to stop early.
void visit_holes(const Graph& g, int max_len, const std::function<bool(const CycleWitness&)>& fn);

// All cycles of length exactly c(G), canonical, sorted. Throws on forests.
std::vector<CycleWitness> longest_cycles_all(const Graph& g);

// True iff some non-consecutive pair of cycle vertices is adjacent.
// Throws when c is not a valid cycle of g.
bool has_chord(const Graph& g, const CycleWitness& c);

// Unpruned exhaustive oracles, guarded to n <= 12; these exist to check the
// solvers above and share no search code with them.
std::optional<int> brute_circumference(const Graph& g);
std::optional<int> brute_induced_circumference(const Graph& g);

struct CycleStats {
    std::optional<CycleWitness> longest;            // c(G) witness
    std::optional<CycleWitness> longest_chordless;  // c'(G) witness
    bool hamiltonian = false;

    std::optional<int> c() const {
        return longest ? std::optional<int>(longest->length()) : std::nullopt;
    }
    std::optional<int> c_prime() const {
        return longest_chordless ? std::optional<int>(longest_chordless->length()) : std::nullopt;
    }
};

CycleStats cycle_stats(const Graph& g);

}  // namespace chordcycle
