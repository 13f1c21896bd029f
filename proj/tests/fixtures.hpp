#pragma once

// Shared named graphs and the independent oracles the unit suites check the
// library against. Everything here is deliberately written the dumb way.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chordcycle/graph.hpp"

namespace fixtures {

inline chordcycle::Graph petersen() {
    using chordcycle::Edge;
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return chordcycle::Graph::from_edge_list(10, edges);
}

// Three K4's sharing one common edge: chordal, 2-connected, min degree 3,
// non-hamiltonian. Vertices 0,1 shared; pairs (2,3), (4,5), (6,7) private.
inline chordcycle::Graph three_k4_shared_edge() {
    using chordcycle::Edge;
    std::vector<Edge> edges{{0, 1}};
    for (int b = 0; b < 3; ++b) {
        int u = 2 + 2 * b, v = 3 + 2 * b;
        edges.emplace_back(u, v);
        for (int x : {0, 1}) {
            edges.emplace_back(x, u);
            edges.emplace_back(x, v);
        }
    }
    return chordcycle::Graph::from_edge_list(8, edges);
}

// A C5 with a private K4 glued on each cycle vertex: c = c' = 5, min degree
// 3, non-hamiltonian, but full of cut vertices.
inline chordcycle::Graph c5_with_k4_gadgets() {
    using chordcycle::Edge;
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    int next = 5;
    for (int i = 0; i < 5; ++i) {
        int a = next++, b = next++, c = next++;
        for (int x : {a, b, c}) edges.emplace_back(i, x);
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(b, c);
    }
    return chordcycle::Graph::from_edge_list(next, edges);
}

// Independent graph6 encoder used as the codec oracle: builds the bit vector
// explicitly, then packs 6 at a time.
inline std::string oracle_graph6(const chordcycle::Graph& g) {
    const int n = g.order();
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.adjacent(row, col) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    std::string out(1, static_cast<char>(n + 63));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int j = 0; j < 6; ++j) v = v * 2 + bits[i + j];
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

inline chordcycle::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<chordcycle::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return chordcycle::Graph::from_edge_list(n, edges);
}

// Random connected chordal graph: take a random tree, then repeatedly pick a
// vertex and complete a sub-neighborhood... simplest sound recipe: build by
// simplicial additions (each new vertex joined to a random clique of the
// current graph), which generates exactly the chordal graphs.
inline chordcycle::Graph random_chordal(int n, std::mt19937& rng) {
    chordcycle::GraphBuilder b(n);
    std::vector<std::vector<int>> cliques{{0}};
    for (int v = 1; v < n; ++v) {
        const auto& base = cliques[std::uniform_int_distribution<size_t>(0, cliques.size() - 1)(rng)];
        // join v to a random nonempty subset of a maximal clique, kept a clique
        std::vector<int> sub;
        for (int w : base)
            if (std::bernoulli_distribution(0.7)(rng)) sub.push_back(w);
        if (sub.empty()) sub.push_back(base[std::uniform_int_distribution<size_t>(0, base.size() - 1)(rng)]);
        for (int w : sub) b.add_edge(v, w);
        sub.push_back(v);
        cliques.push_back(std::move(sub));
    }
    return b.build();
}

// Exhaustive labeled-graph scan on n vertices (n <= 6 is practical): calls fn
// for every one of the 2^(n(n-1)/2) labeled graphs.
template <typename F>
inline void for_each_labeled_graph(int n, F&& fn) {
    const int bits = n * (n - 1) / 2;
    for (uint64_t code = 0; code < (1ULL << bits); ++code) {
        std::vector<chordcycle::Edge> edges;
        int b = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++b)
                if ((code >> b) & 1) edges.emplace_back(row, col);
        fn(chordcycle::Graph::from_edge_list(n, edges));
    }
}

// Brute isomorphism-class counter: minimize the adjacency code over all n!
// permutations. Independent of the library's canonical form.
inline uint64_t brute_min_code(const chordcycle::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ULL;
    do {
        uint64_t code = 0;
        int b = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++b)
                if (g.adjacent(perm[row], perm[col])) code |= 1ULL << b;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace fixtures
