#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "chordcycle/cycles.hpp"
#include "chordcycle/generators.hpp"
#include "chordcycle/graph.hpp"
#include "chordcycle/recognizers.hpp"
#include "fixtures.hpp"

using namespace chordcycle;

TEST_CASE("is_wheel") {
    auto k4 = is_wheel(Graph::complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->rim.size() == 3);

    CHECK(!is_wheel(Graph::cycle(6)).has_value());
    CHECK(!is_wheel(fixtures::petersen()).has_value());
    CHECK(!is_wheel(Graph::complete(5)).has_value());  // K5 - center leaves K4, not a cycle

    Graph w6 = join(Graph::cycle(6), Graph::empty(1));
    auto w = is_wheel(w6);
    REQUIRE(w.has_value());
    CHECK(w->center == 6);
    REQUIRE(w->rim.size() == 6);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(w6.adjacent(w->rim[i], w->rim[(i + 1) % 6]));
        CHECK(w6.adjacent(w->center, w->rim[i]));
    }

    for (int r = 3; r <= 12; ++r) CHECK(is_wheel(wheel(r)).has_value());
}

TEST_CASE("wheels have c = n and c' = n - 1") {
    for (int r = 3; r <= 10; ++r) {
        Graph g = wheel(r);
        CHECK(circumference(g)->length() == g.order());
        CHECK(induced_circumference(g)->length() == g.order() - 1);
    }
}

TEST_CASE("is_ell_holed") {
    CHECK(is_ell_holed(Graph::cycle(7), 7).holds);
    CHECK(!is_ell_holed(Graph::cycle(7), 6).holds);

    auto pet = is_ell_holed(fixtures::petersen(), 5);
    CHECK(!pet.holds);
    REQUIRE(pet.violating_hole.has_value());
    CHECK(pet.violating_hole->length() == 6);

    auto chordal = is_ell_holed(Graph::complete(4), 5);
    CHECK(!chordal.holds);
    CHECK(chordal.no_holes);
    CHECK(is_ell_holed(Graph::complete(4), 5, /*allow_vacuous=*/true).holds);

    CHECK_THROWS_AS(is_ell_holed(Graph::cycle(5), 3), std::invalid_argument);
}

TEST_CASE("is_chordal on named graphs") {
    CHECK(is_chordal(Graph::complete(5)));
    CHECK(is_chordal(Graph::path(6)));
    CHECK(is_chordal(Graph::empty(3)));
    CHECK(!is_chordal(Graph::cycle(4)));
    CHECK(!is_chordal(fixtures::petersen()));
    CHECK(is_chordal(fixtures::three_k4_shared_edge()));

    std::mt19937 rng(19);
    for (int iter = 0; iter < 200; ++iter)
        CHECK(is_chordal(fixtures::random_chordal(10, rng)));
}

TEST_CASE("is_chordal iff no holes, exhaustively to n = 6 and on random 8-vertex graphs") {
    for (int n = 1; n <= 6; ++n)
        fixtures::for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(is_chordal(g) == enumerate_holes(g, std::max(4, n)).empty());
        });
    std::mt19937 rng(37);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = fixtures::random_graph(8, 0.45, rng);
        CHECK(is_chordal(g) == enumerate_holes(g, 8).empty());
    }
}

TEST_CASE("chordal_edge_triangle") {
    Graph k4 = Graph::complete(4);
    CycleWitness c{{0, 1, 2, 3}, false};
    int w = chordal_edge_triangle(k4, c, {0, 1});
    CHECK((w == 2 || w == 3));
    CHECK(k4.adjacent(w, 0));
    CHECK(k4.adjacent(w, 1));

    Graph tri = Graph::complete(3);
    CHECK(chordal_edge_triangle(tri, CycleWitness{{0, 1, 2}, true}, {0, 1}) == 2);

    CHECK_THROWS_AS(chordal_edge_triangle(Graph::cycle(4), CycleWitness{{0, 1, 2, 3}, false}, {0, 1}),
                    std::invalid_argument);  // not chordal
    CHECK_THROWS_AS(chordal_edge_triangle(k4, c, {0, 2}), std::invalid_argument);  // chord, not cycle edge
    // (0,2) is the closing edge of the triangle 0-1-2, so it does qualify
    CHECK(chordal_edge_triangle(k4, CycleWitness{{0, 1, 2}, false}, {0, 2}) == 1);
}

TEST_CASE("chordal_edge_triangle holds for every cycle and edge of random chordal graphs") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = fixtures::random_chordal(9, rng);
        REQUIRE(is_chordal(g));
        // enumerate all cycles by brute DFS
        const int n = g.order();
        std::vector<int> path;
        std::vector<bool> used(n, false);
        int cycles_seen = 0;
        std::function<void(int, int)> rec = [&](int start, int head) {
            const VertexSet& nb = g.neighbors(head);
            for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                if (v == start && path.size() >= 3) {
                    ++cycles_seen;
                    CycleWitness c = make_cycle_witness(path, false);
                    for (size_t i = 0; i < c.vertices.size(); ++i) {
                        Edge e{c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]};
                        int w = chordal_edge_triangle(g, c, e);
                        CHECK(g.adjacent(w, e.first));
                        CHECK(g.adjacent(w, e.second));
                        CHECK(std::find(c.vertices.begin(), c.vertices.end(), w) != c.vertices.end());
                    }
                }
                if (v <= start || used[v] || path.size() >= 7) continue;
                used[v] = true;
                path.push_back(v);
                rec(start, v);
                path.pop_back();
                used[v] = false;
            }
        };
        for (int s = 0; s < n; ++s) {
            path.assign(1, s);
            used.assign(n, false);
            used[s] = true;
            rec(s, s);
        }
        (void)cycles_seen;
    }
}

namespace {

// Quantifier-level half-graph oracle: some induced two-edge matching?
bool brute_half_graph(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs)
        for (int x2 : xs)
            for (int y : ys)
                for (int y2 : ys) {
                    if (x == x2 || y == y2) continue;
                    if (g.adjacent(x, y) && g.adjacent(x2, y2) && !g.adjacent(x, y2) &&
                        !g.adjacent(x2, y))
                        return false;
                }
    return true;
}

Graph bipartite_from_mask(int nx, int ny, uint32_t mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if ((mask >> (i * ny + j)) & 1) edges.emplace_back(i, nx + j);
    return Graph::from_edge_list(nx + ny, edges);
}

}  // namespace

TEST_CASE("is_half_graph") {
    // K_{2,2}
    Graph k22 = Graph::complete_bipartite(2, 2);
    OrderedBipartition b{{0, 1}, {2, 3}};
    CHECK(is_half_graph(k22, b));

    // perfect matching on 2+2: the forbidden pattern itself
    Graph match = Graph::from_edge_list(4, {{0, 2}, {1, 3}});
    CHECK(!is_half_graph(match, b));

    // star-like: x1y1, x1y2, x2y1
    Graph star = Graph::from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}});
    CHECK(is_half_graph(star, b));

    Graph stray = Graph::from_edge_list(4, {{0, 1}});
    CHECK_THROWS_AS(is_half_graph(stray, b), std::invalid_argument);
    CHECK_THROWS_AS(is_half_graph(k22, OrderedBipartition{{0, 1}, {1, 3}}), std::invalid_argument);

    // exhaustive agreement with the 4-vertex quantifier on all 3x3 bipartite graphs
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
        Graph g = bipartite_from_mask(3, 3, mask);
        OrderedBipartition bb{{0, 1, 2}, {3, 4, 5}};
        CHECK(is_half_graph(g, bb) == brute_half_graph(g, bb.x, bb.y));
    }
}

TEST_CASE("obeys_orderings") {
    Graph k22 = Graph::complete_bipartite(2, 2);
    CHECK(obeys_orderings(k22, {{0, 1}, {2, 3}}));
    CHECK(obeys_orderings(k22, {{1, 0}, {3, 2}}));

    Graph skip = Graph::from_edge_list(4, {{1, 2}});  // x2y1 without x1y1
    CHECK(!obeys_orderings(skip, {{0, 1}, {2, 3}}));
    CHECK(obeys_orderings(skip, {{1, 0}, {2, 3}}));  // reorder repairs it

    Graph stair = Graph::from_edge_list(5, {{0, 3}, {0, 4}, {1, 3}});  // x1y1 x1y2 x2y1
    CHECK(obeys_orderings(stair, {{0, 1, 2}, {3, 4}}));

    // obeys-orderings implies half-graph; direct quantifier agreement
    std::mt19937 rng(61);
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
        Graph g = bipartite_from_mask(3, 3, mask);
        OrderedBipartition bb{{0, 1, 2}, {3, 4, 5}};
        bool obeys = obeys_orderings(g, bb);
        bool quant = true;
        for (int i = 0; i < 3 && quant; ++i)
            for (int i2 = i; i2 < 3 && quant; ++i2)
                for (int j = 0; j < 3 && quant; ++j)
                    for (int j2 = j; j2 < 3 && quant; ++j2)
                        if (g.adjacent(bb.x[i2], bb.y[j2]) && !g.adjacent(bb.x[i], bb.y[j]))
                            quant = false;
        CHECK(obeys == quant);
        if (obeys) CHECK(is_half_graph(g, bb));
    }
}

TEST_CASE("half-graph stays half under ordering-consistent edge additions") {
    std::mt19937 rng(67);
    for (int iter = 0; iter < 200; ++iter) {
        // build a random staircase (obeys-orderings by construction)
        int nx = 3, ny = 3;
        std::vector<int> prefix(nx);
        prefix[0] = std::uniform_int_distribution<int>(0, ny)(rng);
        for (int i = 1; i < nx; ++i)
            prefix[i] = std::uniform_int_distribution<int>(0, prefix[i - 1])(rng);
        std::vector<Edge> edges;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < prefix[i]; ++j) edges.emplace_back(i, nx + j);
        Graph g = Graph::from_edge_list(nx + ny, edges);
        OrderedBipartition bb{{0, 1, 2}, {3, 4, 5}};
        REQUIRE(obeys_orderings(g, bb));
        REQUIRE(is_half_graph(g, bb));
        // add one edge that keeps obeys-orderings; the result must stay half
        for (int i = 0; i < nx; ++i) {
            if (prefix[i] >= ny) continue;
            if (i > 0 && prefix[i] + 1 > prefix[i - 1]) continue;
            auto e2 = edges;
            e2.emplace_back(i, nx + prefix[i]);
            Graph h = Graph::from_edge_list(nx + ny, e2);
            if (obeys_orderings(h, bb)) CHECK(is_half_graph(h, bb));
        }
    }
}

TEST_CASE("are_compatible") {
    // singletons with both cross edges
    Graph g1 = Graph::from_edge_list(3, {{0, 1}, {0, 2}});
    CHECK(are_compatible(g1, {0}, {1}, {2}));

    // x-x' clique, y-x, x'-z: the induced four-vertex path
    Graph g2 = Graph::from_edge_list(4, {{0, 1}, {2, 0}, {1, 3}});
    CHECK(!are_compatible(g2, {0, 1}, {2}, {3}));

    CHECK_THROWS_AS(are_compatible(g2, {0, 2}, {1}, {3}), std::invalid_argument);  // X not a clique
    Graph g3 = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_AS(are_compatible(g3, {0}, {1}, {1}), std::invalid_argument);  // overlap
}

TEST_CASE("compatibility equals the no-P4 criterion for anticomplete Y, Z (exhaustive |X|,|Y|,|Z| <= 3)") {
    // X = clique {0..nx-1}, Y = clique, Z = clique, Y-Z anticomplete; scan all
    // cross-adjacency patterns X-Y and X-Z.
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny)
            for (int nz = 1; nz <= 3; ++nz) {
                const int xy_bits = nx * ny, xz_bits = nx * nz;
                if (xy_bits + xz_bits > 12) continue;  // keep the scan quick
                for (uint32_t code = 0; code < (1u << (xy_bits + xz_bits)); ++code) {
                    std::vector<Edge> edges;
                    auto clique = [&](int base, int cnt) {
                        for (int i = 0; i < cnt; ++i)
                            for (int j = i + 1; j < cnt; ++j) edges.emplace_back(base + i, base + j);
                    };
                    clique(0, nx);
                    clique(nx, ny);
                    clique(nx + ny, nz);
                    for (int i = 0; i < nx; ++i)
                        for (int j = 0; j < ny; ++j)
                            if ((code >> (i * ny + j)) & 1) edges.emplace_back(i, nx + j);
                    for (int i = 0; i < nx; ++i)
                        for (int j = 0; j < nz; ++j)
                            if ((code >> (xy_bits + i * nz + j)) & 1)
                                edges.emplace_back(i, nx + ny + j);
                    Graph g = Graph::from_edge_list(nx + ny + nz, edges);
                    std::vector<int> X, Y, Z;
                    for (int i = 0; i < nx; ++i) X.push_back(i);
                    for (int j = 0; j < ny; ++j) Y.push_back(nx + j);
                    for (int j = 0; j < nz; ++j) Z.push_back(nx + ny + j);
                    // no-P4 criterion: y - x - x' - z induced
                    bool p4 = false;
                    for (int x : X)
                        for (int x2 : X) {
                            if (x == x2) continue;
                            for (int y : Y)
                                for (int z : Z)
                                    if (g.adjacent(y, x) && g.adjacent(x2, z) && !g.adjacent(y, x2) &&
                                        !g.adjacent(x, z))
                                        p4 = true;
                        }
                    CHECK(are_compatible(g, X, Y, Z) == !p4);
                }
            }
}

TEST_CASE("verify_blowup_of_cycle") {
    // C7 with singleton parts
    Graph c7 = Graph::cycle(7);
    CliquePartition p7;
    for (int i = 0; i < 7; ++i) p7.parts.push_back({i});
    CHECK(verify_blowup_of_cycle(c7, p7).ok);

    // C7 plus a chord: condition 3
    Graph c7c = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
    auto bad = verify_blowup_of_cycle(c7c, p7);
    CHECK(!bad.ok);
    CHECK(bad.violated_condition == 3);

    // non-clique part: condition 1
    Graph c8 = Graph::cycle(8);
    CliquePartition p8;
    p8.parts = {{0, 4}, {1, 2}, {3}, {5}, {6, 7}};
    CHECK_THROWS_AS(verify_blowup_of_cycle(Graph::cycle(4), CliquePartition{{{0}, {1}, {2}}}),
                    std::invalid_argument);  // not a partition of V(C4)
    CliquePartition p4bad;
    p4bad.parts = {{0, 2}, {1}, {3}, {}};
    CHECK_THROWS_AS(verify_blowup_of_cycle(Graph::cycle(4), CliquePartition{{{0, 2}, {1}, {3}}}),
                    std::invalid_argument);  // 3 parts only
    auto res = verify_blowup_of_cycle(Graph::cycle(4),
                                      CliquePartition{{{0, 2}, {1}, {3}, {}}});
    CHECK(!res.ok);
    CHECK(res.violated_condition == 1);

    // half-graph violation: condition 2 with a two-edge-matching witness
    // parts {0,1}, {2,3}, {4}, {5}; edges 0-2, 1-3 crossing, plus the ring
    Graph m = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 0}, {5, 1}});
    CliquePartition pm;
    pm.parts = {{0, 1}, {2, 3}, {4}, {5}};
    auto half = verify_blowup_of_cycle(m, pm);
    CHECK(!half.ok);
    CHECK(half.violated_condition == 2);
    CHECK(half.witness.size() == 4);
}

TEST_CASE("find_clique_cutset") {
    // two triangles sharing an edge: the shared edge is a 2-clique cutset
    Graph diamond_ext = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    auto cut = find_clique_cutset(diamond_ext);
    REQUIRE(cut.has_value());
    CHECK(cut->size() == 2);
    CHECK(components_minus(diamond_ext, *cut).size() == 2);

    CHECK(!find_clique_cutset(Graph::cycle(6)).has_value());
    CHECK(!find_clique_cutset(fixtures::petersen()).has_value());
    CHECK(!find_clique_cutset(Graph::complete(5)).has_value());

    // cut vertex = clique cutset of size 1
    Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto cv = find_clique_cutset(bowtie);
    REQUIRE(cv.has_value());
    CHECK(cv->size() == 1);
    CHECK(cv->contains(2));

    CHECK_THROWS_AS(find_clique_cutset(Graph::empty(25)), std::invalid_argument);
}

TEST_CASE("find_universal_vertex") {
    CHECK(find_universal_vertex(wheel(6)) == 6);
    CHECK(!find_universal_vertex(Graph::cycle(6)).has_value());
    CHECK(find_universal_vertex(Graph::complete(4)) == 0);
    CHECK(find_universal_vertex(Graph::empty(1)) == 0);
}
