#include "chordcycle/recognizers.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordcycle {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_in_range(const Graph& g, const std::vector<int>& vs, const char* what) {
    for (int v : vs)
        if (v < 0 || v >= g.order()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace

std::optional<WheelShape> is_wheel(const Graph& g) {
    const int n = g.order();
    if (n < 4) return std::nullopt;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != n - 1) continue;
        VertexSet rim = VertexSet::full(n);
        rim.remove(u);
        bool cyclic = true;
        for (int v = rim.first(); v >= 0 && cyclic; v = rim.next(v))
            if (g.degree(v) - 1 != 2) cyclic = false;  // degree inside the rim
        if (!cyclic) continue;
        // Walk the rim from its smallest vertex toward its smaller neighbor.
        const int start = rim.first();
        std::vector<int> order{start};
        VertexSet nb = g.neighbors(start) & rim;
        int prev = start, cur = nb.first();
        while (cur != start) {
            order.push_back(cur);
            VertexSet nxt = g.neighbors(cur) & rim;
            nxt.remove(prev);
            prev = cur;
            cur = nxt.first();
        }
        if (static_cast<int>(order.size()) != n - 1) continue;  // rim disconnected
        return WheelShape{u, std::move(order)};
    }
    return std::nullopt;
}

EllHoledResult is_ell_holed(const Graph& g, int ell, bool allow_vacuous) {
    if (ell < 4) throw std::invalid_argument("ell-holed needs ell >= 4");
    EllHoledResult res;
    bool seen_ell = false;
    visit_holes(g, g.order(), [&](const CycleWitness& hole) {
        if (hole.length() == ell) {
            seen_ell = true;
            return true;
        }
        res.violating_hole = hole;
        return false;
    });
    if (res.violating_hole) return res;
    if (!seen_ell) {
        res.no_holes = true;
        res.holds = allow_vacuous;
        return res;
    }
    res.holds = true;
    return res;
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    // Maximum cardinality search, then verify the elimination order.
    std::vector<int> weight(n, 0), pos(n, -1);
    std::vector<int> order(n);
    for (int step = n - 1; step >= 0; --step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (pos[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
        pos[pick] = step;
        order[step] = pick;
        const VertexSet& nb = g.neighbors(pick);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (pos[w] < 0) ++weight[w];
    }
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        // Later neighbors must form a clique around the earliest of them.
        int pivot = -1;
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (pos[w] > i && (pivot < 0 || pos[w] < pos[pivot])) pivot = w;
        if (pivot < 0) continue;
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (pos[w] > pos[pivot] && !g.adjacent(pivot, w)) return false;
    }
    return true;
}

int chordal_edge_triangle(const Graph& g, const CycleWitness& c, Edge e) {
    if (!is_chordal(g)) throw std::invalid_argument("chordal_edge_triangle requires a chordal graph");
    if (!validate_cycle(g, CycleWitness{c.vertices, false}))
        throw std::invalid_argument("chordal_edge_triangle requires a valid cycle");
    const int k = c.length();
    bool edge_of_cycle = false;
    for (int i = 0; i < k && !edge_of_cycle; ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % k];
        if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) edge_of_cycle = true;
    }
    if (!edge_of_cycle) throw std::invalid_argument("e must be an edge of the cycle");
    for (int w : c.vertices) {
        if (w == e.first || w == e.second) continue;
        if (g.adjacent(w, e.first) && g.adjacent(w, e.second)) return w;
    }
    throw std::logic_error("chordal graph yielded no edge triangle; chordality check is broken");
}

namespace {

void validate_bipartition(const Graph& g, const OrderedBipartition& b) {
    require_in_range(g, b.x, "bipartition X");
    require_in_range(g, b.y, "bipartition Y");
    auto xs = sorted_unique(b.x), ys = sorted_unique(b.y);
    if (xs.size() != b.x.size() || ys.size() != b.y.size())
        throw std::invalid_argument("bipartition sides must not repeat vertices");
    std::vector<int> common;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
    if (!common.empty()) throw std::invalid_argument("bipartition sides must be disjoint");
    VertexSet in_x(g.order()), in_y(g.order());
    for (int v : b.x) in_x.add(v);
    for (int v : b.y) in_y.add(v);
    for (const auto& [u, v] : g.edges()) {
        const bool cross = (in_x.contains(u) && in_y.contains(v)) || (in_x.contains(v) && in_y.contains(u));
        if (!cross) throw std::invalid_argument("graph has an edge outside the bipartition");
    }
}

// Neighborhoods on one side of a half-graph are totally ordered by inclusion;
// an incomparable pair yields an induced two-edge matching and vice versa.
bool nested_neighborhoods(const Graph& g, const std::vector<int>& xs, const VertexSet& y_mask) {
    const size_t m = xs.size();
    std::vector<VertexSet> ny;
    ny.reserve(m);
    for (int x : xs) ny.push_back(g.neighbors(x) & y_mask);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (!ny[i].is_subset_of(ny[j]) && !ny[j].is_subset_of(ny[i])) return false;
    return true;
}

}  // namespace

bool is_half_graph(const Graph& g, const OrderedBipartition& b) {
    validate_bipartition(g, b);
    VertexSet y_mask(g.order());
    for (int v : b.y) y_mask.add(v);
    return nested_neighborhoods(g, b.x, y_mask);
}

bool obeys_orderings(const Graph& g, const OrderedBipartition& b) {
    validate_bipartition(g, b);
    auto initial_segments = [&](const std::vector<int>& side, const std::vector<int>& other) {
        for (int v : other) {
            int cnt = 0, max_pos = -1;
            for (int i = 0; i < static_cast<int>(side.size()); ++i)
                if (g.adjacent(v, side[i])) {
                    ++cnt;
                    max_pos = i;
                }
            if (cnt > 0 && max_pos != cnt - 1) return false;
        }
        return true;
    };
    return initial_segments(b.x, b.y) && initial_segments(b.y, b.x);
}

bool are_compatible(const Graph& g, const std::vector<int>& x, const std::vector<int>& y,
                    const std::vector<int>& z) {
    require_in_range(g, x, "compatibility X");
    require_in_range(g, y, "compatibility Y");
    require_in_range(g, z, "compatibility Z");
    if (!is_clique(g, x) || !is_clique(g, y) || !is_clique(g, z))
        throw std::invalid_argument("compatibility requires clique parts");
    std::vector<int> all = x;
    all.insert(all.end(), y.begin(), y.end());
    all.insert(all.end(), z.begin(), z.end());
    if (sorted_unique(all).size() != all.size())
        throw std::invalid_argument("compatibility requires disjoint parts");
    VertexSet yz(g.order());
    for (int v : y) yz.add(v);
    for (int v : z) yz.add(v);
    return nested_neighborhoods(g, x, yz);
}

namespace {

// Locates an induced two-edge matching between `xs` and the vertices of
// y_mask; used to attach a witness to blow-up condition failures.
std::vector<int> find_two_matching(const Graph& g, const std::vector<int>& xs,
                                   const VertexSet& y_mask) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            VertexSet ni = g.neighbors(xs[i]) & y_mask;
            VertexSet nj = g.neighbors(xs[j]) & y_mask;
            VertexSet only_i = ni - nj, only_j = nj - ni;
            if (!only_i.empty() && !only_j.empty())
                return {xs[i], only_i.first(), xs[j], only_j.first()};
        }
    return {};
}

}  // namespace

BlowupCheck verify_blowup_of_cycle(const Graph& g, const CliquePartition& p) {
    const int ell = static_cast<int>(p.parts.size());
    if (ell < 4) throw std::invalid_argument("blow-up of a cycle needs at least 4 parts");
    std::vector<int> part_of(g.order(), -1);
    for (int i = 0; i < ell; ++i) {
        for (int v : p.parts[i]) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("partition vertex out of range");
            if (part_of[v] != -1) throw std::invalid_argument("partition parts overlap");
            part_of[v] = i;
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (part_of[v] == -1) throw std::invalid_argument("partition does not cover all vertices");

    BlowupCheck res;
    for (int i = 0; i < ell; ++i) {
        if (p.parts[i].empty()) {
            res.violated_condition = 1;
            res.detail = "part " + std::to_string(i) + " is empty";
            return res;
        }
        if (!is_clique(g, p.parts[i])) {
            res.violated_condition = 1;
            res.detail = "part " + std::to_string(i) + " is not a clique";
            res.witness = p.parts[i];
            return res;
        }
    }
    auto mask_of = [&](int i) {
        VertexSet m(g.order());
        for (int v : p.parts[i]) m.add(v);
        return m;
    };
    for (int i = 0; i < ell; ++i) {
        const int prev = (i + ell - 1) % ell;
        VertexSet prev_mask = mask_of(prev);
        if (!nested_neighborhoods(g, p.parts[i], prev_mask)) {
            res.violated_condition = 2;
            res.detail = "boundary (" + std::to_string(prev) + ", " + std::to_string(i) + ") is not a half-graph";
            res.witness = find_two_matching(g, p.parts[i], prev_mask);
            return res;
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const int a = part_of[u], b = part_of[v];
        if (a == b) continue;
        const int d = (a - b + ell) % ell;
        if (d != 1 && d != ell - 1) {
            res.violated_condition = 3;
            res.detail = "edge between non-consecutive parts " + std::to_string(a) + " and " + std::to_string(b);
            res.witness = {u, v};
            return res;
        }
    }
    for (int i = 0; i < ell; ++i) {
        const int prev = (i + ell - 1) % ell, next = (i + 1) % ell;
        VertexSet both = mask_of(prev) | mask_of(next);
        if (!nested_neighborhoods(g, p.parts[i], both)) {
            res.violated_condition = 4;
            res.detail = "boundaries of part " + std::to_string(i) + " are incompatible";
            res.witness = find_two_matching(g, p.parts[i], both);
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

bool cutset_search(const Graph& g, std::vector<int>& clique, const VertexSet& common, int size_left,
                   VertexSet& out) {
    if (size_left == 0) {
        VertexSet s(g.order());
        for (int v : clique) s.add(v);
        if (components_minus(g, s).size() >= 2) {
            out = s;
            return true;
        }
        return false;
    }
    const int lo = clique.empty() ? -1 : clique.back();
    for (int v = common.next(lo); v >= 0; v = common.next(v)) {
        clique.push_back(v);
        VertexSet nxt = common & g.neighbors(v);
        if (cutset_search(g, clique, nxt, size_left - 1, out)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("clique-cutset search is desk-scale: n <= 24");
    for (int size = 1; size < n - 1; ++size) {
        std::vector<int> clique;
        VertexSet out(n);
        if (cutset_search(g, clique, VertexSet::full(n), size, out)) return out;
    }
    return std::nullopt;
}

std::optional<int> find_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    return std::nullopt;
}

}  // namespace chordcycle
