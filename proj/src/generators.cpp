#include "chordcycle/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordcycle {

// ---------------------------------------------------------------------------
// Arborescence

Arborescence::Arborescence(std::vector<int> parent) : parent_(std::move(parent)) {
    const int n = node_count();
    if (n == 0) throw std::invalid_argument("arborescence needs at least one node");
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (parent_[v] == -1) {
            if (apex_ >= 0) throw std::invalid_argument("arborescence has two apex nodes");
            apex_ = v;
        } else if (parent_[v] < 0 || parent_[v] >= n || parent_[v] == v) {
            throw std::invalid_argument("arborescence parent out of range");
        } else {
            children_[parent_[v]].push_back(v);
        }
    }
    if (apex_ < 0) throw std::invalid_argument("arborescence has no apex");
    // Every node must be reachable from the apex (rules out cycles).
    std::vector<char> seen(n, 0);
    std::vector<int> stack{apex_};
    seen[apex_] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : children_[v]) {
            if (seen[c]) throw std::invalid_argument("arborescence is not a tree");
            seen[c] = 1;
            ++count;
            stack.push_back(c);
        }
    }
    if (count != n) throw std::invalid_argument("arborescence is not connected");
}

std::vector<int> Arborescence::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (v != apex_ && children_[v].empty()) out.push_back(v);
    return out;
}

int Arborescence::depth(int v) const {
    int d = 0;
    while (parent_[v] != -1) {
        v = parent_[v];
        ++d;
    }
    return d;
}

bool Arborescence::is_strict_ancestor(int u, int v) const {
    while (parent_[v] != -1) {
        v = parent_[v];
        if (v == u) return true;
    }
    return false;
}

std::vector<int> Arborescence::leaf_descendants(int v) const {
    std::vector<int> out, stack{v};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        if (w != apex_ && children_[w].empty()) out.push_back(w);
        for (int c : children_[w]) stack.push_back(c);
    }
    return out;
}

Arborescence Arborescence::star(int leaf_count) {
    std::vector<int> parent(leaf_count + 1, 0);
    parent[0] = -1;
    return Arborescence(std::move(parent));
}

Arborescence Arborescence::directed_path(int node_count) {
    std::vector<int> parent(node_count);
    for (int v = 0; v < node_count; ++v) parent[v] = v - 1;
    return Arborescence(std::move(parent));
}

Graph transitive_closure(const Arborescence& t) {
    GraphBuilder b(t.node_count());
    for (int v = 0; v < t.node_count(); ++v)
        for (int u = t.parent(v); u != -1; u = t.parent(u)) b.add_edge(u, v);
    return b.build();
}

bool lives_in(const Arborescence& t, const Graph& s, const std::vector<int>& leaf_of_s) {
    std::vector<int> tl = t.leaves();
    std::vector<int> given = leaf_of_s;
    std::sort(given.begin(), given.end());
    if (static_cast<int>(leaf_of_s.size()) != s.order() || given != tl)
        throw std::invalid_argument("tree vertices must correspond 1:1 with the arborescence leaves");
    std::vector<int> s_vertex_of_leaf(t.node_count(), -1);
    for (int i = 0; i < s.order(); ++i) s_vertex_of_leaf[leaf_of_s[i]] = i;
    for (int v = 0; v < t.node_count(); ++v) {
        std::vector<int> dv = t.leaf_descendants(v);
        if (dv.size() <= 1) continue;
        VertexSet sub(s.order());
        for (int leaf : dv) sub.add(s_vertex_of_leaf[leaf]);
        // Connectivity of s restricted to sub.
        VertexSet seen(s.order());
        std::vector<int> stack{sub.first()};
        seen.add(sub.first());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            VertexSet nxt = s.neighbors(u) & sub;
            nxt -= seen;
            for (int w = nxt.first(); w >= 0; w = nxt.next(w)) {
                seen.add(w);
                stack.push_back(w);
            }
        }
        if (seen != sub) return false;
    }
    return true;
}

namespace {

// Decode a Pruefer sequence over [0,k) into tree edges.
std::vector<Edge> pruefer_tree(const std::vector<int>& seq, int k) {
    std::vector<int> deg(k, 1);
    for (int x : seq) ++deg[x];
    std::vector<Edge> edges;
    std::vector<char> used(k, 0);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < k; ++v)
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, x);
        used[leaf] = 1;
        --deg[x];
    }
    int u = -1, v = -1;
    for (int w = 0; w < k; ++w)
        if (!used[w] && deg[w] >= 1) (u < 0 ? u : v) = w;
    edges.emplace_back(u, v);
    return edges;
}

}  // namespace

CoarborealResult coarboreal(const Arborescence& t1, const Arborescence& t2,
                            const std::map<int, int>& phi) {
    std::vector<int> l1 = t1.leaves(), l2 = t2.leaves();
    if (l1.size() != l2.size()) throw std::invalid_argument("leaf counts differ");
    if (l1.size() > 8) throw std::invalid_argument("coarboreal search is guarded to at most 8 leaves");
    std::vector<char> hit(t2.node_count(), 0);
    for (int leaf : l1) {
        auto it = phi.find(leaf);
        if (it == phi.end()) throw std::invalid_argument("phi must map every leaf of t1");
        bool is_leaf2 = std::find(l2.begin(), l2.end(), it->second) != l2.end();
        if (!is_leaf2 || hit[it->second]) throw std::invalid_argument("phi must biject onto the leaves of t2");
        hit[it->second] = 1;
    }
    const int kk = static_cast<int>(l1.size());
    std::vector<int> map2(kk);  // tree vertex i -> t2 leaf
    for (int i = 0; i < kk; ++i) map2[i] = phi.at(l1[i]);

    CoarborealResult res;
    res.leaf_labels = l1;
    auto try_tree = [&](const std::vector<Edge>& edges) {
        Graph s = Graph::from_edge_list(std::max(kk, 1), edges);
        if (lives_in(t1, s, l1) && lives_in(t2, s, map2)) {
            res.coarboreal = true;
            res.common_tree = s;
            return true;
        }
        return false;
    };

    if (kk <= 2) {
        std::vector<Edge> edges;
        if (kk == 2) edges.emplace_back(0, 1);
        try_tree(edges);
        return res;
    }
    std::vector<int> seq(kk - 2, 0);
    while (true) {
        if (try_tree(pruefer_tree(seq, kk))) return res;
        int pos = kk - 3;
        while (pos >= 0 && seq[pos] == kk - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return res;
}

// ---------------------------------------------------------------------------
// Wheels and blow-ups of cycles

Graph wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
    return join(Graph::cycle(rim), Graph::empty(1));
}

namespace {

void validate_blowup_spec(const BlowupCycleSpec& spec) {
    const int ell = spec.ell;
    if (ell < 4) throw std::invalid_argument("blow-up of a cycle needs ell >= 4");
    if (static_cast<int>(spec.sizes.size()) != ell)
        throw std::invalid_argument("spec needs one clique size per part");
    for (int s : spec.sizes)
        if (s < 1) throw std::invalid_argument("clique sizes must be positive");
    if (!spec.boundaries.empty() && static_cast<int>(spec.boundaries.size()) != ell)
        throw std::invalid_argument("spec needs one boundary profile per part (or none)");
    for (int i = 0; i < ell && !spec.boundaries.empty(); ++i) {
        const auto& prof = spec.boundaries[i];
        if (prof.empty()) continue;  // complete boundary
        if (static_cast<int>(prof.size()) != spec.sizes[i])
            throw std::invalid_argument("boundary " + std::to_string(i) +
                                        " profile length must match the part size");
        const int next_size = spec.sizes[(i + 1) % ell];
        for (size_t a = 0; a < prof.size(); ++a) {
            if (prof[a] < 0 || prof[a] > next_size)
                throw std::invalid_argument("boundary " + std::to_string(i) + " prefix out of range");
            if (a > 0 && prof[a] > prof[a - 1])
                throw std::invalid_argument("boundary " + std::to_string(i) +
                                            " profile must be non-increasing (obeys orderings)");
        }
    }
}

int boundary_prefix(const BlowupCycleSpec& spec, int i, int a) {
    if (spec.boundaries.empty() || spec.boundaries[i].empty())
        return spec.sizes[(i + 1) % spec.ell];  // complete
    return spec.boundaries[i][a];
}

}  // namespace

BlowupCycleResult blowup_of_cycle(const BlowupCycleSpec& spec) {
    validate_blowup_spec(spec);
    const int ell = spec.ell;
    std::vector<int> offset(ell + 1, 0);
    for (int i = 0; i < ell; ++i) offset[i + 1] = offset[i] + spec.sizes[i];
    const int n = offset[ell];

    // Positive degree on at least one side for every vertex.
    for (int i = 0; i < ell; ++i) {
        const int prev = (i + ell - 1) % ell;
        for (int a = 0; a < spec.sizes[i]; ++a) {
            const bool out_deg = boundary_prefix(spec, i, a) > 0;
            bool in_deg = false;
            for (int b = 0; b < spec.sizes[prev] && !in_deg; ++b)
                if (boundary_prefix(spec, prev, b) > a) in_deg = true;
            if (!out_deg && !in_deg)
                throw std::invalid_argument("vertex " + std::to_string(a) + " of part " +
                                            std::to_string(i) + " has no cross-boundary neighbor");
        }
    }

    GraphBuilder b(n);
    CliquePartition part;
    part.parts.resize(ell);
    for (int i = 0; i < ell; ++i) {
        for (int a = 0; a < spec.sizes[i]; ++a) {
            part.parts[i].push_back(offset[i] + a);
            for (int c = a + 1; c < spec.sizes[i]; ++c) b.add_edge(offset[i] + a, offset[i] + c);
        }
    }
    for (int i = 0; i < ell; ++i) {
        const int j = (i + 1) % ell;
        for (int a = 0; a < spec.sizes[i]; ++a)
            for (int y = 0; y < boundary_prefix(spec, i, a); ++y)
                b.add_edge(offset[i] + a, offset[j] + y);
    }
    BlowupCycleResult res{b.build(), std::move(part)};
    BlowupCheck check = verify_blowup_of_cycle(res.graph, res.partition);
    if (!check.ok)
        throw std::runtime_error("blow-up spec violates condition " +
                                 std::to_string(check.violated_condition) + ": " + check.detail);
    return res;
}

BlowupCycleSpec random_blowup_spec(int ell, int max_vertices, std::mt19937& rng) {
    if (max_vertices < ell) throw std::invalid_argument("need at least one vertex per part");
    BlowupCycleSpec spec;
    spec.ell = ell;
    spec.sizes.assign(ell, 1);
    int budget = max_vertices - ell;
    std::uniform_int_distribution<int> pick_part(0, ell - 1);
    while (budget > 0) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;  // keep some variety in order
        ++spec.sizes[pick_part(rng)];
        --budget;
    }
    spec.boundaries.assign(ell, {});
    for (int i = 0; i < ell; ++i) {
        const int next_size = spec.sizes[(i + 1) % ell];
        std::vector<int> prof(spec.sizes[i]);
        prof[0] = next_size;  // first vertex complete: keeps all cross degrees positive
        for (int a = 1; a < spec.sizes[i]; ++a)
            prof[a] = std::uniform_int_distribution<int>(0, prof[a - 1])(rng);
        spec.boundaries[i] = std::move(prof);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Frameworks

namespace {

bool is_star_shape(const TentSpec& t) { return t.shape_parent.empty(); }

Arborescence tent_shape(const TentSpec& t) {
    if (is_star_shape(t)) return Arborescence::star(static_cast<int>(t.base_indices.size()));
    return Arborescence(t.shape_parent);
}

void validate_tents(const std::vector<TentSpec>& tents, int apex_lo, int apex_hi, int base_lo,
                    int base_hi, const char* side) {
    std::vector<char> apex_used(apex_hi + 2, 0);
    std::vector<char> base_used(base_hi + 2, 0);
    int base_covered = 0;
    for (const auto& t : tents) {
        if (t.apex_index < apex_lo || t.apex_index > apex_hi)
            throw std::invalid_argument(std::string(side) + " tent apex index out of range");
        if (apex_used[t.apex_index])
            throw std::invalid_argument(std::string(side) + " tent apexes must be distinct");
        apex_used[t.apex_index] = 1;
        if (t.base_indices.empty())
            throw std::invalid_argument(std::string(side) + " tent base must be nonempty");
        for (size_t i = 0; i < t.base_indices.size(); ++i) {
            int v = t.base_indices[i];
            if (v < base_lo || v > base_hi)
                throw std::invalid_argument(std::string(side) + " tent base index out of range");
            if (i > 0 && v != t.base_indices[i - 1] + 1)
                throw std::invalid_argument(std::string(side) + " tent base must be a consecutive interval");
            if (base_used[v]) throw std::invalid_argument(std::string(side) + " tent bases overlap");
            base_used[v] = 1;
            ++base_covered;
        }
        Arborescence shape = tent_shape(t);
        if (shape.leaves().size() != t.base_indices.size())
            throw std::invalid_argument(std::string(side) + " tent shape leaf count must match its base");
        if (!is_star_shape(t) && shape.apex() != 0)
            throw std::invalid_argument(std::string(side) + " tent shape node 0 must be the apex");
    }
    const int base_total = std::max(0, base_hi - base_lo + 1);
    if (base_covered != base_total)
        throw std::invalid_argument(std::string(side) + " tent bases must cover their whole range");
}

void validate_framework_spec(const FrameworkSpec& f) {
    if (f.ell < 7) throw std::invalid_argument("frameworks need ell >= 7");
    if (f.k < 2) throw std::invalid_argument("frameworks need k >= 2 (a_k would be a cut vertex)");
    if (f.m < 0 || f.m >= f.k) throw std::invalid_argument("framework split needs 0 <= m < k");
    validate_tents(f.upper_tents, 0, f.m, f.m + 1, f.k, "upper");
    bool apex0 = false, apexm = false;
    for (const auto& t : f.upper_tents) {
        apex0 |= t.apex_index == 0;
        apexm |= t.apex_index == f.m;
    }
    if (!apex0) throw std::invalid_argument("a tent with apex a0 is required");
    if (f.odd()) {
        if (f.m == 0) {
            if (!f.lower_tents.empty())
                throw std::invalid_argument("odd frameworks with m = 0 have no lower tents");
        } else {
            validate_tents(f.lower_tents, f.m + 1, f.k, 1, f.m, "lower");
        }
    } else {
        if (!apexm) throw std::invalid_argument("even frameworks need a tent with apex a_m");
        if (f.lower_tents.size() != f.upper_tents.size())
            throw std::invalid_argument("even frameworks pair each upper tent with a lower tent");
        for (size_t j = 0; j < f.upper_tents.size(); ++j) {
            const TentSpec& up = f.upper_tents[j];
            const TentSpec& lo = f.lower_tents[j];
            const int want_apex = up.apex_index == f.m ? 0 : up.apex_index + 1;
            if (lo.apex_index != want_apex)
                throw std::invalid_argument("paired lower tent apex must shift by one (or be b0)");
            if (lo.base_indices != up.base_indices)
                throw std::invalid_argument("paired tents must have mirrored bases");
            if (!is_star_shape(up) || !is_star_shape(lo)) {
                // Stars are coarboreal with anything; only shaped pairs need the search.
                Arborescence su = tent_shape(up), sl = tent_shape(lo);
                std::vector<int> lu = su.leaves(), ll = sl.leaves();
                std::map<int, int> phi;
                for (size_t i = 0; i < lu.size(); ++i) phi[lu[i]] = ll[i];
                if (!coarboreal(su, sl, phi))
                    throw std::invalid_argument("paired tents must be coarboreal under a_j -> b_j");
            }
        }
    }
}

struct FrameworkBuilder {
    const FrameworkSpec& f;
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::vector<int> t_parent, s_parent;  // -2 = not a member, -1 = apex
    std::vector<Edge> path_edges;

    explicit FrameworkBuilder(const FrameworkSpec& spec) : f(spec) {}

    int add(const std::string& name) {
        ids[name] = static_cast<int>(names.size());
        names.push_back(name);
        t_parent.push_back(-2);
        s_parent.push_back(-2);
        return static_cast<int>(names.size()) - 1;
    }
    int id(const std::string& name) const { return ids.at(name); }

    int path_len(int i) const {
        if (f.odd()) return (f.ell - 3) / 2;
        return i <= f.m ? f.ell / 2 - 1 : f.ell / 2 - 2;
    }

    // Lays the tent's shape onto framework vertices: apex and leaves are the
    // given anchors, internal shape nodes become fresh vertices.
    void place_tent(const TentSpec& t, const std::string& fresh_prefix, int apex_vertex,
                    const std::vector<int>& leaf_vertices, std::vector<int>& parent_map) {
        Arborescence shape = tent_shape(t);
        std::vector<int> leaves = shape.leaves();
        std::vector<int> vertex_of_node(shape.node_count(), -1);
        vertex_of_node[shape.apex()] = apex_vertex;
        for (size_t i = 0; i < leaves.size(); ++i) vertex_of_node[leaves[i]] = leaf_vertices[i];
        int fresh = 0;
        for (int v = 0; v < shape.node_count(); ++v)
            if (vertex_of_node[v] < 0)
                vertex_of_node[v] = add(fresh_prefix + "." + std::to_string(fresh++));
        for (int v = 0; v < shape.node_count(); ++v) {
            if (v == shape.apex()) continue;
            parent_map[vertex_of_node[v]] = vertex_of_node[shape.parent(v)];
        }
    }
};

// Ancestor closure of a parent map restricted to its members.
void add_closure_edges(const std::vector<int>& parent, GraphBuilder& b) {
    for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
        if (parent[v] == -2) continue;
        for (int u = parent[v]; u != -2 && u != -1; u = parent[u]) b.add_edge(u, v);
    }
}

}  // namespace

int FrameworkGraph::vertex(const std::string& name) const {
    for (int v = 0; v < static_cast<int>(names.size()); ++v)
        if (names[v] == name) return v;
    throw std::invalid_argument("unknown framework vertex: " + name);
}

int FrameworkGraph::path_length() const { return (spec.ell - 3) / 2; }

int FrameworkGraph::path_length(int i) const {
    if (spec.odd()) return (spec.ell - 3) / 2;
    return i <= spec.m ? spec.ell / 2 - 1 : spec.ell / 2 - 2;
}

FrameworkGraph framework(const FrameworkSpec& spec) {
    validate_framework_spec(spec);
    FrameworkBuilder fb(spec);
    const int k = spec.k, m = spec.m;
    const bool odd = spec.odd();

    for (int i = 0; i <= k; ++i) fb.add("a" + std::to_string(i));
    if (!odd) fb.add("b0");
    for (int i = 1; i <= k; ++i) fb.add("b" + std::to_string(i));
    for (int i = 1; i <= k; ++i) {
        const int len = fb.path_len(i);
        int prev = fb.id("a" + std::to_string(i));
        for (int j = 1; j < len; ++j) {
            int v = fb.add("p" + std::to_string(i) + "." + std::to_string(j));
            fb.path_edges.emplace_back(prev, v);
            prev = v;
        }
        fb.path_edges.emplace_back(prev, fb.id("b" + std::to_string(i)));
    }

    // Upper arborescence T: tents hung on their anchors plus the chain
    // a_{i-1} -> a_i for i <= m (the apex itself is always a valid source).
    fb.t_parent[fb.id("a0")] = -1;
    for (int i = 1; i <= m; ++i) fb.t_parent[fb.id("a" + std::to_string(i))] = fb.id("a" + std::to_string(i - 1));
    for (size_t j = 0; j < spec.upper_tents.size(); ++j) {
        const TentSpec& t = spec.upper_tents[j];
        std::vector<int> leaf_vs;
        for (int i : t.base_indices) leaf_vs.push_back(fb.id("a" + std::to_string(i)));
        fb.place_tent(t, "tu" + std::to_string(j), fb.id("a" + std::to_string(t.apex_index)),
                      leaf_vs, fb.t_parent);
    }

    // Lower arborescence S. Odd: apex b_k with the chain b_{i+1} -> b_i down
    // to b_{m+1}; even: apex b0 with the chain b_{i+1} -> b_i below b_m and
    // the closing edge b0 -> b_m.
    if (odd) {
        fb.s_parent[fb.id("b" + std::to_string(k))] = -1;
        for (int i = m + 1; i < k; ++i)
            fb.s_parent[fb.id("b" + std::to_string(i))] = fb.id("b" + std::to_string(i + 1));
        for (size_t j = 0; j < spec.lower_tents.size(); ++j) {
            const TentSpec& t = spec.lower_tents[j];
            std::vector<int> leaf_vs;
            for (int i : t.base_indices) leaf_vs.push_back(fb.id("b" + std::to_string(i)));
            fb.place_tent(t, "tl" + std::to_string(j), fb.id("b" + std::to_string(t.apex_index)),
                          leaf_vs, fb.s_parent);
        }
    } else {
        fb.s_parent[fb.id("b0")] = -1;
        if (m >= 1) fb.s_parent[fb.id("b" + std::to_string(m))] = fb.id("b0");
        for (int i = 1; i < m; ++i)
            fb.s_parent[fb.id("b" + std::to_string(i))] = fb.id("b" + std::to_string(i + 1));
        for (size_t j = 0; j < spec.lower_tents.size(); ++j) {
            const TentSpec& t = spec.lower_tents[j];
            std::vector<int> leaf_vs;
            for (int i : t.base_indices) leaf_vs.push_back(fb.id("b" + std::to_string(i)));
            fb.place_tent(t, "tl" + std::to_string(j), fb.id("b" + std::to_string(t.apex_index)),
                          leaf_vs, fb.s_parent);
        }
    }

    const int base_n = static_cast<int>(fb.names.size());
    GraphBuilder base_b(base_n);
    for (const auto& [u, v] : fb.path_edges) base_b.add_edge(u, v);
    add_closure_edges(fb.t_parent, base_b);
    add_closure_edges(fb.s_parent, base_b);
    Graph base = base_b.build();

    // Clique sizes: only vertical-path vertices may blow up.
    std::vector<int> wsize(base_n, 1);
    for (const auto& [name, size] : spec.blow_sizes) {
        if (size < 1) throw std::invalid_argument("clique sizes must be positive");
        auto it = fb.ids.find(name);
        if (it == fb.ids.end()) throw std::invalid_argument("blow_sizes names unknown vertex " + name);
        const char c = name[0];
        const bool path_vertex =
            c == 'p' || ((c == 'a' || c == 'b') && name != "a0" && name != "b0");
        if (!path_vertex && size > 1)
            throw std::invalid_argument("only vertical-path vertices may blow up: " + name);
        wsize[it->second] = size;
    }

    FrameworkGraph fg;
    fg.spec = spec;
    fg.base = base;
    fg.names = fb.names;
    fg.upper_parent = fb.t_parent;
    fg.lower_parent = fb.s_parent;
    fg.cliques.resize(base_n);
    int next_id = base_n;
    for (int t = 0; t < base_n; ++t) {
        fg.cliques[t].push_back(t);
        for (int c = 1; c < wsize[t]; ++c) fg.cliques[t].push_back(next_id++);
    }

    GraphBuilder gb(next_id);
    for (int t = 0; t < base_n; ++t)
        for (size_t i = 0; i < fg.cliques[t].size(); ++i)
            for (size_t j = i + 1; j < fg.cliques[t].size(); ++j)
                gb.add_edge(fg.cliques[t][i], fg.cliques[t][j]);

    auto a_index = [&](int v) -> int {
        const std::string& s = fb.names[v];
        return s[0] == 'a' ? std::stoi(s.substr(1)) : -1;
    };
    auto b_index = [&](int v) -> int {
        const std::string& s = fb.names[v];
        return s[0] == 'b' ? std::stoi(s.substr(1)) : -1;
    };
    auto forced_complete = [&](int t, int u) {
        const int at = a_index(t), au = a_index(u);
        const int bt = b_index(t), bu = b_index(u);
        if (at >= 1 && au >= 1) return true;  // both among a_1..a_k
        if (bt >= 1 && bu >= 1) return true;  // both among b_1..b_k
        const bool both_T = fb.t_parent[t] != -2 && fb.t_parent[u] != -2;
        if (both_T && ((at >= 0 && at <= m) || (au >= 0 && au <= m))) return true;
        const bool both_S = fb.s_parent[t] != -2 && fb.s_parent[u] != -2;
        if (both_S) {
            auto lower_hub = [&](int idx) { return odd ? idx >= m + 1 : (idx >= 0 && idx <= m); };
            if ((bt >= 0 && lower_hub(bt)) || (bu >= 0 && lower_hub(bu))) return true;
        }
        return false;
    };

    for (const auto& [t, u] : base.edges()) {
        const auto key_tu = fb.names[t] + "|" + fb.names[u];
        const auto key_ut = fb.names[u] + "|" + fb.names[t];
        const std::vector<int>* prof = nullptr;
        bool swapped = false;
        if (auto it = spec.boundary_profiles.find(key_tu); it != spec.boundary_profiles.end()) {
            prof = &it->second;
        } else if (auto it2 = spec.boundary_profiles.find(key_ut); it2 != spec.boundary_profiles.end()) {
            prof = &it2->second;
            swapped = true;
        }
        const auto& wt = fg.cliques[swapped ? u : t];
        const auto& wu = fg.cliques[swapped ? t : u];
        if (prof == nullptr) {
            for (int x : fg.cliques[t])
                for (int y : fg.cliques[u]) gb.add_edge(x, y);
            continue;
        }
        if (forced_complete(t, u))
            throw std::invalid_argument("boundary " + key_tu + " must stay complete");
        if (prof->size() != wt.size())
            throw std::invalid_argument("boundary profile length mismatch at " + key_tu);
        std::vector<int> indeg(wu.size(), 0);
        for (size_t a = 0; a < wt.size(); ++a) {
            const int px = (*prof)[a];
            if (px < 1 || px > static_cast<int>(wu.size()))
                throw std::invalid_argument("boundary profile out of range at " + key_tu);
            if (a > 0 && px > (*prof)[a - 1])
                throw std::invalid_argument("boundary profile must be non-increasing at " + key_tu);
            for (int y = 0; y < px; ++y) {
                gb.add_edge(wt[a], wu[y]);
                ++indeg[y];
            }
        }
        for (size_t y = 0; y < wu.size(); ++y)
            if (indeg[y] == 0)
                throw std::invalid_argument("boundary " + key_tu + " leaves a vertex with no neighbor");
    }
    fg.graph = gb.build();

    EllHoledResult holed = is_ell_holed(fg.graph, spec.ell);
    if (!holed.holds) {
        std::string msg = "framework blow-up failed validation: ";
        if (holed.no_holes) msg += "graph has no holes";
        else {
            msg += "hole of length " + std::to_string(holed.violating_hole->length()) + " found (";
            for (int v : holed.violating_hole->vertices) msg += std::to_string(v) + " ";
            msg += ")";
        }
        throw std::runtime_error(msg);
    }
    return fg;
}

FrameworkSpec canonical_framework_spec(int ell, int k) {
    FrameworkSpec f;
    f.ell = ell;
    f.k = k;
    f.m = 0;
    TentSpec up;
    up.apex_index = 0;
    for (int i = 1; i <= k; ++i) up.base_indices.push_back(i);
    f.upper_tents.push_back(up);
    if (ell % 2 == 0) {
        TentSpec lo = up;  // star with apex b0 over b_1..b_k
        lo.apex_index = 0;
        f.lower_tents.push_back(lo);
    }
    for (int i = 1; i <= k; ++i) f.blow_sizes["p" + std::to_string(i) + ".1"] = 2;
    return f;
}

CycleWitness framework_witness_cycle(const FrameworkGraph& fg) {
    const int k = fg.spec.k;
    const int ell = fg.spec.ell;
    for (int i : {k - 1, k}) {
        const int pv = fg.path_vertex(i, 1);
        if (fg.cliques[pv].size() < 2)
            throw std::invalid_argument(
                "witness cycle needs clique size >= 2 next to a_" + std::to_string(i) +
                " (min degree 3 requires blown path vertices)");
    }
    std::vector<int> cyc;
    cyc.push_back(fg.a(0));
    cyc.push_back(fg.a(k));
    cyc.push_back(fg.cliques[fg.path_vertex(k, 1)][1]);  // the extra clique vertex a_k''
    const int len_k = fg.path_length(k);
    for (int j = 1; j < len_k; ++j) cyc.push_back(fg.path_vertex(k, j));
    cyc.push_back(fg.b(k));
    if (!fg.spec.odd()) cyc.push_back(fg.b(0));
    cyc.push_back(fg.b(k - 1));
    const int len_k1 = fg.path_length(k - 1);
    for (int j = len_k1 - 1; j >= 2; --j) cyc.push_back(fg.path_vertex(k - 1, j));
    cyc.push_back(fg.path_vertex(k - 1, 1));
    cyc.push_back(fg.cliques[fg.path_vertex(k - 1, 1)][1]);  // a_{k-1}''
    cyc.push_back(fg.a(k - 1));

    CycleWitness w = make_cycle_witness(cyc, false);
    if (!validate_cycle(fg.graph, w) || w.length() < ell + 2)
        throw std::runtime_error("framework witness cycle failed re-validation");
    return w;
}

}  // namespace chordcycle
