#include "chordcycle/cycles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace chordcycle {

namespace {

constexpr int kSolverMaxN = 64;

struct MaskRows {
    int n = 0;
    std::vector<uint64_t> rows;
};

MaskRows rows_of(const Graph& g) {
    if (g.order() > kSolverMaxN)
        throw std::invalid_argument("cycle solvers are desk-scale: n <= 64 required");
    MaskRows m;
    m.n = g.order();
    m.rows.assign(m.n, 0);
    for (int v = 0; v < m.n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) m.rows[v] |= 1ULL << w;
    }
    return m;
}

uint64_t reach_from(const MaskRows& m, int start, uint64_t allowed) {
    uint64_t seen = 1ULL << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t nxt = 0;
        for (uint64_t f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            nxt |= m.rows[v];
        }
        nxt &= allowed & ~seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen;
}

bool chordless_in(const MaskRows& m, const std::vector<int>& cyc) {
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if ((m.rows[cyc[i]] >> cyc[j]) & 1ULL) return false;
        }
    return true;
}

enum class Mode { Value, LexWitness, CollectAll };

// Anchored longest-cycle search. Cycles are enumerated from their minimum
// vertex with the direction fixed by path[1] < closing vertex, so each cycle
// is seen exactly once and the emitted sequence is already canonical.
struct LongestSearch {
    const MaskRows& m;
    Mode mode;
    int early_exit;  // stop as soon as best >= early_exit (0 = never)

    int best = 0;
    std::vector<int> best_path;
    std::vector<std::vector<int>> ties;
    std::vector<int> path;
    int anchor = 0;
    uint64_t gt_anchor = 0;
    bool done = false;

    LongestSearch(const MaskRows& m_, Mode mode_, int early_exit_ = 0)
        : m(m_), mode(mode_), early_exit(early_exit_) {}

    void run() {
        const int n = m.n;
        for (anchor = 0; anchor < n && !done; ++anchor) {
            const int cap = n - anchor;  // cycles anchored here cannot be longer
            if (cap < 3) break;
            if (mode == Mode::CollectAll ? cap < best : cap <= best) break;
            gt_anchor = ~0ULL << (anchor + 1);
            if (m.n < 64) gt_anchor &= (1ULL << m.n) - 1;
            path.assign(1, anchor);
            extend(anchor, 1ULL << anchor);
        }
    }

    void record() {
        const int len = static_cast<int>(path.size());
        if (len > best) {
            best = len;
            best_path = path;
            if (mode == Mode::CollectAll) {
                ties.clear();
                ties.push_back(path);
            }
            if (early_exit > 0 && best >= early_exit) done = true;
        } else if (len == best) {
            if (mode == Mode::CollectAll) ties.push_back(path);
            else if (mode == Mode::LexWitness && path < best_path) best_path = path;
        }
    }

    void extend(int head, uint64_t visited) {
        if (done) return;
        if (path.size() >= 3 && ((m.rows[head] >> anchor) & 1ULL) && path[1] < head) record();
        uint64_t cand = m.rows[head] & gt_anchor & ~visited;
        const int len = static_cast<int>(path.size());
        while (cand) {
            if (done) return;
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            const uint64_t allowed = gt_anchor & ~visited & ~(1ULL << w);
            const uint64_t seen = reach_from(m, w, allowed);
            if ((seen & m.rows[anchor]) == 0) continue;  // no way back
            const int ub = len + std::popcount(seen);
            if (mode == Mode::Value ? ub <= best : ub < best) continue;
            path.push_back(w);
            extend(w, visited | (1ULL << w));
            path.pop_back();
        }
    }
};

// Anchored chordless-cycle search over induced paths. A candidate adjacent to
// the anchor can only close the cycle (extending past it would leave a chord
// back to the anchor); a candidate adjacent to any interior vertex is dead.
struct InducedSearch {
    const MaskRows& m;
    Mode mode;
    int min_len;
    int max_len;
    const std::function<bool(const std::vector<int>&)>* visitor;  // Enumerate when set

    int best = 0;
    std::vector<int> best_path;
    std::vector<int> path;
    int anchor = 0;
    uint64_t gt_anchor = 0;
    bool done = false;

    InducedSearch(const MaskRows& m_, Mode mode_, int min_len_, int max_len_,
                  const std::function<bool(const std::vector<int>&)>* visitor_ = nullptr)
        : m(m_), mode(mode_), min_len(min_len_), max_len(max_len_), visitor(visitor_) {}

    void run() {
        const int n = m.n;
        for (anchor = 0; anchor < n && !done; ++anchor) {
            const int cap = std::min(n - anchor, max_len);
            if (cap < min_len) break;
            if (!visitor && (mode == Mode::Value ? cap <= best : cap < best) && best >= min_len) break;
            gt_anchor = ~0ULL << (anchor + 1);
            if (m.n < 64) gt_anchor &= (1ULL << m.n) - 1;
            path.assign(1, anchor);
            extend(anchor, 1ULL << anchor, 0);
        }
    }

    void close() {
        const int len = static_cast<int>(path.size());
        if (len < min_len || len > max_len) return;
        if (visitor) {
            if (!(*visitor)(path)) done = true;
            return;
        }
        if (len > best) {
            best = len;
            best_path = path;
        } else if (len == best && mode == Mode::LexWitness && path < best_path) {
            best_path = path;
        }
    }

    void extend(int head, uint64_t visited, uint64_t forbidden) {
        if (done) return;
        const int len = static_cast<int>(path.size());
        uint64_t cand = m.rows[head] & gt_anchor & ~visited & ~forbidden;
        const uint64_t anchor_row = m.rows[anchor];
        // Once the old head becomes interior, its whole neighborhood is off
        // limits for later path vertices.
        const uint64_t next_forbidden = len >= 2 ? forbidden | m.rows[head] : forbidden;
        while (cand) {
            if (done) return;
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            const bool touches_anchor = (anchor_row >> w) & 1ULL;
            if (touches_anchor && len >= 2) {
                if (path[1] < w) {
                    path.push_back(w);
                    close();
                    path.pop_back();
                }
                continue;
            }
            if (len + 1 >= max_len) continue;  // closing would overshoot
            const uint64_t allowed = gt_anchor & ~visited & ~next_forbidden & ~(1ULL << w);
            const uint64_t seen = reach_from(m, w, allowed);
            if ((seen & anchor_row) == 0) continue;
            if (!visitor) {
                const int ub = std::min(len + std::popcount(seen), max_len);
                if (best >= min_len && (mode == Mode::Value ? ub <= best : ub < best)) continue;
                if (ub < min_len) continue;
            }
            path.push_back(w);
            extend(w, visited | (1ULL << w), next_forbidden);
            path.pop_back();
        }
    }
};

}  // namespace

CycleWitness make_cycle_witness(std::vector<int> cycle, bool chordless) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3) throw std::invalid_argument("cycles have at least 3 vertices");
    int mi = 0;
    for (int i = 1; i < k; ++i)
        if (cycle[i] < cycle[mi]) mi = i;
    std::vector<int> out;
    out.reserve(k);
    const int prev = cycle[(mi + k - 1) % k];
    const int next = cycle[(mi + 1) % k];
    const int dir = next < prev ? 1 : -1;
    for (int i = 0, at = mi; i < k; ++i, at = (at + dir + k) % k) out.push_back(cycle[at]);
    CycleWitness w;
    w.vertices = std::move(out);
    w.chordless = chordless;
    return w;
}

namespace {

bool cycle_structure_ok(const Graph& g, const CycleWitness& w) {
    const int k = w.length();
    if (k < 3) return false;
    VertexSet seen(g.order());
    for (int v : w.vertices) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < k; ++i)
        if (!g.adjacent(w.vertices[i], w.vertices[(i + 1) % k])) return false;
    return true;
}

}  // namespace

bool validate_cycle(const Graph& g, const CycleWitness& w) {
    if (!cycle_structure_ok(g, w)) return false;
    if (w.chordless) {
        const int k = w.length();
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                if (g.adjacent(w.vertices[i], w.vertices[j])) return false;
            }
    }
    return true;
}

std::optional<CycleWitness> circumference(const Graph& g) {
    MaskRows m = rows_of(g);
    LongestSearch s(m, Mode::LexWitness);
    s.run();
    if (s.best < 3) return std::nullopt;
    return make_cycle_witness(s.best_path, chordless_in(m, s.best_path));
}

std::optional<int> circumference_length(const Graph& g) {
    MaskRows m = rows_of(g);
    LongestSearch s(m, Mode::Value);
    s.run();
    if (s.best < 3) return std::nullopt;
    return s.best;
}

std::optional<CycleWitness> induced_circumference(const Graph& g) {
    MaskRows m = rows_of(g);
    InducedSearch s(m, Mode::LexWitness, 3, g.order());
    s.run();
    if (s.best < 3) return std::nullopt;
    return make_cycle_witness(s.best_path, true);
}

std::optional<int> induced_circumference_length(const Graph& g) {
    MaskRows m = rows_of(g);
    InducedSearch s(m, Mode::Value, 3, g.order());
    s.run();
    if (s.best < 3) return std::nullopt;
    return s.best;
}

bool is_hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    MaskRows m = rows_of(g);
    LongestSearch s(m, Mode::Value, g.order());
    s.run();
    return s.best == g.order();
}

void visit_holes(const Graph& g, int max_len,
                 const std::function<bool(const CycleWitness&)>& fn) {
    if (max_len < 4) throw std::invalid_argument("holes have length at least 4");
    MaskRows m = rows_of(g);
    std::function<bool(const std::vector<int>&)> raw = [&](const std::vector<int>& cyc) {
        return fn(make_cycle_witness(cyc, true));
    };
    InducedSearch s(m, Mode::CollectAll, 4, std::min(max_len, g.order()), &raw);
    s.run();
}

std::vector<CycleWitness> enumerate_holes(const Graph& g, int max_len) {
    std::vector<CycleWitness> holes;
    visit_holes(g, max_len, [&](const CycleWitness& w) {
        holes.push_back(w);
        return true;
    });
    std::sort(holes.begin(), holes.end(), [](const CycleWitness& a, const CycleWitness& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return holes;
}

std::vector<CycleWitness> longest_cycles_all(const Graph& g) {
    MaskRows m = rows_of(g);
    LongestSearch s(m, Mode::CollectAll);
    s.run();
    if (s.best < 3) throw std::invalid_argument("longest_cycles_all requires a graph with a cycle");
    std::vector<CycleWitness> out;
    out.reserve(s.ties.size());
    for (auto& cyc : s.ties) out.push_back(make_cycle_witness(cyc, chordless_in(m, cyc)));
    std::sort(out.begin(), out.end(), [](const CycleWitness& a, const CycleWitness& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

bool has_chord(const Graph& g, const CycleWitness& c) {
    if (!cycle_structure_ok(g, c)) throw std::invalid_argument("invalid cycle witness");
    const int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(c.vertices[i], c.vertices[j])) return true;
        }
    return false;
}

namespace {

// The oracles below deliberately share nothing with the searches above: plain
// recursion over simple paths, no bounds, no direction dedup beyond anchoring
// at the cycle's minimum vertex.
struct BruteState {
    const Graph& g;
    int start;
    std::vector<bool> visited;
    std::vector<int> path;
    int best_any = 0;
    int best_chordless = 0;

    explicit BruteState(const Graph& g_) : g(g_), visited(g_.order(), false) {}

    bool closed_chordless() const {
        const int k = static_cast<int>(path.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                if (g.adjacent(path[i], path[j])) return false;
            }
        return true;
    }

    void dfs(int head) {
        const VertexSet& nb = g.neighbors(head);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (w < start) continue;
            if (w == start) {
                if (path.size() >= 3) {
                    best_any = std::max(best_any, static_cast<int>(path.size()));
                    if (closed_chordless())
                        best_chordless = std::max(best_chordless, static_cast<int>(path.size()));
                }
                continue;
            }
            if (visited[w]) continue;
            visited[w] = true;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            visited[w] = false;
        }
    }

    void run() {
        for (start = 0; start < g.order(); ++start) {
            visited.assign(g.order(), false);
            visited[start] = true;
            path.assign(1, start);
            dfs(start);
        }
    }
};

BruteState run_brute(const Graph& g) {
    if (g.order() > 12)
        throw std::invalid_argument("brute-force cycle oracle is guarded to n <= 12");
    BruteState s(g);
    s.run();
    return s;
}

}  // namespace

std::optional<int> brute_circumference(const Graph& g) {
    BruteState s = run_brute(g);
    if (s.best_any < 3) return std::nullopt;
    return s.best_any;
}

std::optional<int> brute_induced_circumference(const Graph& g) {
    BruteState s = run_brute(g);
    if (s.best_chordless < 3) return std::nullopt;
    return s.best_chordless;
}

CycleStats cycle_stats(const Graph& g) {
    CycleStats st;
    st.longest = circumference(g);
    st.longest_chordless = induced_circumference(g);
    st.hamiltonian = st.longest && st.longest->length() == g.order();
    return st;
}

}  // namespace chordcycle
