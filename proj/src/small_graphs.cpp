#include "chordcycle/small_graphs.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "chordcycle/io.hpp"
#include "chordcycle/parallel.hpp"

namespace chordcycle {

int MaskGraph::degree(int v) const { return std::popcount(static_cast<unsigned>(rows[v])); }

MaskGraph to_mask_graph(const Graph& g) {
    if (g.order() > 16) throw std::invalid_argument("MaskGraph supports n <= 16");
    MaskGraph m;
    m.n = g.order();
    for (const auto& [u, v] : g.edges()) m.add_edge(u, v);
    return m;
}

Graph from_mask_graph(const MaskGraph& m) {
    GraphBuilder b(m.n);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (m.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

uint64_t identity_key(const MaskGraph& g) {
    uint64_t key = 0;
    for (int col = 1; col < g.n; ++col) {
        uint64_t group = 0;
        for (int row = 0; row < col; ++row) group = group << 1 | ((g.rows[col] >> row) & 1u);
        key = key << col | group;
    }
    return key;
}

MaskGraph mask_from_key(int n, uint64_t key) {
    MaskGraph g;
    g.n = n;
    int shift = n * (n - 1) / 2;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            --shift;
            if ((key >> shift) & 1u) g.add_edge(row, col);
        }
    }
    return g;
}

namespace {

// Backtracking minimizer for the labeled key. Children of a search node are
// tried in ascending bit-pattern order so the first completed leaf is the
// greedy dive; prefix pruning then cuts almost everything else. Twin vertices
// (equal neighborhoods apart from each other) are interchangeable by a
// transposition automorphism, so only one per twin class is tried at a node
// -- this is what keeps blow-up-like graphs (many clones) from exploding.
struct Canonizer {
    int n;
    const uint16_t* rows;
    uint16_t twin[16];
    int total_bits;
    uint64_t best;
    int perm[16];

    explicit Canonizer(const MaskGraph& g) : n(g.n), rows(g.rows.data()) {
        total_bits = n * (n - 1) / 2;
        best = ~0ULL;
        if (total_bits < 64) best = (1ULL << total_bits) - 1;
        for (int v = 0; v < n; ++v) {
            twin[v] = 0;
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                uint16_t nu = rows[u] & static_cast<uint16_t>(~(1u << v));
                uint16_t nv = rows[v] & static_cast<uint16_t>(~(1u << u));
                if (nu == nv) twin[v] |= static_cast<uint16_t>(1u << u);
            }
        }
    }

    uint64_t run() {
        // Root candidates ordered by degree: low-degree first tends to reach
        // the minimal matrix quickly.
        int order[16];
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order, order + n, [&](int a, int b) {
            int da = std::popcount(static_cast<unsigned>(rows[a]));
            int db = std::popcount(static_cast<unsigned>(rows[b]));
            return da != db ? da < db : a < b;
        });
        uint16_t tried = 0;
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            if (twin[v] & tried) continue;
            tried |= static_cast<uint16_t>(1u << v);
            perm[0] = v;
            search(1, 0ULL, 0, static_cast<uint16_t>(1u << v));
        }
        return best;
    }

    void search(int p, uint64_t prefix, int bits_done, uint16_t used) {
        if (p == n) {
            if (prefix < best) best = prefix;
            return;
        }
        uint32_t cand[16];
        int cnt = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            uint32_t bits = 0;
            for (int i = 0; i < p; ++i) bits = bits << 1 | ((rows[v] >> perm[i]) & 1u);
            cand[cnt++] = bits << 4 | static_cast<uint32_t>(v);
        }
        std::sort(cand, cand + cnt);
        const int rem = total_bits - bits_done - p;
        const uint64_t target = best >> rem;
        uint16_t tried = 0;
        for (int i = 0; i < cnt; ++i) {
            const int v = static_cast<int>(cand[i] & 15u);
            const uint64_t bits = cand[i] >> 4;
            const uint64_t next_prefix = prefix << p | bits;
            if (next_prefix > (best >> rem)) break;  // best may have shrunk; recompute
            if (twin[v] & tried) continue;
            tried |= static_cast<uint16_t>(1u << v);
            perm[p] = v;
            search(p + 1, next_prefix, bits_done + p, used | static_cast<uint16_t>(1u << v));
        }
        (void)target;
    }
};

bool mask_connected(const uint16_t* rows, int n, uint16_t removed) {
    const uint16_t all = static_cast<uint16_t>((1u << n) - 1) & static_cast<uint16_t>(~removed);
    if (all == 0) return true;
    uint16_t seen = all & static_cast<uint16_t>(-all);  // lowest remaining vertex
    while (true) {
        uint16_t grow = seen;
        uint16_t frontier = seen;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= static_cast<uint16_t>(frontier - 1);
            grow |= rows[v] & all;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == all;
}

bool mask_two_connected(const uint16_t* rows, int n, uint16_t removed) {
    const int left = n - std::popcount(static_cast<unsigned>(removed));
    if (left < 3) return false;
    if (!mask_connected(rows, n, removed)) return false;
    uint16_t all = static_cast<uint16_t>((1u << n) - 1) & static_cast<uint16_t>(~removed);
    for (uint16_t rest = all; rest;) {
        int v = std::countr_zero(rest);
        rest &= static_cast<uint16_t>(rest - 1);
        if (!mask_connected(rows, n, removed | static_cast<uint16_t>(1u << v))) return false;
    }
    return true;
}

}  // namespace

uint64_t canonical_key(const MaskGraph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical_key supports n <= 11 (64-bit key)");
    if (g.n <= 1) return 0;
    Canonizer c(g);
    return c.run();
}

uint64_t canonical_key(const Graph& g) { return canonical_key(to_mask_graph(g)); }

std::string canonical_graph6(const Graph& g) {
    return write_graph6(from_mask_graph(mask_from_key(g.order(), canonical_key(g))));
}

bool GraphFilter::passes(const MaskGraph& g) const {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < min_degree) return false;
    switch (connectivity) {
        case 0: return true;
        case 1: return mask_connected(g.rows.data(), g.n, 0);
        case 2: return mask_two_connected(g.rows.data(), g.n, 0);
        case 3: {
            if (g.n < 4 || !mask_two_connected(g.rows.data(), g.n, 0)) return false;
            for (int v = 0; v < g.n; ++v)
                if (!mask_two_connected(g.rows.data(), g.n, static_cast<uint16_t>(1u << v)))
                    return false;
            return true;
        }
        default: throw std::invalid_argument("connectivity filter supports 0..3");
    }
}

std::string GraphFilter::id_fragment() const {
    return "d" + std::to_string(min_degree) + "c" + std::to_string(connectivity);
}

const std::vector<uint64_t>& SmallGraphEnumerator::all_graphs(int n, int jobs) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    auto keys = generate(n, nullptr, jobs);
    return cache_.emplace(n, std::move(keys)).first->second;
}

std::vector<uint64_t> SmallGraphEnumerator::filtered_graphs(int n, const GraphFilter& f, int jobs) {
    return generate(n, &f, jobs);
}

std::vector<uint64_t> SmallGraphEnumerator::generate(int n, const GraphFilter* f, int jobs) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (n > guard_)
        throw std::invalid_argument("built-in enumerator capped at order " + std::to_string(guard_) +
                                    "; ingest a graph6 stream for larger populations");
    if (n == 1) {
        MaskGraph single;
        single.n = 1;
        if (!f || f->passes(single)) return {0};
        return {};
    }
    const std::vector<uint64_t>& parents = all_graphs(n - 1, jobs);

    // Parent-level pruning for the cheap structural filters: a candidate can
    // only reach min degree d if the parent has min degree >= d-1, and a
    // k-connected candidate loses at most one connectivity level when the new
    // vertex is deleted.
    const int parent_bits = n - 1;
    const uint16_t full_mask = static_cast<uint16_t>((1u << parent_bits) - 1);

    constexpr int kShards = 64;
    std::array<std::unordered_set<uint64_t>, kShards> shards;
    std::array<std::mutex, kShards> locks;

    auto process_parent = [&](uint64_t parent_key) {
        MaskGraph parent = mask_from_key(n - 1, parent_key);
        uint16_t required = 0;  // vertices the new vertex must be joined to
        if (f && f->min_degree > 0) {
            for (int v = 0; v < parent.n; ++v) {
                int d = parent.degree(v);
                if (d < f->min_degree - 1) return;  // unfixable by one new vertex
                if (d == f->min_degree - 1) required |= static_cast<uint16_t>(1u << v);
            }
        }
        if (f && f->connectivity >= 2 && !mask_connected(parent.rows.data(), parent.n, 0)) return;
        if (f && f->connectivity >= 3 && !mask_two_connected(parent.rows.data(), parent.n, 0)) return;

        const uint16_t free_bits = full_mask & static_cast<uint16_t>(~required);
        // Enumerate masks containing `required`: required | (subset of free_bits).
        uint16_t sub = 0;
        while (true) {
            const uint16_t mask = required | sub;
            bool degree_ok = !f || std::popcount(static_cast<unsigned>(mask)) >= f->min_degree;
            if (degree_ok) {
                MaskGraph cand = parent;
                cand.n = n;
                cand.rows[n - 1] = mask;
                for (uint16_t m = mask; m;) {
                    int v = std::countr_zero(m);
                    m &= static_cast<uint16_t>(m - 1);
                    cand.rows[v] |= static_cast<uint16_t>(1u << (n - 1));
                }
                if (!f || f->passes(cand)) {
                    uint64_t key = canonical_key(cand);
                    uint64_t h = key * 0x9e3779b97f4a7c15ULL;
                    int shard = static_cast<int>(h >> 58);
                    std::scoped_lock lk(locks[shard]);
                    shards[shard].insert(key);
                }
            }
            if (sub == free_bits) break;
            sub = static_cast<uint16_t>((sub - free_bits) & free_bits);  // next subset
        }
    };

    parallel_chunks(static_cast<long>(parents.size()), jobs, 16, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) process_parent(parents[i]);
    });

    size_t total = 0;
    for (auto& s : shards) total += s.size();
    std::vector<uint64_t> keys;
    keys.reserve(total);
    for (auto& s : shards) keys.insert(keys.end(), s.begin(), s.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace chordcycle
