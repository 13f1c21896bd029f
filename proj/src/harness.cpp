#include "chordcycle/harness.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "chordcycle/io.hpp"
#include "chordcycle/parallel.hpp"
#include "chordcycle/recognizers.hpp"

namespace chordcycle {

using nlohmann::json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

// Memoized per-graph facts so a multi-check scan computes the expensive
// quantities once per graph.
class FactCache {
public:
    explicit FactCache(const Graph& g) : g_(g) {}

    const Graph& graph() const { return g_; }
    int n() const { return g_.order(); }
    int min_deg() {
        if (!min_deg_) min_deg_ = min_degree(g_);
        return *min_deg_;
    }
    bool two_conn() {
        if (!two_conn_) two_conn_ = static_cast<bool>(is_two_connected(g_));
        return *two_conn_;
    }
    bool three_conn() {
        if (!three_conn_) three_conn_ = two_conn() && static_cast<bool>(is_three_connected(g_));
        return *three_conn_;
    }
    std::optional<int> c() {
        if (!c_done_) {
            c_val_ = circumference_length(g_);
            c_done_ = true;
        }
        return c_val_;
    }
    std::optional<int> c_prime() {
        if (!cp_done_) {
            cp_val_ = induced_circumference_length(g_);
            cp_done_ = true;
        }
        return cp_val_;
    }
    bool hamiltonian() { return c() && *c() == n(); }
    bool wheel() {
        if (!wheel_) wheel_ = is_wheel(g_).has_value();
        return *wheel_;
    }

private:
    const Graph& g_;
    std::optional<int> min_deg_;
    std::optional<bool> two_conn_, three_conn_, wheel_;
    bool c_done_ = false, cp_done_ = false;
    std::optional<int> c_val_, cp_val_;
};

CheckOutcome not_applicable(std::string why) {
    return CheckOutcome{Verdict::NotApplicable, std::move(why), std::nullopt, std::nullopt};
}

CheckOutcome pass(std::string why) {
    return CheckOutcome{Verdict::Pass, std::move(why), std::nullopt, std::nullopt};
}

CheckOutcome fail(const Graph& g, std::string why, std::optional<CycleWitness> offending) {
    CheckOutcome out{Verdict::Fail, std::move(why), cycle_stats(g), std::move(offending)};
    return out;
}

CheckOutcome thomassen_impl(FactCache& f) {
    if (!f.three_conn()) return not_applicable("not 3-connected");
    const int c = *f.c();
    const int cp = *f.c_prime();
    if (cp < c) return pass("c' < c: no longest cycle is chordless");
    // A chordless longest cycle exists exactly when c' = c.
    return fail(f.graph(), "chordless longest cycle (c' = c = " + std::to_string(c) + ")",
                induced_circumference(f.graph()));
}

CheckOutcome harvey_impl(FactCache& f, int k) {
    if (k < 1) throw std::invalid_argument("harvey check needs k >= 1");
    const int need = (k + 1) / 2 + 2;  // ceil(k/2 + 2)
    if (!f.two_conn()) return not_applicable("not 2-connected");
    if (f.min_deg() < need)
        return not_applicable("min degree below " + std::to_string(need));
    const int c = *f.c(), cp = *f.c_prime();
    if (cp <= c - k) return pass("c' <= c - k");
    return fail(f.graph(),
                "c' = " + std::to_string(cp) + " > c - k = " + std::to_string(c - k),
                std::nullopt);
}

CheckOutcome nonham_gap_impl(FactCache& f) {
    if (!f.two_conn()) return not_applicable("not 2-connected");
    if (f.min_deg() < 3) return not_applicable("min degree below 3");
    if (f.hamiltonian()) return not_applicable("hamiltonian");
    const int c = *f.c(), cp = *f.c_prime();
    if (cp <= c - 2) return pass("c' <= c - 2");
    return fail(f.graph(), "gap c - c' = " + std::to_string(c - cp) + " below 2", std::nullopt);
}

CheckOutcome wheel_impl(FactCache& f) {
    if (!f.two_conn()) return not_applicable("not 2-connected");
    if (f.min_deg() < 3) return not_applicable("min degree below 3");
    const int c = *f.c(), cp = *f.c_prime();
    const bool gap_one = c == cp + 1;
    const bool is_w = f.wheel();
    if (gap_one == is_w) return pass(is_w ? "wheel with c = c' + 1" : "gap != 1 and not a wheel");
    if (gap_one) return fail(f.graph(), "c = c' + 1 but the graph is not a wheel", std::nullopt);
    return fail(f.graph(), "wheel with gap != 1", std::nullopt);
}

CheckOutcome small_hole_impl(FactCache& f) {
    if (!f.two_conn()) return not_applicable("not 2-connected");
    if (f.min_deg() < 3) return not_applicable("min degree below 3");
    if (f.hamiltonian()) return not_applicable("hamiltonian");
    const int c = *f.c(), cp = *f.c_prime();
    if (cp > 6) return not_applicable("c' above 6");
    if (c >= cp + 2) return pass("c >= c' + 2");
    return fail(f.graph(), "c' = " + std::to_string(cp) + " but c = " + std::to_string(c),
                std::nullopt);
}

CheckOutcome ell_holed_impl(FactCache& f, int ell) {
    if (ell < 4) throw std::invalid_argument("ell-holed check needs ell >= 4");
    if (!f.two_conn()) return not_applicable("not 2-connected");
    if (f.min_deg() < 3) return not_applicable("min degree below 3");
    if (f.hamiltonian()) return not_applicable("hamiltonian");
    EllHoledResult holed = is_ell_holed(f.graph(), ell);
    if (!holed.holds)
        return not_applicable(holed.no_holes ? "no holes" : "hole of another length");
    const int c = *f.c();
    if (c >= ell + 2) return pass("c >= ell + 2");
    return fail(f.graph(), "ell-holed but c = " + std::to_string(c), std::nullopt);
}

CheckOutcome dispatch(const CheckSpec& spec, FactCache& f) {
    if (spec.id == "thomassen") return thomassen_impl(f);
    if (spec.id == "harvey") return harvey_impl(f, spec.k);
    if (spec.id == "nonham-gap") return nonham_gap_impl(f);
    if (spec.id == "wheel") return wheel_impl(f);
    if (spec.id == "small-hole") return small_hole_impl(f);
    if (spec.id == "ell-holed") return ell_holed_impl(f, spec.ell);
    throw std::invalid_argument("unknown check id: " + spec.id);
}

}  // namespace

CheckOutcome check_thomassen(const Graph& g) {
    FactCache f(g);
    return thomassen_impl(f);
}
CheckOutcome check_harvey(const Graph& g, int k) {
    FactCache f(g);
    return harvey_impl(f, k);
}
CheckOutcome check_nonham_gap(const Graph& g) {
    FactCache f(g);
    return nonham_gap_impl(f);
}
CheckOutcome check_wheel_characterization(const Graph& g) {
    FactCache f(g);
    return wheel_impl(f);
}
CheckOutcome check_small_hole_theorem(const Graph& g) {
    FactCache f(g);
    return small_hole_impl(f);
}
CheckOutcome check_ell_holed_theorem(const Graph& g, int ell) {
    FactCache f(g);
    return ell_holed_impl(f, ell);
}

CheckOutcome run_check(const CheckSpec& spec, const Graph& g) {
    FactCache f(g);
    return dispatch(spec, f);
}

ReductionAudit equivalence_reduction_step(const Graph& g) {
    if (!is_two_connected(g))
        throw std::invalid_argument("reduction step requires a 2-connected graph");
    if (min_degree(g) < 3)
        throw std::invalid_argument("reduction step requires min degree 3");
    auto longest = circumference(g);
    if (!longest) throw std::invalid_argument("reduction step requires a graph with a cycle");
    if (longest->length() == g.order())
        throw std::invalid_argument("reduction step requires a non-hamiltonian graph");
    auto chordless = induced_circumference(g);
    if (!chordless || chordless->length() != longest->length())
        throw std::invalid_argument("reduction step requires c(G) = c'(G)");
    if (chordless->length() < 4)
        throw std::invalid_argument(
            "reduction step requires a longest chordless cycle of length >= 4");

    const int v1 = chordless->vertices[0];
    const int v2 = chordless->vertices[1];
    ContractionResult contracted = contract_edge(g, v1, v2);

    ReductionAudit audit;
    audit.base_cycle = *chordless;
    audit.contracted = {v1, v2};
    std::vector<int> mapped{contracted.vertex_map[v1]};
    for (size_t i = 2; i < chordless->vertices.size(); ++i)
        mapped.push_back(contracted.vertex_map[chordless->vertices[i]]);
    audit.contracted_cycle = make_cycle_witness(std::move(mapped), true);
    audit.contracted_cycle_induced = validate_cycle(contracted.graph, audit.contracted_cycle);
    audit.reduced_min_degree = min_degree(contracted.graph);
    audit.reduced_c = circumference_length(contracted.graph);
    audit.reduced_c_prime = induced_circumference_length(contracted.graph);
    audit.reduced_hamiltonian =
        audit.reduced_c && *audit.reduced_c == contracted.graph.order();
    audit.reduced_two_connected = static_cast<bool>(is_two_connected(contracted.graph));
    audit.reduced = std::move(contracted.graph);
    audit.vertex_map = std::move(contracted.vertex_map);
    return audit;
}

// ---------------------------------------------------------------------------
// Populations and scanning

std::string PopulationSpec::id() const {
    if (source == Source::File) return "file:" + path;
    return "gen:o" + std::to_string(min_order) + "-" + std::to_string(max_order) + ":" +
           filter.id_fragment();
}

namespace {

struct Item {
    std::string line;
    std::optional<Graph> graph;
};

class PopulationStream {
public:
    virtual ~PopulationStream() = default;
    virtual std::optional<Item> next() = 0;
};

class GeneratedStream : public PopulationStream {
public:
    GeneratedStream(const PopulationSpec& pop, int guard, int jobs)
        : pop_(pop), enumerator_(guard), jobs_(jobs), order_(std::max(1, pop.min_order) - 1) {}

    std::optional<Item> next() override {
        while (idx_ >= keys_.size()) {
            if (order_ >= pop_.max_order) return std::nullopt;
            ++order_;
            keys_ = enumerator_.filtered_graphs(order_, pop_.filter, jobs_);
            idx_ = 0;
        }
        Graph g = from_mask_graph(mask_from_key(order_, keys_[idx_++]));
        return Item{write_graph6(g), std::move(g)};
    }

private:
    const PopulationSpec& pop_;
    SmallGraphEnumerator enumerator_;
    int jobs_;
    int order_;
    std::vector<uint64_t> keys_;
    size_t idx_ = 0;
};

class FileStream : public PopulationStream {
public:
    explicit FileStream(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open graph6 stream: " + path);
        }
    }

    std::optional<Item> next() override {
        std::istream& in = file_.is_open() ? file_ : std::cin;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Item item{line, std::nullopt};
            try {
                item.graph = parse_graph6(line);
            } catch (const std::exception&) {
                // unreadable entry: counted, not fatal
            }
            return item;
        }
        return std::nullopt;
    }

private:
    std::ifstream file_;
};

json witness_json(const std::optional<CycleWitness>& w) {
    if (!w) return nullptr;
    return json{{"vertices", w->vertices}, {"length", w->length()}, {"chordless", w->chordless}};
}

std::string certificate_json(const Graph& g, const std::string& g6, const CheckSpec& spec,
                             const CheckOutcome& out) {
    json j;
    j["graph6"] = g6;
    j["check"] = spec.id;
    if (spec.id == "harvey") j["k"] = spec.k;
    if (spec.id == "ell-holed") j["ell"] = spec.ell;
    j["reason"] = out.reason;
    json hyp;
    hyp["n"] = g.order();
    hyp["min_degree"] = min_degree(g);
    hyp["two_connected"] = static_cast<bool>(is_two_connected(g));
    hyp["three_connected"] = static_cast<bool>(is_three_connected(g));
    hyp["wheel"] = is_wheel(g).has_value();
    const CycleStats stats = out.stats ? *out.stats : cycle_stats(g);
    hyp["hamiltonian"] = stats.hamiltonian;
    j["hypothesis"] = hyp;
    json st;
    st["c"] = stats.c() ? json(*stats.c()) : json(nullptr);
    st["c_prime"] = stats.c_prime() ? json(*stats.c_prime()) : json(nullptr);
    st["longest"] = witness_json(stats.longest);
    st["longest_chordless"] = witness_json(stats.longest_chordless);
    j["stats"] = st;
    j["offending"] = witness_json(out.offending);
    return j.dump();
}

json report_core_json(const CheckReport& rep) {
    json j;
    j["schema"] = "chordcycle.report/1";
    j["population"] = rep.population_id;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json cj{{"id", c.id}};
        if (c.id == "harvey") cj["k"] = c.k;
        if (c.id == "ell-holed") cj["ell"] = c.ell;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["scanned"] = rep.scanned;
    j["unreadable"] = rep.unreadable;
    json results = json::array();
    for (size_t i = 0; i < rep.checks.size(); ++i) {
        long fails = 0;
        for (const auto& cx : rep.counterexamples)
            if (cx.check_id == rep.checks[i].id) ++fails;
        results.push_back(json{{"check", rep.checks[i].id},
                               {"passes", rep.passes[i]},
                               {"skipped", rep.skipped[i]},
                               {"counterexamples", fails}});
    }
    j["results"] = results;
    json cxs = json::array();
    for (const auto& cx : rep.counterexamples)
        cxs.push_back(json{{"graph6", cx.graph6},
                           {"check", cx.check_id},
                           {"reason", cx.reason},
                           {"certificate", json::parse(cx.certificate_json)}});
    j["counterexamples"] = cxs;
    j["cursor"] = json{{"population", rep.population_id}, {"index", rep.cursor_index}};
    return j;
}

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void sort_counterexamples(std::vector<Counterexample>& cxs) {
    std::sort(cxs.begin(), cxs.end(), [](const Counterexample& a, const Counterexample& b) {
        if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
        return a.check_id < b.check_id;
    });
}

}  // namespace

std::string CheckReport::to_json(bool include_volatile) const {
    json j = report_core_json(*this);
    if (include_volatile) {
        j["elapsed_ms"] = elapsed_ms;
        j["generated_at"] = iso_now();
    }
    return j.dump(2);
}

CheckReport scan(const PopulationSpec& pop, const std::vector<CheckSpec>& checks,
                 const ScanOptions& opts) {
    if (checks.empty()) throw std::invalid_argument("scan needs at least one check");
    for (const auto& c : checks) {
        if (c.id != "thomassen" && c.id != "harvey" && c.id != "nonham-gap" && c.id != "wheel" &&
            c.id != "small-hole" && c.id != "ell-holed")
            throw std::invalid_argument("unknown check id: " + c.id);
        if (c.id == "harvey" && c.k < 1) throw std::invalid_argument("harvey check needs k >= 1");
        if (c.id == "ell-holed" && c.ell < 4)
            throw std::invalid_argument("ell-holed check needs ell >= 4");
    }
    if (pop.source == PopulationSpec::Source::Generated && pop.max_order > opts.order_guard)
        throw std::invalid_argument("population order " + std::to_string(pop.max_order) +
                                    " exceeds the built-in enumerator guard (" +
                                    std::to_string(opts.order_guard) +
                                    "); ingest a graph6 stream instead");

    CheckReport rep;
    rep.population_id = pop.id();
    rep.checks = checks;
    rep.passes.assign(checks.size(), 0);
    rep.skipped.assign(checks.size(), 0);

    long resume_index = 0;
    if (!opts.cursor_file.empty() && std::filesystem::exists(opts.cursor_file)) {
        std::ifstream in(opts.cursor_file);
        std::stringstream ss;
        ss << in.rdbuf();
        json j = json::parse(ss.str(), nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("corrupt cursor file");
        if (j.at("population").get<std::string>() != rep.population_id)
            throw std::invalid_argument("cursor file belongs to a different population");
        resume_index = j.at("index").get<long>();
        const json& partial = j.at("partial");
        rep.scanned = partial.at("scanned").get<long>();
        rep.unreadable = partial.at("unreadable").get<long>();
        const json& results = partial.at("results");
        if (results.size() != checks.size())
            throw std::invalid_argument("cursor file belongs to a different check set");
        for (size_t i = 0; i < checks.size(); ++i) {
            if (results[i].at("check").get<std::string>() != checks[i].id)
                throw std::invalid_argument("cursor file belongs to a different check set");
            rep.passes[i] = results[i].at("passes").get<long>();
            rep.skipped[i] = results[i].at("skipped").get<long>();
        }
        for (const auto& cj : partial.at("counterexamples")) {
            Counterexample cx;
            cx.graph6 = cj.at("graph6").get<std::string>();
            cx.check_id = cj.at("check").get<std::string>();
            cx.reason = cj.at("reason").get<std::string>();
            cx.certificate_json = cj.at("certificate").dump();
            rep.counterexamples.push_back(std::move(cx));
        }
    }

    std::unique_ptr<PopulationStream> stream;
    if (pop.source == PopulationSpec::Source::Generated)
        stream = std::make_unique<GeneratedStream>(pop, opts.order_guard, opts.jobs);
    else
        stream = std::make_unique<FileStream>(pop.path);

    for (long i = 0; i < resume_index; ++i)
        if (!stream->next()) break;
    rep.cursor_index = resume_index;

    if (!opts.dump_dir.empty()) std::filesystem::create_directories(opts.dump_dir);

    const auto t0 = std::chrono::steady_clock::now();
    const long chunk_size = std::max(512L, 256L * resolve_jobs(opts.jobs));

    auto write_cursor = [&]() {
        if (opts.cursor_file.empty()) return;
        json j;
        j["population"] = rep.population_id;
        j["index"] = rep.cursor_index;
        j["partial"] = report_core_json(rep);
        std::ofstream out(opts.cursor_file);
        out << j.dump(2) << '\n';
    };

    while (true) {
        std::vector<Item> items;
        items.reserve(chunk_size);
        while (static_cast<long>(items.size()) < chunk_size) {
            auto item = stream->next();
            if (!item) break;
            items.push_back(std::move(*item));
        }
        if (items.empty()) break;

        struct Eval {
            std::vector<CheckOutcome> outcomes;
            std::vector<std::string> certificates;
        };
        std::vector<Eval> evals(items.size());
        parallel_chunks(static_cast<long>(items.size()), opts.jobs, 64, [&](long lo, long hi) {
            for (long i = lo; i < hi; ++i) {
                if (!items[i].graph) continue;
                FactCache facts(*items[i].graph);
                Eval& e = evals[i];
                e.outcomes.reserve(checks.size());
                for (const auto& c : checks) {
                    CheckOutcome out = dispatch(c, facts);
                    if (out.verdict == Verdict::Fail)
                        e.certificates.push_back(
                            certificate_json(*items[i].graph, items[i].line, c, out));
                    else
                        e.certificates.emplace_back();
                    e.outcomes.push_back(std::move(out));
                }
            }
        });

        for (size_t i = 0; i < items.size(); ++i) {
            ++rep.cursor_index;
            if (!items[i].graph) {
                ++rep.unreadable;
                continue;
            }
            ++rep.scanned;
            for (size_t ci = 0; ci < checks.size(); ++ci) {
                const CheckOutcome& out = evals[i].outcomes[ci];
                switch (out.verdict) {
                    case Verdict::Pass: ++rep.passes[ci]; break;
                    case Verdict::NotApplicable: ++rep.skipped[ci]; break;
                    case Verdict::Fail: {
                        Counterexample cx{items[i].line, checks[ci].id, out.reason,
                                          evals[i].certificates[ci]};
                        if (!opts.dump_dir.empty()) {
                            std::ofstream f(opts.dump_dir /
                                            ("cx-" + std::to_string(rep.cursor_index - 1) + "-" +
                                             checks[ci].id + ".json"));
                            f << cx.certificate_json << '\n';
                        }
                        rep.counterexamples.push_back(std::move(cx));
                        break;
                    }
                }
            }
        }
        write_cursor();
    }

    sort_counterexamples(rep.counterexamples);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    write_cursor();
    return rep;
}

}  // namespace chordcycle
