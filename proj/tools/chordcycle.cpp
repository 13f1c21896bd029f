#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "chordcycle/generators.hpp"
#include "chordcycle/harness.hpp"
#include "chordcycle/io.hpp"
#include "chordcycle/recognizers.hpp"
#include "chordcycle/spec_json.hpp"

using namespace chordcycle;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string join_vertices(const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

void analyze_one(const Graph& g, const std::string& source_line, bool as_json) {
    const CycleStats stats = cycle_stats(g);
    const auto two = is_two_connected(g);
    const auto three = is_three_connected(g);
    const auto w = is_wheel(g);
    if (as_json) {
        json j;
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        j["edges"] = g.edge_count();
        j["min_degree"] = min_degree(g);
        j["connected"] = is_connected(g);
        j["two_connected"] = two.two_connected;
        j["three_connected"] = three.three_connected;
        j["c"] = stats.c() ? json(*stats.c()) : json(nullptr);
        j["c_prime"] = stats.c_prime() ? json(*stats.c_prime()) : json(nullptr);
        j["hamiltonian"] = stats.hamiltonian;
        j["wheel"] = w.has_value();
        if (w) j["wheel_center"] = w->center;
        j["longest"] = stats.longest ? json::parse(to_json_string(*stats.longest)) : json(nullptr);
        j["longest_chordless"] = stats.longest_chordless
                                     ? json::parse(to_json_string(*stats.longest_chordless))
                                     : json(nullptr);
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << "graph: " << (source_line.empty() ? write_graph6(g) : source_line) << '\n';
    std::cout << "n: " << g.order() << "  edges: " << g.edge_count()
              << "  min_degree: " << min_degree(g) << '\n';
    std::cout << "connected: " << (is_connected(g) ? "yes" : "no")
              << "  two_connected: " << (two.two_connected ? "yes" : "no")
              << "  three_connected: " << (three.three_connected ? "yes" : "no") << '\n';
    if (stats.longest)
        std::cout << "c: " << stats.longest->length() << "  witness: "
                  << join_vertices(stats.longest->vertices) << '\n';
    else
        std::cout << "c: none (acyclic)\n";
    if (stats.longest_chordless)
        std::cout << "c_prime: " << stats.longest_chordless->length() << "  witness: "
                  << join_vertices(stats.longest_chordless->vertices) << '\n';
    else
        std::cout << "c_prime: none (acyclic)\n";
    std::cout << "hamiltonian: " << (stats.hamiltonian ? "yes" : "no") << '\n';
    if (w)
        std::cout << "wheel: yes (center " << w->center << ")\n";
    else
        std::cout << "wheel: no\n";
}

int cmd_analyze(const std::string& input, bool edge_list, bool as_json) {
    if (edge_list) {
        Graph g = parse_edge_list_text(read_all(input));
        analyze_one(g, "", as_json);
        return kExitPass;
    }
    std::string text = read_all(input);
    std::istringstream in(text);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        analyze_one(g, line, as_json);
        any = true;
    }
    if (!any) throw std::invalid_argument("no graphs in input");
    return kExitPass;
}

void emit_framework(const FrameworkGraph& fg, bool as_json) {
    const CycleWitness witness = framework_witness_cycle(fg);
    if (as_json) {
        json j;
        j["graph6"] = write_graph6(fg.graph);
        j["ell"] = fg.spec.ell;
        j["k"] = fg.spec.k;
        j["n"] = fg.graph.order();
        j["witness"] = json::parse(to_json_string(witness));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << write_graph6(fg.graph) << '\n';
        std::cout << to_json_string(witness) << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"chordcycle: exact circumference / induced-circumference toolkit"};
    app.require_subcommand(1);

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "compute cycle statistics for input graphs");
    std::string an_input = "-";
    bool an_edge_list = false, an_json = false;
    std::string an_format = "human";
    analyze->add_option("-i,--input", an_input, "graph6 lines or edge-list file ('-' = stdin)");
    analyze->add_flag("--edge-list", an_edge_list, "input is edge-list text (n, then 'u v' lines)");
    analyze->add_option("--format", an_format, "human|json")->check(CLI::IsMember({"human", "json"}));
    analyze->add_flag("--json", an_json, "shorthand for --format json");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "emit graphs from the built-in families");
    std::string family;
    generate->add_option("family", family, "wheel | blowup-cycle | framework")->required();
    int rim = 6, ell = 7, kk = 3, random_count = 0, max_vertices = 14;
    unsigned seed = 0x5eed;
    bool canonical = false, gen_json = false;
    std::string spec_path;
    generate->add_option("--rim", rim, "wheel rim length");
    generate->add_option("--ell", ell, "hole length");
    generate->add_option("--k", kk, "number of vertical paths");
    generate->add_flag("--canonical", canonical, "use the canonical framework family");
    generate->add_option("--spec", spec_path, "JSON spec file");
    generate->add_option("--random-count", random_count, "emit N random blow-up-of-cycle specs");
    generate->add_option("--max-vertices", max_vertices, "vertex budget for random specs");
    generate->add_option("--seed", seed, "RNG seed for random specs");
    generate->add_flag("--json", gen_json, "emit JSON objects instead of bare graph6");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "scan a population for conjecture counterexamples");
    std::string conjecture;
    verify->add_option("--conjecture", conjecture,
                       "thomassen | harvey | nonham-gap | wheel | small-hole | ell-holed")
        ->required();
    int min_order = 1, max_order = 8, min_deg = 0, connectivity = 0, vk = 2, vell = 7, jobs = 0;
    std::string stream_path, resume_path, dump_dir, v_format = "human";
    bool v_json = false;
    verify->add_option("--min-order", min_order, "smallest order of the generated population");
    verify->add_option("--max-order", max_order, "largest order of the generated population");
    verify->add_option("--min-degree", min_deg, "generated-population minimum degree filter");
    verify->add_option("--connectivity", connectivity, "generated-population connectivity filter (0-3)");
    verify->add_option("--stream", stream_path, "scan a graph6 stream file instead ('-' = stdin)");
    verify->add_option("--k", vk, "parameter k for the harvey check");
    verify->add_option("--ell", vell, "hole length for the ell-holed check");
    verify->add_option("--resume", resume_path, "cursor file (resumed from when present)");
    verify->add_option("--dump", dump_dir, "directory for counterexample certificates");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--format", v_format, "human|json")->check(CLI::IsMember({"human", "json"}));
    verify->add_flag("--json", v_json, "shorthand for --format json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (analyze->parsed()) return cmd_analyze(an_input, an_edge_list, an_json || an_format == "json");

    if (generate->parsed()) {
        if (family == "wheel") {
            Graph g = wheel(rim);
            if (gen_json) {
                json j{{"graph6", write_graph6(g)}, {"rim", rim}, {"n", g.order()}};
                std::cout << j.dump() << '\n';
            } else {
                std::cout << write_graph6(g) << '\n';
            }
            return kExitPass;
        }
        if (family == "blowup-cycle") {
            std::vector<BlowupCycleSpec> specs;
            if (!spec_path.empty()) {
                specs.push_back(blowup_spec_from_json(read_all(spec_path)));
            } else if (random_count > 0) {
                std::mt19937 rng(seed);
                for (int i = 0; i < random_count; ++i)
                    specs.push_back(random_blowup_spec(ell, max_vertices, rng));
            } else {
                throw std::invalid_argument("blowup-cycle needs --spec or --random-count");
            }
            for (const auto& spec : specs) {
                BlowupCycleResult res = blowup_of_cycle(spec);
                if (gen_json) {
                    json j{{"graph6", write_graph6(res.graph)},
                           {"ell", spec.ell},
                           {"n", res.graph.order()},
                           {"spec", json::parse(to_json_string(spec))}};
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << write_graph6(res.graph) << '\n';
                }
            }
            return kExitPass;
        }
        if (family == "framework") {
            FrameworkSpec spec;
            if (!spec_path.empty())
                spec = framework_spec_from_json(read_all(spec_path));
            else if (canonical)
                spec = canonical_framework_spec(ell, kk);
            else
                throw std::invalid_argument("framework needs --spec or --canonical");
            emit_framework(framework(spec), gen_json);
            return kExitPass;
        }
        throw std::invalid_argument("unknown family: " + family);
    }

    // verify
    PopulationSpec pop;
    if (!stream_path.empty()) {
        pop.source = PopulationSpec::Source::File;
        pop.path = stream_path;
    } else {
        pop.source = PopulationSpec::Source::Generated;
        pop.min_order = min_order;
        pop.max_order = max_order;
        pop.filter.min_degree = min_deg;
        pop.filter.connectivity = connectivity;
    }
    CheckSpec check;
    check.id = conjecture;
    check.k = vk;
    check.ell = vell;
    ScanOptions opts;
    opts.jobs = jobs;
    if (!dump_dir.empty()) opts.dump_dir = dump_dir;
    if (!resume_path.empty()) opts.cursor_file = resume_path;
    if (const char* guard_env = std::getenv("CHORDCYCLE_MAX_N"))
        opts.order_guard = std::atoi(guard_env);

    CheckReport rep = scan(pop, {check}, opts);
    if (v_json || v_format == "json") {
        std::cout << rep.to_json() << '\n';
    } else {
        std::cout << "population: " << rep.population_id << '\n';
        std::cout << "scanned: " << rep.scanned << "  unreadable: " << rep.unreadable << '\n';
        std::cout << "check " << check.id << ": passes " << rep.passes[0] << ", skipped "
                  << rep.skipped[0] << ", counterexamples " << rep.counterexamples.size() << '\n';
        for (const auto& cx : rep.counterexamples)
            std::cout << "counterexample: " << cx.graph6 << "  (" << cx.reason << ")\n";
        std::cout << (rep.all_passed() ? "RESULT: pass" : "RESULT: counterexample found") << '\n';
    }
    return rep.all_passed() ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
