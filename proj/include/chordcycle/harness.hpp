#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chordcycle/cycles.hpp"
#include "chordcycle/graph.hpp"
#include "chordcycle/small_graphs.hpp"

namespace chordcycle {

enum class Verdict { Pass, Fail, NotApplicable };
std::string verdict_name(Verdict v);

struct CheckOutcome {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    std::optional<CycleStats> stats;        // filled on Fail (certificate data)
    std::optional<CycleWitness> offending;  // e.g. a chordless longest cycle
};

// Every longest cycle of a 3-connected graph has a chord. A chordless longest
// cycle exists iff c'(G) = c(G), so the verdict needs only the two lengths;
// on failure the chordless longest cycle itself is attached.
CheckOutcome check_thomassen(const Graph& g);

// c'(G) <= c(G) - k for 2-connected graphs with min degree >= ceil(k/2 + 2).
// Hamiltonian near-misses (wheels, at k = 2) fail the bare inequality; the
// wheel characterization check is the repaired statement.
CheckOutcome check_harvey(const Graph& g, int k);

// c'(G) <= c(G) - 2 for non-hamiltonian 2-connected graphs with min degree 3.
CheckOutcome check_nonham_gap(const Graph& g);

// c(G) = c'(G) + 1 iff G is a wheel, over 2-connected graphs with min degree 3.
CheckOutcome check_wheel_characterization(const Graph& g);

// If c'(G) <= 6 then c(G) >= c'(G) + 2, under the nonham-gap hypotheses.
CheckOutcome check_small_hole_theorem(const Graph& g);

// If G is ell-holed then c(G) >= ell + 2, under the nonham-gap hypotheses.
CheckOutcome check_ell_holed_theorem(const Graph& g, int ell);

// One contraction step of the minimal-counterexample reduction: pick the
// least longest chordless cycle, contract one rim edge, and audit what is
// unconditionally true of the result. The hypothesis (2-connected, min degree
// 3, non-hamiltonian, c = c' realized by a cycle of length >= 4) describes a
// graph that would refute the nonham-gap conjecture, so real desk-scale
// populations never reach the happy path; the audit machinery is exercised by
// the scan anyway and the precondition failures are reported precisely.
struct ReductionAudit {
    Graph reduced;
    std::vector<int> vertex_map;
    CycleWitness base_cycle;       // the chordless longest cycle chosen in g
    Edge contracted;               // its first rim edge (in g's labels)
    CycleWitness contracted_cycle; // image in `reduced`, length k-1
    bool contracted_cycle_induced = false;  // asserted by re-validation
    int reduced_min_degree = 0;             // asserted >= 3 by the theory
    // Recorded, not asserted: these hold for minimal counterexamples only.
    std::optional<int> reduced_c, reduced_c_prime;
    bool reduced_hamiltonian = false;
    bool reduced_two_connected = false;
};

ReductionAudit equivalence_reduction_step(const Graph& g);

struct CheckSpec {
    std::string id;  // thomassen | harvey | nonham-gap | wheel | small-hole | ell-holed
    int k = 2;       // harvey only
    int ell = 7;     // ell-holed only
};

CheckOutcome run_check(const CheckSpec& spec, const Graph& g);

struct PopulationSpec {
    enum class Source { Generated, File };
    Source source = Source::Generated;
    int min_order = 1;
    int max_order = 8;
    GraphFilter filter;
    std::string path;  // graph6 stream file ("-" = stdin is handled by the CLI)

    std::string id() const;
};

struct Counterexample {
    std::string graph6;
    std::string check_id;
    std::string reason;
    std::string certificate_json;  // self-contained: graph6 + hypotheses + witnesses
};

struct CheckReport {
    std::string population_id;
    std::vector<CheckSpec> checks;
    long scanned = 0;
    long unreadable = 0;               // stream entries that failed to parse
    std::vector<long> passes;          // per check
    std::vector<long> skipped;         // per check: hypothesis not met
    std::vector<Counterexample> counterexamples;  // sorted by (graph6, check)
    long cursor_index = 0;
    long elapsed_ms = 0;

    bool all_passed() const { return counterexamples.empty(); }
    // include_volatile=false drops elapsed/timestamp for byte-stable output.
    std::string to_json(bool include_volatile = true) const;
};

struct ScanOptions {
    int jobs = 1;
    std::filesystem::path dump_dir;     // per-counterexample JSON files
    std::filesystem::path cursor_file;  // resumed from when it exists
    int order_guard = SmallGraphEnumerator::kDefaultMaxOrder;
};

// Applies every check to every graph of the population, deterministically
// regardless of parallelism; counterexamples are persisted as they are found
// and the cursor file tracks progress for resumption.
CheckReport scan(const PopulationSpec& pop, const std::vector<CheckSpec>& checks,
                 const ScanOptions& opts);

}  // namespace chordcycle
