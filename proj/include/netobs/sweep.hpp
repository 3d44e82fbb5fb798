#pragma once

// Rule-vs-oracle verification sweeps: for every configuration the
// number-theoretic verdict is compared with the independent rank oracle, the
// witnesses are validated, the witness count is checked against n - rank(O),
// and the reachability/observability duality is exercised.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netobs/graph.hpp"

namespace netobs::sweep {

struct Disagreement {
    GraphKind kind = GraphKind::Path;
    std::int64_t n = 0;
    std::vector<std::int64_t> nodes;
    bool rule_observable = false;
    bool oracle_observable = false;
    std::string detail;
};

struct SweepResult {
    std::size_t configurations = 0;
    std::size_t internal_singletons = 0;
    std::size_t unobservable_configurations = 0;
    std::vector<Disagreement> disagreements;

    bool clean() const { return disagreements.empty(); }
};

// All subsets of the requested sizes for n = 2..max_n (sizes 1 and 2
// exhaustive; size 3 sampled with random_triples_per_n draws per n).
SweepResult run_path_sweep(std::int64_t max_n, std::span<const int> subset_sizes,
                           std::size_t random_triples_per_n = 100, unsigned seed = 42);

// All pairs for n = 3..max_n and, when size 3 is requested, all triples for
// n <= triple_cap.
SweepResult run_cycle_sweep(std::int64_t max_n, std::span<const int> subset_sizes,
                            std::int64_t triple_cap = 24);

}  // namespace netobs::sweep
