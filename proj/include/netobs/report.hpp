#pragma once

// Analysis result types shared by the path and cycle deciders.

#include <cstdint>
#include <optional>
#include <vector>

#include "netobs/graph.hpp"
#include "netobs/spectral.hpp"

namespace netobs {

struct OracleSummary {
    std::size_t rank = 0;
    std::size_t full_rank = 0;
    bool agrees = false;

    bool operator==(const OracleSummary&) const = default;
};

struct ObservabilityReport {
    GraphTopology topology;
    NodeSet nodes;
    bool observable = true;
    // Prime powers p^a dividing n that trigger the congruence (odd only for
    // paths; 2 participates for cycles).
    std::vector<std::int64_t> blocking_moduli;
    // Eigenpairs of the topology Laplacian; for unobservable verdicts the
    // eigenvectors vanish on the node set except the simple eigenvalue 4 in
    // single-node cycle reports, which has no vanishing direction.
    std::vector<spectral::EigenPair> unobservable_eigenpairs;
    // Orthonormal vectors spanning the unobservable subspace (X_r)^perp.
    std::vector<std::vector<double>> witness_subspace;
    // Cycle decisions only: consecutive gaps (with the wrap-around last) and
    // their GCD. Empty / zero for paths.
    std::vector<std::int64_t> gaps;
    std::int64_t gap_gcd = 0;
    bool oracle_checked = false;
    std::optional<OracleSummary> oracle;
};

struct MarkSymbol {
    std::int64_t modulus = 0;  // p^a
    std::int64_t residue = 0;  // cycles: class kappa in 1..p^a; 0 for paths

    bool operator==(const MarkSymbol&) const = default;
};

// Per-node symbol lists; a node carries symbol p^a iff it belongs to the
// corresponding unobservable arithmetic-progression set.
struct NodeMarking {
    GraphTopology topology;
    std::vector<std::vector<MarkSymbol>> symbols;  // index 0 -> node 1

    const std::vector<MarkSymbol>& at(std::int64_t node) const {
        return symbols[static_cast<std::size_t>(node - 1)];
    }
};

// Runs the independent rank oracle against the report's verdict and witness
// count, filling oracle / oracle_checked. Cost is one O(n^3) decomposition.
void attach_oracle_check(ObservabilityReport& report);

// Witness hygiene for one report: residual <= 1e-9, exact vanishing on the
// node set, unit norms. Throws std::logic_error with context on violation.
void validate_witnesses(const ObservabilityReport& report);

}  // namespace netobs
