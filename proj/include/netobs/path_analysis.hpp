#pragma once

// Path-graph reachability/observability decisions: congruence verdicts with
// an exact spectral-intersection cross-check, closed-form unobservable
// eigenpairs and witnesses, node markings, and observable-set selection.

#include <cstdint>
#include <optional>

#include "netobs/report.hpp"

namespace netobs::path_analysis {

// Single control/observation node; external nodes (1, n) are always
// observable. Unobservable iff some odd prime p | n divides 2i - 1.
ObservabilityReport single_node(std::int64_t n, std::int64_t node);

// Node set; any external node makes the set observable. Unobservable iff some
// odd prime p | n divides 2(i1-1)+1, every gap, and 2(n-im)+1. The verdict is
// recomputed from the exact intersection of the boundary-block spectra and
// the operation throws if the two routes ever disagree.
ObservabilityReport multi_node(std::int64_t n, const NodeSet& nodes);

struct PrimePowerSet {
    NodeSet nodes;
    // Unobservable eigenpairs of the path Laplacian; eigenvectors are the
    // witnesses (vanishing on the node set).
    std::vector<spectral::EigenPair> eigenpairs;
    std::vector<std::vector<double>> witnesses;
};

// I_o^m = {l m - (m-1)/2 : l = 1..n/m} for an odd modulus m = p^a dividing n,
// with eigenvalues 2 - 2 cos((2 nu - 1) pi / m) and alternating-block
// witnesses, residual-verified.
PrimePowerSet unobservable_set_for_prime_power(std::int64_t n, std::int64_t modulus);

// Marking diagram: symbol p^a on the nodes of I_o^{p^a} for every odd
// prime power dividing n. Unmarked nodes are exactly the observable singletons.
NodeMarking mark_nodes(std::int64_t n);

// Smallest node set (lexicographic tie-break) whose symbol sets have empty
// common intersection; verified through multi_node before returning. A set
// always exists once max_size reaches the number of distinct odd prime
// factors of n plus one (and in fact size 1 suffices: an external node
// carries no symbols).
std::optional<NodeSet> select_observable_set(std::int64_t n, std::size_t max_size);

// Central node of an odd path: (n-1)/2 unobservable eigenvalues, witnesses of
// the form [v; 0; -Pi v].
ObservabilityReport central_node_analysis(std::int64_t n);

}  // namespace netobs::path_analysis
