#pragma once

// Cycle-graph reachability/observability: the gap-GCD decision with the ring
// closure condition, unobservable sets and eigenpairs, residue-class markings.

#include <cstdint>

#include "netobs/report.hpp"

namespace netobs::cycle_analysis {

// Gaps between consecutive labels, wrapping once: (i2-i1, ..., n+i1-im).
// They sum to n; a singleton yields the single gap {n}.
std::vector<std::int64_t> gap_vector(std::int64_t n, const NodeSet& nodes);

// A single node never observes a cycle: every doubled eigenvalue hides one
// direction. Reports all ceil((n-1)/2) distinct nonzero eigenvalues; the
// witnesses cover exactly the doubled ones (for even n the simple eigenvalue
// 4 has the alternating eigenvector, which vanishes nowhere).
ObservabilityReport single_node(std::int64_t n, std::int64_t node);

// Node set with |s| >= 2. With g = gcd of the gaps, a candidate angle a/b
// (b | g, reduced) yields an eigenvector vanishing on the set iff the block
// scalings close around the ring, i.e. a(n/b) is even; the set is observable
// iff no angle survives. (g = 1 is always observable; g = 2 with n = 2 mod 4
// is the closure-killed case.) Witnesses come from the stacked PBH kernel.
ObservabilityReport multi_node(std::int64_t n, const NodeSet& nodes);

struct PeriodicSet {
    NodeSet nodes;
    // The p-1 eigenvalues 2 - 2 cos(nu pi / p) as eigenpairs of M_{p-1} with
    // the w_nu sine eigenvectors.
    std::vector<spectral::EigenPair> eigenpairs;
    // kappa = 1 only: closed-form block witnesses [0 w 0 (+|-)w ...] for the
    // closure survivors, residual-verified against the cycle Laplacian.
    std::vector<std::vector<double>> witnesses;
};

// I_o^p = {kappa + l p : l = 0..n/p-1} for a prime p | n and kappa in 1..p.
PeriodicSet unobservable_cycle_set(std::int64_t n, std::int64_t p, std::int64_t kappa);

// Symbol (p^a, kappa) on the residue class {kappa + l p^a} for every prime
// power p^a | n (p = 2 included) and every kappa.
NodeMarking mark_nodes(std::int64_t n);

}  // namespace netobs::cycle_analysis
