#pragma once

// Path/cycle topologies with the canonical 1-based labeling, their Laplacians,
// the boundary blocks N_nu / M_mu, and node-selector input/output matrices.

#include <cstdint>
#include <vector>

#include "netobs/matrix.hpp"

namespace netobs {

enum class GraphKind { Path, Cycle };

// Node-count cap for all constructors (analyses are O(n^3) only in the
// oracle). CONSENSUS_OBS_MAX_N overrides the default of 10000.
std::int64_t max_node_count();

struct GraphTopology {
    GraphKind kind = GraphKind::Path;
    std::int64_t n = 1;

    static GraphTopology path(std::int64_t n);   // n >= 1
    static GraphTopology cycle(std::int64_t n);  // n >= 3

    bool operator==(const GraphTopology&) const = default;
};

// Strictly increasing 1-based labels within [1, n]. Duplicates rejected.
class NodeSet {
public:
    NodeSet(std::vector<std::int64_t> labels, std::int64_t n);

    const std::vector<std::int64_t>& labels() const { return labels_; }
    std::int64_t context_size() const { return n_; }
    std::size_t size() const { return labels_.size(); }
    bool contains(std::int64_t label) const;

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<std::int64_t> labels_;
    std::int64_t n_ = 0;
};

// L = D - A; symmetric PSD with zero row sums.
DenseMatrix laplacian(const GraphTopology& g);

// y = L x without materializing L (3-point stencil), O(n).
std::vector<double> laplacian_apply(const GraphTopology& g, std::span<const double> x);

// Tridiagonal block with diagonal (1, 2, ..., 2); nu >= 1.
DenseMatrix submatrix_N(std::int64_t nu);

// Tridiagonal block with all-2 diagonal; mu = 0 yields the empty 0x0 matrix.
DenseMatrix submatrix_M(std::int64_t mu);

// B = [e_{i1} | ... | e_{im}]  (n x m).
DenseMatrix input_matrix(const GraphTopology& g, const NodeSet& s);
// C = B^T  (m x n).
DenseMatrix output_matrix(const GraphTopology& g, const NodeSet& s);

}  // namespace netobs
