#include "netobs/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace netobs {

std::int64_t max_node_count() {
    static const std::int64_t cap = [] {
        if (const char* env = std::getenv("CONSENSUS_OBS_MAX_N")) {
            const std::int64_t v = std::atoll(env);
            if (v > 0) return v;
        }
        return std::int64_t{10000};
    }();
    return cap;
}

namespace {

void check_size(std::int64_t n, std::int64_t min_n, const char* what) {
    if (n < min_n)
        throw std::invalid_argument(std::string(what) + ": n must be >= " + std::to_string(min_n));
    if (n > max_node_count())
        throw std::invalid_argument(std::string(what) + ": n exceeds the node cap " +
                                    std::to_string(max_node_count()));
}

}  // namespace

GraphTopology GraphTopology::path(std::int64_t n) {
    check_size(n, 1, "path");
    return {GraphKind::Path, n};
}

GraphTopology GraphTopology::cycle(std::int64_t n) {
    check_size(n, 3, "cycle");
    return {GraphKind::Cycle, n};
}

NodeSet::NodeSet(std::vector<std::int64_t> labels, std::int64_t n) : labels_(std::move(labels)), n_(n) {
    if (labels_.empty()) throw std::invalid_argument("NodeSet: empty label list");
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("NodeSet: duplicate labels");
    if (labels_.front() < 1 || labels_.back() > n_)
        throw std::invalid_argument("NodeSet: label out of range [1, n]");
}

bool NodeSet::contains(std::int64_t label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

DenseMatrix laplacian(const GraphTopology& g) {
    const auto n = static_cast<std::size_t>(g.n);
    DenseMatrix L(n, n);
    auto add_edge = [&L](std::size_t i, std::size_t j) {
        L(i, i) += 1.0;
        L(j, j) += 1.0;
        L(i, j) -= 1.0;
        L(j, i) -= 1.0;
    };
    if (g.kind == GraphKind::Path) {
        for (std::size_t i = 0; i + 1 < n; ++i) add_edge(i, i + 1);
    } else {
        for (std::size_t i = 0; i < n; ++i) add_edge(i, (i + 1) % n);
    }
    return L;
}

std::vector<double> laplacian_apply(const GraphTopology& g, std::span<const double> x) {
    const auto n = static_cast<std::size_t>(g.n);
    if (x.size() != n) throw std::invalid_argument("laplacian_apply: size mismatch");
    std::vector<double> y(n, 0.0);
    if (n == 1) return y;
    if (g.kind == GraphKind::Path) {
        y[0] = x[0] - x[1];
        y[n - 1] = x[n - 1] - x[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) y[i] = 2.0 * x[i] - x[i - 1] - x[i + 1];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            y[i] = 2.0 * x[i] - x[(i + n - 1) % n] - x[(i + 1) % n];
    }
    return y;
}

DenseMatrix submatrix_N(std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("submatrix_N: dimension must be >= 1");
    const auto m = static_cast<std::size_t>(nu);
    DenseMatrix N(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        N(i, i) = (i == 0) ? 1.0 : 2.0;
        if (i + 1 < m) {
            N(i, i + 1) = -1.0;
            N(i + 1, i) = -1.0;
        }
    }
    return N;
}

DenseMatrix submatrix_M(std::int64_t mu) {
    if (mu < 0) throw std::invalid_argument("submatrix_M: dimension must be >= 0");
    const auto m = static_cast<std::size_t>(mu);
    DenseMatrix M(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        M(i, i) = 2.0;
        if (i + 1 < m) {
            M(i, i + 1) = -1.0;
            M(i + 1, i) = -1.0;
        }
    }
    return M;
}

DenseMatrix input_matrix(const GraphTopology& g, const NodeSet& s) {
    if (s.context_size() != g.n)
        throw std::invalid_argument("input_matrix: node set sized for a different graph");
    DenseMatrix B(static_cast<std::size_t>(g.n), s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        B(static_cast<std::size_t>(s.labels()[k] - 1), k) = 1.0;
    return B;
}

DenseMatrix output_matrix(const GraphTopology& g, const NodeSet& s) {
    return input_matrix(g, s).transposed();
}

}  // namespace netobs
