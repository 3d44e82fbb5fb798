#include "netobs/path_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netobs/number_theory.hpp"
#include "netobs/oracle.hpp"

namespace netobs::path_analysis {

namespace {

constexpr double kPi = std::numbers::pi;

// Boundary quantities of the block decomposition for an internal node set:
// head = 2(i1-1)+1, the inter-node gaps, tail = 2(n-im)+1. A common block
// eigenvalue with denominator b exists iff b divides all of them, so the
// decision reduces to G = gcd(head, gaps..., tail).
struct BoundaryChain {
    std::int64_t head = 0;
    std::vector<std::int64_t> gaps;
    std::int64_t tail = 0;

    std::int64_t gcd_all() const {
        std::int64_t g = std::gcd(head, tail);
        for (std::int64_t gap : gaps) g = std::gcd(g, gap);
        return g;
    }
};

BoundaryChain boundary_chain(std::int64_t n, const std::vector<std::int64_t>& labels) {
    BoundaryChain chain;
    chain.head = 2 * (labels.front() - 1) + 1;
    chain.tail = 2 * (n - labels.back()) + 1;
    for (std::size_t k = 0; k + 1 < labels.size(); ++k)
        chain.gaps.push_back(labels[k + 1] - labels[k]);
    return chain;
}

// Intersection of the boundary-block spectra on exact reduced angles:
// spec(N_{i1-1}), spec(M_{gap-1})..., spec(N_{n-im}). An empty block (gap 1)
// contributes an empty spectrum and kills the intersection.
std::vector<spectral::CosEigenvalue> block_spectra_intersection(
    std::int64_t n, const std::vector<std::int64_t>& labels) {
    const BoundaryChain chain = boundary_chain(n, labels);
    std::vector<spectral::CosEigenvalue> common = spectral::angles_N((chain.head - 1) / 2);
    auto intersect = [&common](std::vector<spectral::CosEigenvalue> other) {
        std::vector<spectral::CosEigenvalue> next;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        common = std::move(next);
    };
    for (std::int64_t gap : chain.gaps) intersect(spectral::angles_M(gap - 1));
    intersect(spectral::angles_N((chain.tail - 1) / 2));
    return common;
}

// Closed-form eigenvector of the boundary block for angle a/b: for N_nu the
// components are sin((nu+j) a pi / b); for M_mu they are sin(j a pi / b). The
// final Pi N Pi block is the reversed N vector.
std::vector<double> n_block_vector(std::int64_t nu, const spectral::CosEigenvalue& angle) {
    std::vector<double> v(static_cast<std::size_t>(nu));
    for (std::int64_t j = 1; j <= nu; ++j)
        v[static_cast<std::size_t>(j - 1)] =
            std::sin(static_cast<double>(nu + j) * static_cast<double>(angle.num) * kPi /
                     static_cast<double>(angle.den));
    return v;
}

std::vector<double> m_block_vector(std::int64_t mu, const spectral::CosEigenvalue& angle) {
    std::vector<double> w(static_cast<std::size_t>(mu));
    for (std::int64_t j = 1; j <= mu; ++j)
        w[static_cast<std::size_t>(j - 1)] =
            std::sin(static_cast<double>(j) * static_cast<double>(angle.num) * kPi /
                     static_cast<double>(angle.den));
    return w;
}

// Assembles the witness for one common angle by chaining the block
// eigenvectors through the coupling conditions at each zeroed node
// (alpha_{j+1} = -alpha_j * last_j / first_{j+1}); this reproduces the
// alternating v, 0, -Pi v, -v, 0, Pi v, ... pattern for the canonical sets.
std::vector<double> closed_form_witness(std::int64_t n, const std::vector<std::int64_t>& labels,
                                        const spectral::CosEigenvalue& angle) {
    std::vector<std::vector<double>> blocks;
    blocks.push_back(n_block_vector(labels.front() - 1, angle));
    for (std::size_t k = 0; k + 1 < labels.size(); ++k)
        blocks.push_back(m_block_vector(labels[k + 1] - labels[k] - 1, angle));
    {
        auto last = n_block_vector(n - labels.back(), angle);
        std::reverse(last.begin(), last.end());
        blocks.push_back(std::move(last));
    }
    std::vector<double> witness(static_cast<std::size_t>(n), 0.0);
    double alpha = 1.0;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) {
            const auto& prev = blocks[b - 1];
            alpha = -alpha * (prev.empty() ? 0.0 : prev.back()) / blocks[b].front();
            offset = static_cast<std::size_t>(labels[b - 1]);  // skip the zeroed node
        }
        for (std::size_t j = 0; j < blocks[b].size(); ++j)
            witness[offset + j] = alpha * blocks[b][j];
        offset += blocks[b].size();
    }
    return spectral::normalized(std::move(witness));
}

double stencil_residual(const GraphTopology& topology, const spectral::EigenPair& pair) {
    const std::vector<double> lv = laplacian_apply(topology, pair.vector);
    double r = 0.0;
    for (std::size_t i = 0; i < lv.size(); ++i)
        r = std::max(r, std::fabs(lv[i] - pair.eigenvalue * pair.vector[i]));
    return r;
}

spectral::EigenPair witness_pair(const GraphTopology& topology,
                                 const std::vector<std::int64_t>& labels,
                                 const spectral::CosEigenvalue& angle) {
    spectral::EigenPair pair;
    pair.lambda = angle;
    pair.eigenvalue = angle.value;
    pair.vector = closed_form_witness(topology.n, labels, angle);
    if (stencil_residual(topology, pair) > 1e-9) {
        // Fallback: numeric kernel of the stacked [L - lambda I; C].
        const DenseMatrix l = laplacian(topology);
        const DenseMatrix c = output_matrix(topology, NodeSet(labels, topology.n));
        auto kernel = oracle::stacked_kernel(l, c, angle.value);
        if (kernel.size() != 1)
            throw std::logic_error("path witness: stacked kernel dimension " +
                                   std::to_string(kernel.size()) + ", expected 1");
        pair.vector = spectral::normalized(std::move(kernel.front()));
        for (std::int64_t node : labels) pair.vector[static_cast<std::size_t>(node - 1)] = 0.0;
        if (stencil_residual(topology, pair) > 1e-9)
            throw std::logic_error("path witness: residual check failed after fallback");
    }
    return pair;
}

ObservabilityReport decide(std::int64_t n, NodeSet nodes) {
    ObservabilityReport report{.topology = GraphTopology::path(n), .nodes = std::move(nodes)};
    const auto& labels = report.nodes.labels();

    // An external node observes the whole path (nonzero first/last components).
    if (labels.front() == 1 || labels.back() == n) {
        report.observable = true;
        return report;
    }

    const BoundaryChain chain = boundary_chain(n, labels);
    const std::int64_t g = chain.gcd_all();  // odd: head and tail are odd

    // Congruence route: unobservable iff an odd prime p | n divides the whole
    // chain. Every divisor of g is automatically a divisor of n here.
    report.observable = (g == 1);

    // Exact-intersection route over the boundary-block spectra; the two must
    // agree or the decision is unsound.
    const auto common = block_spectra_intersection(n, labels);
    const auto expected = (g >= 3) ? spectral::angles_N((g - 1) / 2)
                                   : std::vector<spectral::CosEigenvalue>{};
    if (common != expected)
        throw std::logic_error("path decision: congruence and spectral routes disagree at n=" +
                               std::to_string(n));

    if (report.observable) return report;

    report.blocking_moduli = numtheory::odd_prime_power_divisors(g);
    for (const auto& angle : common) {
        auto pair = witness_pair(report.topology, labels, angle);
        report.witness_subspace.push_back(pair.vector);
        report.unobservable_eigenpairs.push_back(std::move(pair));
    }
    return report;
}

}  // namespace

ObservabilityReport single_node(std::int64_t n, std::int64_t node) {
    if (node < 1 || node > n)
        throw std::invalid_argument("path single_node: label out of range [1, n]");
    return decide(n, NodeSet({node}, n));
}

ObservabilityReport multi_node(std::int64_t n, const NodeSet& nodes) {
    if (nodes.context_size() != n)
        throw std::invalid_argument("path multi_node: node set sized for a different graph");
    return decide(n, nodes);
}

PrimePowerSet unobservable_set_for_prime_power(std::int64_t n, std::int64_t modulus) {
    if (modulus < 3 || modulus % 2 == 0)
        throw std::invalid_argument("unobservable_set_for_prime_power: modulus must be odd >= 3");
    if (n % modulus != 0)
        throw std::invalid_argument("unobservable_set_for_prime_power: modulus must divide n");
    std::vector<std::int64_t> labels;
    for (std::int64_t l = 1; l <= n / modulus; ++l)
        labels.push_back(l * modulus - (modulus - 1) / 2);
    ObservabilityReport report = multi_node(n, NodeSet(labels, n));
    if (report.observable)
        throw std::logic_error("unobservable_set_for_prime_power: canonical set came out observable");
    PrimePowerSet out{.nodes = report.nodes,
                      .eigenpairs = std::move(report.unobservable_eigenpairs),
                      .witnesses = std::move(report.witness_subspace)};
    return out;
}

NodeMarking mark_nodes(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("mark path: n must be >= 2");
    NodeMarking marking{.topology = GraphTopology::path(n),
                        .symbols = std::vector<std::vector<MarkSymbol>>(static_cast<std::size_t>(n))};
    for (std::int64_t q : numtheory::odd_prime_power_divisors(n))
        for (std::int64_t l = 1; l <= n / q; ++l) {
            const std::int64_t node = l * q - (q - 1) / 2;
            marking.symbols[static_cast<std::size_t>(node - 1)].push_back({q, 0});
        }
    return marking;
}

std::optional<NodeSet> select_observable_set(std::int64_t n, std::size_t max_size) {
    if (n < 2) throw std::invalid_argument("select_observable_set: n must be >= 2");
    if (max_size < 1) return std::nullopt;
    const NodeMarking marking = mark_nodes(n);

    auto symbols_disjoint = [&marking](const std::vector<std::int64_t>& labels) {
        // Intersection of the members' symbol sets must be empty.
        std::vector<MarkSymbol> common = marking.at(labels.front());
        for (std::size_t k = 1; k < labels.size() && !common.empty(); ++k) {
            const auto& node_symbols = marking.at(labels[k]);
            std::erase_if(common, [&node_symbols](const MarkSymbol& s) {
                return std::find(node_symbols.begin(), node_symbols.end(), s) == node_symbols.end();
            });
        }
        return common.empty();
    };

    // Lexicographically first combination of each size, smallest size wins.
    std::vector<std::int64_t> combo;
    auto search = [&](auto&& self, std::size_t size, std::int64_t next) -> std::optional<NodeSet> {
        if (combo.size() == size) {
            if (!symbols_disjoint(combo)) return std::nullopt;
            NodeSet candidate(combo, n);
            if (!multi_node(n, candidate).observable)
                throw std::logic_error("select_observable_set: marking and decision disagree");
            return candidate;
        }
        for (std::int64_t i = next; i <= n; ++i) {
            combo.push_back(i);
            if (auto found = self(self, size, i + 1)) return found;
            combo.pop_back();
        }
        return std::nullopt;
    };
    for (std::size_t size = 1; size <= max_size; ++size) {
        combo.clear();
        if (auto found = search(search, size, 1)) return found;
    }
    return std::nullopt;
}

ObservabilityReport central_node_analysis(std::int64_t n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("central_node_analysis: n must be odd and >= 3");
    ObservabilityReport report = single_node(n, (n + 1) / 2);
    if (report.unobservable_eigenpairs.size() != static_cast<std::size_t>((n - 1) / 2))
        throw std::logic_error("central_node_analysis: expected (n-1)/2 unobservable eigenvalues");
    return report;
}

}  // namespace netobs::path_analysis
