#include "netobs/cycle_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netobs/number_theory.hpp"
#include "netobs/oracle.hpp"

namespace netobs::cycle_analysis {

namespace {

constexpr double kPi = std::numbers::pi;

// Angles a/b (reduced, b | g, b >= 2) whose block eigenvector chain closes
// around the ring: the per-block sign is (-1)^{a gap/b}, so the product over
// all gaps is (-1)^{a n / b} and closure requires a(n/b) even.
std::vector<spectral::CosEigenvalue> surviving_angles(std::int64_t n, std::int64_t g) {
    std::vector<spectral::CosEigenvalue> out;
    for (std::int64_t b = 2; b <= g; ++b) {
        if (g % b != 0) continue;
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            if ((a * (n / b)) % 2 != 0) continue;
            out.push_back(spectral::make_cos_eigenvalue(a, b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Prime powers q = p^a dividing g whose residue classes actually block:
// odd q always does; q = 2^a only when 2^{a+1} | n (otherwise every angle
// with denominator 2^a fails closure).
std::vector<std::int64_t> blocking_prime_powers(std::int64_t n, std::int64_t g) {
    std::vector<std::int64_t> out;
    for (std::int64_t q : numtheory::prime_power_divisors(g)) {
        if (q % 2 == 0 && (n % (2 * q)) != 0) continue;
        out.push_back(q);
    }
    return out;
}

// Blockwise closed form for one surviving angle: the arc between consecutive
// observation nodes carries the M-block sine eigenvector sin(t a pi / b),
// scaled by the chained coupling ratio; the survivor condition guarantees the
// scalings close around the ring.
std::vector<double> chain_witness(std::int64_t n, const std::vector<std::int64_t>& labels,
                                  const spectral::CosEigenvalue& angle) {
    constexpr double kPiLocal = std::numbers::pi;
    const double theta = static_cast<double>(angle.num) * kPiLocal / static_cast<double>(angle.den);
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    const std::size_t m = labels.size();
    double alpha = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t gap =
            (j + 1 < m) ? labels[j + 1] - labels[j] : n + labels.front() - labels.back();
        const std::int64_t mu = gap - 1;  // >= 1: a surviving b >= 2 divides every gap
        if (j > 0) {
            const std::int64_t prev_gap = labels[j] - labels[j - 1];
            alpha = -alpha * std::sin(static_cast<double>(prev_gap - 1) * theta) / std::sin(theta);
        }
        for (std::int64_t t = 1; t <= mu; ++t)
            v[static_cast<std::size_t>((labels[j] - 1 + t) % n)] =
                alpha * std::sin(static_cast<double>(t) * theta);
    }
    return spectral::normalized(std::move(v));
}

double stencil_residual(const GraphTopology& topology, const spectral::EigenPair& pair) {
    const std::vector<double> lv = laplacian_apply(topology, pair.vector);
    double r = 0.0;
    for (std::size_t i = 0; i < lv.size(); ++i)
        r = std::max(r, std::fabs(lv[i] - pair.eigenvalue * pair.vector[i]));
    return r;
}

spectral::EigenPair make_witness(const GraphTopology& topology, const NodeSet& nodes,
                                 const spectral::CosEigenvalue& angle) {
    spectral::EigenPair pair;
    pair.lambda = angle;
    pair.eigenvalue = angle.value;
    pair.vector = chain_witness(topology.n, nodes.labels(), angle);
    if (stencil_residual(topology, pair) > 1e-9) {
        // Fallback: numeric kernel of the stacked [L - lambda I; C].
        const DenseMatrix l = laplacian(topology);
        const DenseMatrix c = output_matrix(topology, nodes);
        auto kernel = oracle::stacked_kernel(l, c, angle.value);
        if (kernel.size() != 1)
            throw std::logic_error("cycle witness: stacked kernel dimension " +
                                   std::to_string(kernel.size()) + ", expected 1");
        pair.vector = spectral::normalized(std::move(kernel.front()));
        for (std::int64_t node : nodes.labels())
            pair.vector[static_cast<std::size_t>(node - 1)] = 0.0;
        if (stencil_residual(topology, pair) > 1e-9)
            throw std::logic_error("cycle witness: residual check failed after fallback");
    }
    return pair;
}

}  // namespace

std::vector<std::int64_t> gap_vector(std::int64_t n, const NodeSet& nodes) {
    if (nodes.context_size() != n)
        throw std::invalid_argument("gap_vector: node set sized for a different graph");
    const auto& labels = nodes.labels();
    std::vector<std::int64_t> gaps;
    for (std::size_t k = 0; k + 1 < labels.size(); ++k) gaps.push_back(labels[k + 1] - labels[k]);
    gaps.push_back(n + labels.front() - labels.back());
    return gaps;
}

ObservabilityReport single_node(std::int64_t n, std::int64_t node) {
    const GraphTopology topology = GraphTopology::cycle(n);
    if (node < 1 || node > n)
        throw std::invalid_argument("cycle single_node: label out of range [1, n]");
    ObservabilityReport report{.topology = topology, .nodes = NodeSet({node}, n)};
    report.gaps = gap_vector(n, report.nodes);
    report.gap_gcd = n;
    report.observable = false;
    report.blocking_moduli = blocking_prime_powers(n, n);

    // All distinct nonzero eigenvalues 2 - 2 cos(2 pi j / n), j = 1..floor(n/2).
    // Doubled ones (2j < n) hide the sine mode centred on the node; for even n
    // the simple eigenvalue 4 keeps its alternating eigenvector.
    for (std::int64_t j = 1; 2 * j <= n; ++j) {
        spectral::EigenPair pair;
        pair.lambda = spectral::make_cos_eigenvalue(2 * j, n);
        pair.eigenvalue = pair.lambda.value;
        std::vector<double> v(static_cast<std::size_t>(n));
        const bool doubled = 2 * j < n;
        for (std::int64_t l = 1; l <= n; ++l) {
            const double theta = 2.0 * kPi * static_cast<double>(j) *
                                 static_cast<double>(l - node) / static_cast<double>(n);
            v[static_cast<std::size_t>(l - 1)] = doubled ? std::sin(theta) : std::cos(theta);
        }
        if (doubled) v[static_cast<std::size_t>(node - 1)] = 0.0;
        pair.vector = spectral::normalized(std::move(v));
        if (doubled) report.witness_subspace.push_back(pair.vector);
        report.unobservable_eigenpairs.push_back(std::move(pair));
    }
    return report;
}

ObservabilityReport multi_node(std::int64_t n, const NodeSet& nodes) {
    const GraphTopology topology = GraphTopology::cycle(n);
    if (nodes.context_size() != n)
        throw std::invalid_argument("cycle multi_node: node set sized for a different graph");
    if (nodes.size() < 2)
        throw std::invalid_argument("cycle multi_node: use single_node for one label");
    ObservabilityReport report{.topology = topology, .nodes = nodes};
    report.gaps = gap_vector(n, nodes);
    report.gap_gcd = numtheory::gcd_list(report.gaps);

    const auto survivors = surviving_angles(n, report.gap_gcd);
    report.observable = survivors.empty();
    if (report.observable) return report;

    report.blocking_moduli = blocking_prime_powers(n, report.gap_gcd);
    for (const auto& angle : survivors) {
        auto pair = make_witness(topology, nodes, angle);
        report.witness_subspace.push_back(pair.vector);
        report.unobservable_eigenpairs.push_back(std::move(pair));
    }
    return report;
}

PeriodicSet unobservable_cycle_set(std::int64_t n, std::int64_t p, std::int64_t kappa) {
    GraphTopology::cycle(n);  // validates n
    if (p < 2 || n % p != 0)
        throw std::invalid_argument("unobservable_cycle_set: p must divide n, p >= 2");
    if (kappa < 1 || kappa > p)
        throw std::invalid_argument("unobservable_cycle_set: kappa must lie in [1, p]");
    std::vector<std::int64_t> labels;
    for (std::int64_t l = 0; l < n / p; ++l) labels.push_back(kappa + l * p);
    PeriodicSet out{.nodes = NodeSet(labels, n), .eigenpairs = spectral::eigen_M(p - 1)};

    if (kappa != 1) return out;  // general-kappa witnesses come from multi_node

    // Closed-form block witnesses [0 w, 0 (-1)^nu w, ...]; only the closure
    // survivors (nu (n/p) even) are eigenvectors of the cycle Laplacian.
    const GraphTopology cycle_topology = GraphTopology::cycle(n);
    for (std::int64_t nu = 1; nu < p; ++nu) {
        if ((nu * (n / p)) % 2 != 0) continue;
        const auto& w = out.eigenpairs[static_cast<std::size_t>(nu - 1)].vector;
        std::vector<double> v(static_cast<std::size_t>(n), 0.0);
        double alpha = 1.0;
        for (std::int64_t blk = 0; blk < n / p; ++blk) {
            for (std::int64_t j = 0; j < p - 1; ++j)
                v[static_cast<std::size_t>(blk * p + 1 + j)] = alpha * w[static_cast<std::size_t>(j)];
            if (nu % 2 != 0) alpha = -alpha;
        }
        spectral::EigenPair pair;
        pair.lambda = out.eigenpairs[static_cast<std::size_t>(nu - 1)].lambda;
        pair.eigenvalue = pair.lambda.value;
        pair.vector = spectral::normalized(std::move(v));
        if (stencil_residual(cycle_topology, pair) > 1e-9)
            throw std::logic_error("unobservable_cycle_set: block witness residual check failed");
        out.witnesses.push_back(std::move(pair.vector));
    }
    return out;
}

NodeMarking mark_nodes(std::int64_t n) {
    const GraphTopology topology = GraphTopology::cycle(n);
    NodeMarking marking{.topology = topology,
                        .symbols = std::vector<std::vector<MarkSymbol>>(static_cast<std::size_t>(n))};
    for (std::int64_t q : numtheory::prime_power_divisors(n))
        for (std::int64_t kappa = 1; kappa <= q; ++kappa)
            for (std::int64_t l = 0; l < n / q; ++l)
                marking.symbols[static_cast<std::size_t>(kappa + l * q - 1)].push_back({q, kappa});
    return marking;
}

}  // namespace netobs::cycle_analysis
