#include "netobs/report.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "netobs/kernels.hpp"
#include "netobs/oracle.hpp"

namespace netobs {

void attach_oracle_check(ObservabilityReport& report) {
    const DenseMatrix l = laplacian(report.topology);
    const DenseMatrix c = output_matrix(report.topology, report.nodes);
    const std::size_t n = l.rows();
    const std::size_t rank = oracle::observability_rank(l, c);
    OracleSummary summary;
    summary.rank = rank;
    summary.full_rank = n;
    summary.agrees = (report.observable == (rank == n)) &&
                     (report.witness_subspace.size() == n - rank);
    report.oracle = summary;
    report.oracle_checked = true;
}

void validate_witnesses(const ObservabilityReport& report) {
    const auto n = static_cast<std::size_t>(report.topology.n);
    if (report.witness_subspace.size() > report.unobservable_eigenpairs.size())
        throw std::logic_error("report: more witnesses than unobservable eigenvalues");
    for (std::size_t k = 0; k < report.witness_subspace.size(); ++k) {
        const auto& w = report.witness_subspace[k];
        if (w.size() != n) throw std::logic_error("report: witness has wrong dimension");
        for (std::int64_t node : report.nodes.labels())
            if (std::fabs(w[static_cast<std::size_t>(node - 1)]) > 1e-12)
                throw std::logic_error("report: witness does not vanish on node " +
                                       std::to_string(node));
        const double norm = std::sqrt(kernels::dot(w.data(), w.data(), w.size()));
        if (std::fabs(norm - 1.0) > 1e-9)
            throw std::logic_error("report: witness is not unit norm");
        // Rayleigh quotient pins the eigenvalue; residual against it.
        const std::vector<double> lw = laplacian_apply(report.topology, w);
        const double lambda = kernels::dot(w.data(), lw.data(), w.size());
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual = std::max(residual, std::fabs(lw[i] - lambda * w[i]));
        if (residual > 1e-9)
            throw std::logic_error("report: witness residual " + std::to_string(residual) +
                                   " exceeds 1e-9");
    }
}

}  // namespace netobs
