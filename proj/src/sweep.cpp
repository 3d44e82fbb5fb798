#include "netobs/sweep.hpp"

#include <algorithm>
#include <random>

#include "netobs/cycle_analysis.hpp"
#include "netobs/oracle.hpp"
#include "netobs/path_analysis.hpp"
#include "netobs/report.hpp"

namespace netobs::sweep {

namespace {

// Runs one configuration: verdict comparison, witness hygiene, witness-count
// vs rank deficiency, and the (L, B) reachability duality.
void check_config(const ObservabilityReport& report, SweepResult& result) {
    ++result.configurations;
    if (!report.observable) ++result.unobservable_configurations;

    const DenseMatrix l = laplacian(report.topology);
    const DenseMatrix c = output_matrix(report.topology, report.nodes);
    const std::size_t n = l.rows();
    const std::size_t rank = oracle::observability_rank(l, c, oracle::RankRoute::Pbh);
    const bool oracle_observable = (rank == n);

    auto flag = [&](std::string detail) {
        result.disagreements.push_back({report.topology.kind, report.topology.n,
                                        report.nodes.labels(), report.observable,
                                        oracle_observable, std::move(detail)});
    };

    if (report.observable != oracle_observable) {
        flag("verdict mismatch: arithmetic rule vs rank(O) = " + std::to_string(rank));
        return;
    }
    if (report.witness_subspace.size() != n - rank) {
        flag("witness count " + std::to_string(report.witness_subspace.size()) +
             " != n - rank = " + std::to_string(n - rank));
        return;
    }
    try {
        validate_witnesses(report);
    } catch (const std::exception& e) {
        flag(e.what());
        return;
    }
    const DenseMatrix b = input_matrix(report.topology, report.nodes);
    const std::size_t reach_rank = oracle::reachability_rank(l, b, oracle::RankRoute::Pbh);
    if (reach_rank != rank)
        flag("duality mismatch: rank(R) = " + std::to_string(reach_rank) +
             ", rank(O) = " + std::to_string(rank));
}

template <typename Analyzer>
void for_each_subset(std::int64_t n, int size, Analyzer&& analyze) {
    std::vector<std::int64_t> combo(static_cast<std::size_t>(size));
    auto rec = [&](auto&& self, int depth, std::int64_t next) -> void {
        if (depth == size) {
            analyze(combo);
            return;
        }
        for (std::int64_t i = next; i <= n; ++i) {
            combo[static_cast<std::size_t>(depth)] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace

SweepResult run_path_sweep(std::int64_t max_n, std::span<const int> subset_sizes,
                           std::size_t random_triples_per_n, unsigned seed) {
    SweepResult result;
    std::mt19937_64 rng(seed);
    for (std::int64_t n = 2; n <= max_n; ++n) {
        for (int size : subset_sizes) {
            if (size == 1) {
                for (std::int64_t i = 1; i <= n; ++i) {
                    if (i != 1 && i != n) ++result.internal_singletons;
                    check_config(path_analysis::single_node(n, i), result);
                }
            } else if (size == 2 || (size == 3 && n <= 12)) {
                if (n < size) continue;
                for_each_subset(n, size, [&](const std::vector<std::int64_t>& combo) {
                    check_config(path_analysis::multi_node(n, NodeSet(combo, n)), result);
                });
            } else if (size == 3) {
                if (n < 3) continue;
                std::uniform_int_distribution<std::int64_t> pick(1, n);
                for (std::size_t draw = 0; draw < random_triples_per_n; ++draw) {
                    std::vector<std::int64_t> combo;
                    while (combo.size() < 3) {
                        const std::int64_t i = pick(rng);
                        if (std::find(combo.begin(), combo.end(), i) == combo.end())
                            combo.push_back(i);
                    }
                    check_config(path_analysis::multi_node(n, NodeSet(combo, n)), result);
                }
            }
        }
    }
    return result;
}

SweepResult run_cycle_sweep(std::int64_t max_n, std::span<const int> subset_sizes,
                            std::int64_t triple_cap) {
    SweepResult result;
    for (std::int64_t n = 3; n <= max_n; ++n) {
        for (int size : subset_sizes) {
            if (size == 1) {
                for (std::int64_t i = 1; i <= n; ++i)
                    check_config(cycle_analysis::single_node(n, i), result);
            } else if (size == 2 || (size == 3 && n <= triple_cap)) {
                if (n < size) continue;
                for_each_subset(n, size, [&](const std::vector<std::int64_t>& combo) {
                    check_config(cycle_analysis::multi_node(n, NodeSet(combo, n)), result);
                });
            }
        }
    }
    return result;
}

}  // namespace netobs::sweep
