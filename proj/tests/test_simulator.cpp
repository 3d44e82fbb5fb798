#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "netobs/cycle_analysis.hpp"
#include "netobs/kernels.hpp"
#include "netobs/path_analysis.hpp"
#include "netobs/simulator.hpp"

using namespace netobs;

namespace {

std::vector<double> random_state(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    return x;
}

double norm2(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

TEST_CASE("consensus fixed point stays put") {
    for (sim::Mode mode : {sim::Mode::ContinuousRK4, sim::Mode::DiscreteEpsilon}) {
        sim::SimConfig cfg{.topology = GraphTopology::path(5),
                           .io_nodes = NodeSet({1}, 5),
                           .mode = mode,
                           .horizon = mode == sim::Mode::ContinuousRK4 ? 5.0 : 50.0};
        const std::vector<double> ones(5, 1.0);
        const auto traj = sim::simulate(cfg, ones);
        for (const auto& state : traj.states)
            for (double v : state) CHECK(std::fabs(v - 1.0) <= 1e-12);
    }
}

TEST_CASE("states converge to the mean of the initial condition") {
    for (const GraphTopology& g : {GraphTopology::path(4), GraphTopology::cycle(5)}) {
        const auto n = static_cast<std::size_t>(g.n);
        sim::SimConfig cfg{.topology = g, .io_nodes = NodeSet({1}, g.n), .horizon = 50.0};
        const auto x0 = random_state(n, 31);
        const double mean = std::accumulate(x0.begin(), x0.end(), 0.0) / static_cast<double>(n);
        const auto traj = sim::simulate(cfg, x0);
        for (double v : traj.states.back()) CHECK(std::fabs(v - mean) <= 1e-6);
    }
}

TEST_CASE("component sum is conserved under zero input") {
    sim::SimConfig cfg{.topology = GraphTopology::cycle(7),
                       .io_nodes = NodeSet({2}, 7),
                       .horizon = 20.0};
    const auto x0 = random_state(7, 5);
    const double sum0 = std::accumulate(x0.begin(), x0.end(), 0.0);
    const auto traj = sim::simulate(cfg, x0);
    for (const auto& state : traj.states) {
        const double sum = std::accumulate(state.begin(), state.end(), 0.0);
        CHECK(std::fabs(sum - sum0) <= 1e-10);
    }
}

TEST_CASE("state norm is non-increasing under zero input") {
    sim::SimConfig cfg{.topology = GraphTopology::path(6),
                       .io_nodes = NodeSet({3}, 6),
                       .horizon = 10.0};
    const auto traj = sim::simulate(cfg, random_state(6, 17));
    for (std::size_t k = 1; k < traj.states.size(); ++k)
        CHECK(norm2(traj.states[k]) <= norm2(traj.states[k - 1]) + 1e-12);
}

TEST_CASE("unobservable witness produces an identically zero output") {
    const auto report = path_analysis::single_node(6, 2);
    sim::SimConfig cfg{.topology = report.topology, .io_nodes = report.nodes, .horizon = 20.0};
    const auto traj = sim::simulate(cfg, report.witness_subspace.at(0));
    for (const auto& y : traj.outputs)
        for (double v : y) CHECK(std::fabs(v) <= 1e-8);
}

TEST_CASE("indistinguishability demos") {
    const auto path_report = path_analysis::single_node(6, 2);
    const auto demo = sim::indistinguishability_demo(path_report.topology, path_report.nodes,
                                                     path_report.witness_subspace.at(0));
    CHECK(demo.max_gap_continuous <= 1e-7);
    CHECK(demo.max_gap_discrete <= 1e-7);

    const auto cyc = cycle_analysis::multi_node(15, NodeSet({4, 13}, 15));
    const auto cyc_demo =
        sim::indistinguishability_demo(cyc.topology, cyc.nodes, cyc.witness_subspace.at(0));
    CHECK(cyc_demo.max_gap_continuous <= 1e-7);
    CHECK(cyc_demo.max_gap_discrete <= 1e-7);

    // An observable configuration has no witness; a non-witness vector is
    // rejected by the residual/vanishing checks.
    std::vector<double> not_witness(8, 0.0);
    not_witness[0] = 1.0;
    CHECK_THROWS_AS(sim::indistinguishability_demo(GraphTopology::path(8), NodeSet({3}, 8),
                                                   not_witness),
                    std::invalid_argument);
}

TEST_CASE("minimum-energy steering reaches reachable targets") {
    // n = 4 is a power of two: reachable from any single node.
    std::vector<double> target{0.4, -0.2, 0.7, 0.1};
    const auto result = sim::steering_demo(GraphTopology::path(4), NodeSet({2}, 4), target);
    CHECK(result.reached);
    CHECK(result.terminal_error <= 1e-3);
    CHECK(result.unreachable_component.empty());

    // External node reaches anything.
    std::vector<double> ramp{-1.0, -0.5, 0.5, 0.6, 0.2, 0.2};
    const auto ext = sim::steering_demo(GraphTopology::path(6), NodeSet({1}, 6), ramp);
    CHECK(ext.reached);
    CHECK(ext.terminal_error <= 1e-3);
}

TEST_CASE("steering rejects targets with unreachable components") {
    const auto report = path_analysis::single_node(6, 2);
    const auto& witness = report.witness_subspace.at(0);
    const auto result = sim::steering_demo(GraphTopology::path(6), NodeSet({2}, 6), witness);
    CHECK_FALSE(result.reached);
    REQUIRE(result.unreachable_component.size() == 6);
    double diff = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        diff = std::max(diff, std::fabs(result.unreachable_component[i] - witness[i]));
    CHECK(diff <= 1e-9);  // the rejected component is the witness itself
}

TEST_CASE("a vanishing horizon makes the Gramian singular") {
    const std::vector<double> target{0.4, -0.2, 0.7, 0.1};
    CHECK_THROWS_AS(sim::steering_demo(GraphTopology::path(4), NodeSet({2}, 4), target, 1e-3),
                    std::runtime_error);
}

TEST_CASE("epsilon range is enforced") {
    sim::SimConfig cfg{.topology = GraphTopology::path(4),
                       .io_nodes = NodeSet({1}, 4),
                       .mode = sim::Mode::DiscreteEpsilon,
                       .horizon = 5.0};
    const std::vector<double> x0(4, 0.5);
    cfg.epsilon = 0.5;
    CHECK_THROWS_AS(sim::simulate(cfg, x0), std::invalid_argument);
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(sim::simulate(cfg, x0), std::invalid_argument);
    cfg.epsilon = 0.49;
    CHECK_NOTHROW(sim::simulate(cfg, x0));
}

TEST_CASE("the discrete step matrix is doubly stochastic") {
    for (const GraphTopology& g : {GraphTopology::path(7), GraphTopology::cycle(8)}) {
        const DenseMatrix l = laplacian(g);
        const double eps = 0.25;
        const auto n = static_cast<std::size_t>(g.n);
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            double col = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                row += (i == j ? 1.0 : 0.0) - eps * l(i, j);
                col += (i == j ? 1.0 : 0.0) - eps * l(j, i);
            }
            CHECK(std::fabs(row - 1.0) <= 1e-12);
            CHECK(std::fabs(col - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("csv export layout") {
    sim::SimConfig cfg{.topology = GraphTopology::path(3),
                       .io_nodes = NodeSet({2}, 3),
                       .dt = 0.5,
                       .horizon = 1.0};
    const std::vector<double> x0{1.0, 0.0, -1.0};
    const auto traj = sim::simulate(cfg, x0);
    std::ostringstream out;
    sim::write_csv(traj, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x_1,x_2,x_3,y_1");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
        ++rows;
    }
    CHECK(rows == traj.times.size());
}

TEST_CASE("input validation") {
    sim::SimConfig cfg{.topology = GraphTopology::path(3), .io_nodes = NodeSet({2}, 3)};
    CHECK_THROWS_AS(sim::simulate(cfg, std::vector<double>{1.0, 2.0}), std::invalid_argument);
    const std::vector<double> nan_state{1.0, std::nan(""), 0.0};
    CHECK_THROWS_AS(sim::simulate(cfg, nan_state), std::invalid_argument);
    const std::vector<double> x0{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(
        sim::simulate(cfg, x0, [](double) { return std::vector<double>{1.0, 2.0}; }),
        std::invalid_argument);
}
