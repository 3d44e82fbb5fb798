#pragma once

// Consensus dynamics with leader inputs and observation outputs, in
// continuous time (fixed-step RK4 on xdot = -L x + B u) and discrete time
// (x+ = (I - eps L) x + B u). Demo drivers turn analysis witnesses into
// executable indistinguishability and minimum-energy steering runs.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netobs/graph.hpp"

namespace netobs::sim {

enum class Mode { ContinuousRK4, DiscreteEpsilon };

struct SimConfig {
    GraphTopology topology;
    NodeSet io_nodes;  // leaders for inputs, observers for outputs
    Mode mode = Mode::ContinuousRK4;
    double epsilon = 0.25;  // discrete weight; requires 0 < eps < 1/2 (max degree 2)
    double dt = 0.01;       // RK4 step
    double horizon = 10.0;  // continuous: time span; discrete: step count
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> outputs;
};

// Evaluated once per step (piecewise-constant inputs aligned to dt); an empty
// function means u = 0.
using InputSignal = std::function<std::vector<double>(double t)>;

Trajectory simulate(const SimConfig& cfg, std::span<const double> x0,
                    const InputSignal& input = {});

// Columns: t, x_1..x_n, y_1..y_m.
void write_csv(const Trajectory& trajectory, std::ostream& os);
void write_csv(const Trajectory& trajectory, const std::string& path);

struct IndistinguishabilityReport {
    double max_gap_continuous = 0.0;
    double max_gap_discrete = 0.0;
    Trajectory base;     // continuous-mode run from x0
    Trajectory shifted;  // continuous-mode run from x0 + witness
};

// Simulates x0 and x0 + witness and reports the worst output gap in both
// modes; throws std::invalid_argument when the witness is not an unobservable
// direction (eigenvector residual or vanishing check fails).
IndistinguishabilityReport indistinguishability_demo(const GraphTopology& topology,
                                                     const NodeSet& observers,
                                                     std::span<const double> witness,
                                                     double horizon = 20.0);

struct SteeringReport {
    bool reached = false;
    double terminal_error = 0.0;
    // Projection of the target onto the unreachable directions; empty when
    // the target lies in the reachable subspace.
    std::vector<double> unreachable_component;
    double input_energy = 0.0;
    Trajectory trajectory;
};

// Minimum-energy open-loop steering from the origin over a fixed horizon via
// the controllability Gramian restricted to the reachable subsystem; the
// Gramian integral is evaluated exactly in the eigenbasis. Throws
// std::runtime_error when the restricted Gramian is singular beyond
// tolerance (horizon too short).
SteeringReport steering_demo(const GraphTopology& topology, const NodeSet& leaders,
                             std::span<const double> target, double horizon = 10.0,
                             double dt = 1e-3);

}  // namespace netobs::sim
