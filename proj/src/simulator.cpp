#include "netobs/simulator.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "netobs/kernels.hpp"
#include "netobs/oracle.hpp"

namespace netobs::sim {

namespace {

void check_finite(std::span<const double> x, const char* what) {
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

std::vector<double> sample_input(const InputSignal& input, double t, std::size_t m) {
    if (!input) return std::vector<double>(m, 0.0);
    std::vector<double> u = input(t);
    if (u.size() != m) throw std::invalid_argument("simulate: input sample has wrong dimension");
    check_finite(u, "simulate input");
    return u;
}

}  // namespace

Trajectory simulate(const SimConfig& cfg, std::span<const double> x0, const InputSignal& input) {
    const auto n = static_cast<std::size_t>(cfg.topology.n);
    if (x0.size() != n) throw std::invalid_argument("simulate: x0 has wrong dimension");
    check_finite(x0, "simulate x0");
    if (cfg.mode == Mode::DiscreteEpsilon && (cfg.epsilon <= 0.0 || cfg.epsilon >= 0.5))
        throw std::invalid_argument("simulate: epsilon must lie in (0, 1/2)");
    if (cfg.mode == Mode::ContinuousRK4 && cfg.dt <= 0.0)
        throw std::invalid_argument("simulate: dt must be positive");

    const DenseMatrix l = laplacian(cfg.topology);
    const DenseMatrix b = input_matrix(cfg.topology, cfg.io_nodes);
    const DenseMatrix c = output_matrix(cfg.topology, cfg.io_nodes);
    const std::size_t m = cfg.io_nodes.size();
    const std::size_t steps = (cfg.mode == Mode::ContinuousRK4)
                                  ? static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt))
                                  : static_cast<std::size_t>(std::llround(cfg.horizon));

    std::vector<double> x(x0.begin(), x0.end());
    Trajectory out;
    out.times.reserve(steps + 1);
    out.states.reserve(steps + 1);
    out.outputs.reserve(steps + 1);

    // xdot = -L x + B u with u held constant across the step.
    auto deriv = [&](const std::vector<double>& state, const std::vector<double>& bu) {
        std::vector<double> d = l.apply(state);
        kernels::scal(-1.0, d.data(), d.size());
        for (std::size_t i = 0; i < n; ++i) d[i] += bu[i];
        return d;
    };

    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = (cfg.mode == Mode::ContinuousRK4) ? cfg.dt * static_cast<double>(k)
                                                           : static_cast<double>(k);
        out.times.push_back(t);
        out.states.push_back(x);
        out.outputs.push_back(c.apply(x));
        if (k == steps) break;

        const std::vector<double> u = sample_input(input, t, m);
        std::vector<double> bu = b.apply(u);
        if (cfg.mode == Mode::ContinuousRK4) {
            const double h = cfg.dt;
            std::vector<double> k1 = deriv(x, bu);
            std::vector<double> stage = x;
            kernels::axpy(0.5 * h, k1.data(), stage.data(), n);
            std::vector<double> k2 = deriv(stage, bu);
            stage = x;
            kernels::axpy(0.5 * h, k2.data(), stage.data(), n);
            std::vector<double> k3 = deriv(stage, bu);
            stage = x;
            kernels::axpy(h, k3.data(), stage.data(), n);
            std::vector<double> k4 = deriv(stage, bu);
            kernels::axpy(h / 6.0, k1.data(), x.data(), n);
            kernels::axpy(h / 3.0, k2.data(), x.data(), n);
            kernels::axpy(h / 3.0, k3.data(), x.data(), n);
            kernels::axpy(h / 6.0, k4.data(), x.data(), n);
        } else {
            std::vector<double> lx = l.apply(x);
            kernels::axpy(-cfg.epsilon, lx.data(), x.data(), n);
            for (std::size_t i = 0; i < n; ++i) x[i] += bu[i];
        }
    }
    return out;
}

void write_csv(const Trajectory& trajectory, std::ostream& os) {
    const std::size_t n = trajectory.states.empty() ? 0 : trajectory.states.front().size();
    const std::size_t m = trajectory.outputs.empty() ? 0 : trajectory.outputs.front().size();
    os << "t";
    for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
    for (std::size_t i = 1; i <= m; ++i) os << ",y_" << i;
    os << "\n";
    os.precision(17);
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        os << trajectory.times[k];
        for (double v : trajectory.states[k]) os << "," << v;
        for (double v : trajectory.outputs[k]) os << "," << v;
        os << "\n";
    }
}

void write_csv(const Trajectory& trajectory, const std::string& path) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("write_csv: cannot open " + path);
    write_csv(trajectory, file);
}

IndistinguishabilityReport indistinguishability_demo(const GraphTopology& topology,
                                                     const NodeSet& observers,
                                                     std::span<const double> witness,
                                                     double horizon) {
    const auto n = static_cast<std::size_t>(topology.n);
    if (witness.size() != n)
        throw std::invalid_argument("indistinguishability_demo: witness has wrong dimension");
    const DenseMatrix l = laplacian(topology);

    // The witness must be an eigenvector of L vanishing on the observers.
    const double norm2 = kernels::dot(witness.data(), witness.data(), n);
    if (norm2 <= 0.0) throw std::invalid_argument("indistinguishability_demo: zero witness");
    std::vector<double> lw = l.apply(witness);
    const double lambda = kernels::dot(witness.data(), lw.data(), n) / norm2;
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(lw[i] - lambda * witness[i]) > 1e-8 * std::sqrt(norm2))
            throw std::invalid_argument(
                "indistinguishability_demo: witness is not an unobservable direction");
    for (std::int64_t node : observers.labels())
        if (std::fabs(witness[static_cast<std::size_t>(node - 1)]) > 1e-9 * std::sqrt(norm2))
            throw std::invalid_argument(
                "indistinguishability_demo: witness does not vanish on the observers");

    std::vector<double> x0(n);
    for (std::size_t i = 0; i < n; ++i) x0[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i + 1));
    std::vector<double> x1 = x0;
    kernels::axpy(1.0, witness.data(), x1.data(), n);

    IndistinguishabilityReport report;
    for (Mode mode : {Mode::ContinuousRK4, Mode::DiscreteEpsilon}) {
        SimConfig cfg{.topology = topology, .io_nodes = observers, .mode = mode, .horizon = horizon};
        Trajectory a = simulate(cfg, x0);
        Trajectory b = simulate(cfg, x1);
        double gap = 0.0;
        for (std::size_t k = 0; k < a.outputs.size(); ++k)
            gap = std::max(gap, kernels::max_abs_diff(a.outputs[k].data(), b.outputs[k].data(),
                                                      a.outputs[k].size()));
        if (mode == Mode::ContinuousRK4) {
            report.max_gap_continuous = gap;
            report.base = std::move(a);
            report.shifted = std::move(b);
        } else {
            report.max_gap_discrete = gap;
        }
    }
    return report;
}

SteeringReport steering_demo(const GraphTopology& topology, const NodeSet& leaders,
                             std::span<const double> target, double horizon, double dt) {
    const auto n = static_cast<std::size_t>(topology.n);
    if (target.size() != n) throw std::invalid_argument("steering_demo: target has wrong dimension");
    check_finite(target, "steering target");
    const DenseMatrix l = laplacian(topology);
    const DenseMatrix b = input_matrix(topology, leaders);
    const std::size_t m = leaders.size();

    SteeringReport report;

    // Unreachable directions: eigenvectors annihilated by B^T.
    const auto unobservable = oracle::unobservable_eigenspace(l, b.transposed());
    const double target_norm = std::sqrt(kernels::dot(target.data(), target.data(), n));
    std::vector<double> unreachable(n, 0.0);
    double unreachable_norm2 = 0.0;
    for (const auto& space : unobservable)
        for (const auto& w : space.basis) {
            const double coeff = kernels::dot(w.data(), target.data(), n);
            kernels::axpy(coeff, w.data(), unreachable.data(), n);
            unreachable_norm2 += coeff * coeff;
        }
    if (std::sqrt(unreachable_norm2) > 1e-6 * std::max(1.0, target_norm)) {
        report.reached = false;
        report.unreachable_component = std::move(unreachable);
        return report;
    }

    // Gramian over [0, T] in the eigenbasis: W~ = (Q^T B B^T Q) .* phi(li+lj),
    // phi(s) = (1 - e^{-sT})/s with phi(0) = T.
    const auto eig = oracle::symmetric_eigen(l);
    DenseMatrix qtb(n, m);  // Q^T B
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j)
            qtb(k, j) = eig[k].vector[static_cast<std::size_t>(leaders.labels()[j] - 1)];
    DenseMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double s = eig[i].eigenvalue + eig[j].eigenvalue;
            const double phi = (std::fabs(s) < 1e-14) ? horizon : (1.0 - std::exp(-s * horizon)) / s;
            const double g = kernels::dot(qtb.row(i), qtb.row(j), m) * phi;
            gram(i, j) = g;
            gram(j, i) = g;
        }

    // Solve W~ c = Q^T target through the Gramian's own eigendecomposition.
    // The Gramian is exactly singular on the unreachable directions; beyond
    // those, a spectrum collapsing below the cutoff means the horizon does
    // not excite the reachable subsystem well enough to invert.
    std::vector<double> delta(n);
    for (std::size_t k = 0; k < n; ++k)
        delta[k] = kernels::dot(eig[k].vector.data(), target.data(), n);
    const auto gram_eig = oracle::symmetric_eigen(gram);
    const double sigma_max = std::fabs(gram_eig.back().eigenvalue);
    const double cutoff = sigma_max * 1e-12;
    std::size_t unreachable_dim = 0;
    for (const auto& space : unobservable) unreachable_dim += space.basis.size();
    const double sigma_min_reachable = gram_eig[unreachable_dim].eigenvalue;
    if (!(sigma_min_reachable > cutoff))
        throw std::runtime_error("steering_demo: Gramian singular beyond tolerance, horizon too short");
    std::vector<double> coeff(n, 0.0);
    for (const auto& pair : gram_eig) {
        if (pair.eigenvalue <= cutoff) continue;
        const double proj = kernels::dot(pair.vector.data(), delta.data(), n);
        kernels::axpy(proj / pair.eigenvalue, pair.vector.data(), coeff.data(), n);
    }
    std::vector<double> residual = gram.apply(coeff);
    double solve_residual = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        solve_residual = std::max(solve_residual, std::fabs(residual[k] - delta[k]));
    if (solve_residual > 1e-8 * std::max(1.0, target_norm))
        throw std::runtime_error("steering_demo: Gramian singular beyond tolerance, horizon too short");

    // u(t) = B^T e^{-L (T - t)} eta with eta = Q c; sampled at step midpoints.
    auto input = [&, coeff](double t) {
        std::vector<double> u(m, 0.0);
        const double tau = horizon - (t + 0.5 * dt);
        for (std::size_t k = 0; k < n; ++k) {
            const double w = coeff[k] * std::exp(-eig[k].eigenvalue * tau);
            for (std::size_t j = 0; j < m; ++j) u[j] += qtb(k, j) * w;
        }
        return u;
    };

    SimConfig cfg{.topology = topology,
                  .io_nodes = leaders,
                  .mode = Mode::ContinuousRK4,
                  .dt = dt,
                  .horizon = horizon};
    const std::vector<double> x0(n, 0.0);
    report.trajectory = simulate(cfg, x0, input);

    const auto& final_state = report.trajectory.states.back();
    double err2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = final_state[i] - target[i];
        err2 += d * d;
    }
    report.terminal_error = std::sqrt(err2);
    for (std::size_t k = 0; k + 1 < report.trajectory.times.size(); ++k) {
        const std::vector<double> u = input(report.trajectory.times[k]);
        report.input_energy += dt * kernels::dot(u.data(), u.data(), m);
    }
    report.reached = report.terminal_error <= 1e-3;
    return report;
}

}  // namespace netobs::sim
