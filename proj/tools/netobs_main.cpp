// netobs: decide reachability/observability of Laplacian consensus on path
// and cycle graphs, print node markings, run rule-vs-oracle verification
// sweeps, and drive demonstration simulations.
//
// Exit codes: 0 observable/success, 2 usage error, 3 unobservable,
// 4 verification disagreement, 5 simulation failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "netobs/cycle_analysis.hpp"
#include "netobs/json_io.hpp"
#include "netobs/path_analysis.hpp"
#include "netobs/report.hpp"
#include "netobs/simulator.hpp"
#include "netobs/sweep.hpp"

namespace {

using namespace netobs;
using nlohmann::json;

constexpr int kExitObservable = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnobservable = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitSimulation = 5;

GraphKind parse_kind(const std::string& kind) {
    if (kind == "path") return GraphKind::Path;
    if (kind == "cycle") return GraphKind::Cycle;
    throw std::invalid_argument("topology must be 'path' or 'cycle'");
}

GraphTopology make_topology(const std::string& kind, std::int64_t n) {
    return parse_kind(kind) == GraphKind::Path ? GraphTopology::path(n)
                                               : GraphTopology::cycle(n);
}

void print_json(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

ObservabilityReport analyze(const GraphTopology& topology,
                            const std::vector<std::int64_t>& nodes) {
    if (topology.kind == GraphKind::Path) {
        if (nodes.size() == 1) return path_analysis::single_node(topology.n, nodes.front());
        return path_analysis::multi_node(topology.n, NodeSet(nodes, topology.n));
    }
    if (nodes.size() == 1) return cycle_analysis::single_node(topology.n, nodes.front());
    return cycle_analysis::multi_node(topology.n, NodeSet(nodes, topology.n));
}

int cmd_analyze(const std::string& kind, std::int64_t n, const std::vector<std::int64_t>& nodes,
                const std::string& oracle_mode, bool pretty) {
    if (nodes.empty()) throw std::invalid_argument("--nodes requires at least one label");
    const GraphTopology topology = make_topology(kind, n);
    ObservabilityReport report = analyze(topology, nodes);
    const bool run_oracle = oracle_mode == "on" || (oracle_mode == "auto" && n <= 500);
    if (run_oracle) attach_oracle_check(report);
    // Worst-case witness payloads reach O(n^2) doubles near the node cap;
    // keep the document bounded and flag the omission.
    const std::size_t payload =
        report.witness_subspace.size() * static_cast<std::size_t>(std::max<std::int64_t>(n, 1));
    const bool include_vectors = payload <= 10'000'000;
    json doc = json_io::document(
        "analyze", {{"args", {{"kind", kind}, {"n", n}, {"nodes", nodes}}},
                    {"report", json_io::to_json(report, include_vectors)}});
    print_json(doc, pretty);
    if (report.oracle && !report.oracle->agrees) {
        std::cerr << "oracle cross-check disagrees with the verdict\n";
        return kExitDisagreement;
    }
    return report.observable ? kExitObservable : kExitUnobservable;
}

std::string symbol_text(const MarkSymbol& symbol, GraphKind kind) {
    if (kind == GraphKind::Path) return std::to_string(symbol.modulus);
    return "(" + std::to_string(symbol.modulus) + "," + std::to_string(symbol.residue) + ")";
}

int cmd_mark(const std::string& kind, std::int64_t n, const std::string& format, bool pretty) {
    const GraphTopology topology = make_topology(kind, n);
    if (topology.kind == GraphKind::Path && n < 2)
        throw std::invalid_argument("mark path: n must be >= 2");
    const NodeMarking marking = topology.kind == GraphKind::Path
                                    ? path_analysis::mark_nodes(n)
                                    : cycle_analysis::mark_nodes(n);
    if (format == "json") {
        print_json(json_io::document("mark", {{"marking", json_io::to_json(marking)}}), pretty);
        return 0;
    }
    if (format == "text") {
        for (std::int64_t node = 1; node <= n; ++node) {
            std::cout << "node " << node << ":";
            const auto& symbols = marking.at(node);
            if (symbols.empty()) std::cout << " -";
            for (std::size_t k = 0; k < symbols.size(); ++k)
                std::cout << (k == 0 ? " " : ",") << symbol_text(symbols[k], topology.kind);
            std::cout << "\n";
        }
        return 0;
    }
    if (format == "dot") {
        std::cout << "graph " << kind << n << " {\n";
        if (topology.kind == GraphKind::Path) std::cout << "  rankdir=LR;\n";
        for (std::int64_t node = 1; node <= n; ++node) {
            std::cout << "  " << node << " [label=\"" << node;
            const auto& symbols = marking.at(node);
            if (!symbols.empty()) {
                std::cout << "\\n";
                for (std::size_t k = 0; k < symbols.size(); ++k)
                    std::cout << (k == 0 ? "" : ",") << symbol_text(symbols[k], topology.kind);
            }
            std::cout << "\"];\n";
        }
        for (std::int64_t i = 1; i < n; ++i) std::cout << "  " << i << " -- " << i + 1 << ";\n";
        if (topology.kind == GraphKind::Cycle) std::cout << "  " << n << " -- 1;\n";
        std::cout << "}\n";
        return 0;
    }
    throw std::invalid_argument("--format must be text, dot or json");
}

int cmd_verify(std::int64_t max_n, const std::vector<int>& sizes, const std::string& topology,
               std::int64_t triple_cap, std::size_t random_triples, unsigned seed, bool pretty) {
    if (max_n > max_node_count())
        throw std::invalid_argument("--max-n exceeds the configured node cap");
    json summary = json::array();
    bool clean = true;
    auto record = [&](const char* kind, const sweep::SweepResult& result) {
        json entry{{"topology", kind},
                   {"configurations", result.configurations},
                   {"internal_singletons", result.internal_singletons},
                   {"unobservable", result.unobservable_configurations},
                   {"disagreements", json::array()}};
        for (const auto& d : result.disagreements) {
            entry["disagreements"].push_back({{"n", d.n},
                                              {"nodes", d.nodes},
                                              {"rule_observable", d.rule_observable},
                                              {"oracle_observable", d.oracle_observable},
                                              {"detail", d.detail}});
            std::cerr << "disagreement: " << kind << " n=" << d.n << " nodes=[";
            for (std::size_t k = 0; k < d.nodes.size(); ++k)
                std::cerr << (k ? "," : "") << d.nodes[k];
            std::cerr << "] " << d.detail << "\n";
        }
        clean = clean && result.clean();
        summary.push_back(std::move(entry));
    };
    if (topology == "path" || topology == "both")
        record("path", sweep::run_path_sweep(max_n, sizes, random_triples, seed));
    if (topology == "cycle" || topology == "both")
        record("cycle", sweep::run_cycle_sweep(std::min(max_n, max_node_count()), sizes, triple_cap));
    if (topology != "path" && topology != "cycle" && topology != "both")
        throw std::invalid_argument("--topology must be path, cycle or both");
    print_json(json_io::document("verify", {{"sweeps", std::move(summary)}, {"clean", clean}}),
               pretty);
    return clean ? 0 : kExitDisagreement;
}

int cmd_simulate(const std::string& kind, std::int64_t n, std::vector<std::int64_t> observers,
                 std::vector<std::int64_t> leaders, const std::string& demo,
                 const std::string& mode, double epsilon, double dt, bool dt_given,
                 double horizon, const std::string& out, std::vector<double> target,
                 bool pretty) {
    const GraphTopology topology = make_topology(kind, n);
    if (demo == "indistinguishable") {
        if (observers.empty())
            throw std::invalid_argument("--demo indistinguishable requires --observers");
        ObservabilityReport report = analyze(topology, observers);
        if (report.observable || report.witness_subspace.empty()) {
            std::cerr << "no witness exists: the configuration is observable\n";
            return kExitSimulation;
        }
        const auto demo_report = sim::indistinguishability_demo(
            topology, report.nodes, report.witness_subspace.front(), horizon);
        if (!out.empty()) sim::write_csv(demo_report.base, out);
        print_json(json_io::document(
                       "simulate",
                       {{"demo", "indistinguishable"},
                        {"max_output_gap_continuous", demo_report.max_gap_continuous},
                        {"max_output_gap_discrete", demo_report.max_gap_discrete},
                        {"witness_eigenvalue", report.unobservable_eigenpairs.front().eigenvalue},
                        {"pass", demo_report.max_gap_continuous <= 1e-7 &&
                                     demo_report.max_gap_discrete <= 1e-7}}),
                   pretty);
        return (demo_report.max_gap_continuous <= 1e-7 && demo_report.max_gap_discrete <= 1e-7)
                   ? 0
                   : kExitSimulation;
    }
    if (demo == "steer") {
        if (leaders.empty()) throw std::invalid_argument("--demo steer requires --leaders");
        const NodeSet leader_set(leaders, n);
        std::vector<double> goal = std::move(target);
        if (goal.empty()) {
            // Default target: a centred ramp, fully reachable for the demos.
            goal.resize(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; ++i)
                goal[static_cast<std::size_t>(i)] =
                    static_cast<double>(i + 1) - 0.5 * static_cast<double>(n + 1);
        }
        if (goal.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("--target must list n values");
        // The sampled open-loop input needs a finer default step than plain runs.
        const double steer_dt = dt_given ? dt : 1e-3;
        const auto result = sim::steering_demo(topology, leader_set, goal, horizon, steer_dt);
        if (!out.empty() && !result.trajectory.times.empty())
            sim::write_csv(result.trajectory, out);
        json payload{{"demo", "steer"},
                     {"reached", result.reached},
                     {"terminal_error", result.terminal_error},
                     {"input_energy", result.input_energy}};
        if (!result.unreachable_component.empty())
            payload["unreachable_component"] = result.unreachable_component;
        print_json(json_io::document("simulate", std::move(payload)), pretty);
        return 0;
    }
    if (demo.empty()) {
        // Plain simulation from a supplied or default initial state.
        if (observers.empty() && leaders.empty())
            throw std::invalid_argument("simulate requires --observers or --leaders");
        const NodeSet io(observers.empty() ? leaders : observers, n);
        sim::SimConfig cfg{.topology = topology,
                           .io_nodes = io,
                           .mode = mode == "discrete" ? sim::Mode::DiscreteEpsilon
                                                      : sim::Mode::ContinuousRK4,
                           .epsilon = epsilon,
                           .dt = dt,
                           .horizon = horizon};
        std::vector<double> x0(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            x0[static_cast<std::size_t>(i)] = 1.0 + 0.5 * std::sin(static_cast<double>(i + 1));
        const auto trajectory = sim::simulate(cfg, x0);
        if (!out.empty()) sim::write_csv(trajectory, out);
        print_json(json_io::document("simulate", {{"steps", trajectory.times.size() - 1},
                                                  {"final_state", trajectory.states.back()}}),
                   pretty);
        return 0;
    }
    throw std::invalid_argument("--demo must be indistinguishable or steer");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reachability/observability analysis of consensus on paths and cycles"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string kind;
    std::int64_t n = 0;
    std::vector<std::int64_t> nodes;
    std::string oracle_mode = "auto";
    auto* analyze_cmd = app.add_subcommand("analyze", "decide observability of a node set");
    analyze_cmd->add_option("kind", kind, "path|cycle")->required();
    analyze_cmd->add_option("n", n, "number of nodes")->required();
    analyze_cmd->add_option("--nodes", nodes, "comma-separated 1-based labels")
        ->required()
        ->delimiter(',');
    analyze_cmd->add_option("--oracle", oracle_mode, "auto|on|off (default auto: n <= 500)");

    std::string format = "text";
    auto* mark_cmd = app.add_subcommand("mark", "print the node-marking diagram");
    mark_cmd->add_option("kind", kind, "path|cycle")->required();
    mark_cmd->add_option("n", n, "number of nodes")->required();
    mark_cmd->add_option("--format", format, "text|dot|json");

    std::int64_t max_n = 20;
    std::vector<int> sizes{1, 2};
    std::string topology = "both";
    std::int64_t triple_cap = 24;
    std::size_t random_triples = 100;
    unsigned seed = 42;
    auto* verify_cmd = app.add_subcommand("verify", "run the rule-vs-oracle sweeps");
    verify_cmd->add_option("--max-n", max_n, "largest graph size");
    verify_cmd->add_option("--subset-sizes", sizes, "subset sizes to test")->delimiter(',');
    verify_cmd->add_option("--topology", topology, "path|cycle|both");
    verify_cmd->add_option("--triple-cap", triple_cap, "largest n for exhaustive cycle triples");
    verify_cmd->add_option("--random-triples", random_triples, "sampled path triples per n");
    verify_cmd->add_option("--seed", seed, "sampling seed");

    std::vector<std::int64_t> observers;
    std::vector<std::int64_t> leaders;
    std::string demo;
    std::string mode = "rk4";
    double epsilon = 0.25;
    double dt = 0.01;
    double horizon = 20.0;
    std::string out;
    std::vector<double> target;
    auto* sim_cmd = app.add_subcommand("simulate", "run consensus simulations and demos");
    sim_cmd->add_option("kind", kind, "path|cycle")->required();
    sim_cmd->add_option("n", n, "number of nodes")->required();
    sim_cmd->add_option("--observers", observers, "observation nodes")->delimiter(',');
    sim_cmd->add_option("--leaders", leaders, "control nodes")->delimiter(',');
    sim_cmd->add_option("--demo", demo, "indistinguishable|steer");
    sim_cmd->add_option("--mode", mode, "rk4|discrete (plain simulation)");
    sim_cmd->add_option("--epsilon", epsilon, "discrete step weight in (0, 1/2)");
    sim_cmd->add_option("--dt", dt, "RK4 step");
    sim_cmd->add_option("--horizon", horizon, "time span (steps in discrete mode)");
    sim_cmd->add_option("--out", out, "CSV output path");
    sim_cmd->add_option("--target", target, "steering target (n values)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(kind, n, nodes, oracle_mode, pretty);
        if (app.got_subcommand(mark_cmd)) return cmd_mark(kind, n, format, pretty);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(max_n, sizes, topology, triple_cap, random_triples, seed, pretty);
        if (app.got_subcommand(sim_cmd))
            return cmd_simulate(kind, n, observers, leaders, demo, mode, epsilon, dt,
                                sim_cmd->count("--dt") > 0, horizon, out, target, pretty);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSimulation;
    }
    return kExitUsage;
}
