#include "netobs/json_io.hpp"

namespace netobs::json_io {

using nlohmann::json;

namespace {

const char* kind_name(GraphKind kind) { return kind == GraphKind::Path ? "path" : "cycle"; }

GraphKind kind_from(const std::string& name) {
    if (name == "path") return GraphKind::Path;
    if (name == "cycle") return GraphKind::Cycle;
    throw std::invalid_argument("unknown topology kind: " + name);
}

json eigenpair_to_json(const spectral::EigenPair& pair, bool include_vectors) {
    json j{{"a", pair.lambda.num},
           {"b", pair.lambda.den},
           {"value", pair.lambda.value},
           {"eigenvalue", pair.eigenvalue}};
    if (include_vectors) j["vector"] = pair.vector;
    return j;
}

spectral::EigenPair eigenpair_from_json(const json& j) {
    spectral::EigenPair pair;
    pair.lambda = spectral::make_cos_eigenvalue(j.at("a").get<std::int64_t>(),
                                                j.at("b").get<std::int64_t>());
    pair.eigenvalue = j.at("eigenvalue").get<double>();
    if (j.contains("vector")) pair.vector = j.at("vector").get<std::vector<double>>();
    return pair;
}

}  // namespace

json to_json(const spectral::CosEigenvalue& value) {
    return {{"a", value.num}, {"b", value.den}, {"value", value.value}};
}

json to_json(const ObservabilityReport& report, bool include_vectors) {
    json j{{"topology", {{"kind", kind_name(report.topology.kind)}, {"n", report.topology.n}}},
           {"nodes", report.nodes.labels()},
           {"observable", report.observable},
           {"blocking_moduli", report.blocking_moduli},
           {"unobservable_eigenpairs", json::array()},
           {"oracle_checked", report.oracle_checked}};
    if (include_vectors)
        j["witnesses"] = report.witness_subspace;
    else {
        j["witnesses"] = json::array();
        j["witness_vectors_omitted"] = true;
    }
    for (const auto& pair : report.unobservable_eigenpairs)
        j["unobservable_eigenpairs"].push_back(eigenpair_to_json(pair, include_vectors));
    if (report.topology.kind == GraphKind::Cycle) {
        j["gaps"] = report.gaps;
        j["gap_gcd"] = report.gap_gcd;
    }
    if (report.oracle) {
        j["oracle"] = {{"rank", report.oracle->rank},
                       {"full_rank", report.oracle->full_rank},
                       {"agrees", report.oracle->agrees}};
    }
    return j;
}

json to_json(const NodeMarking& marking) {
    json nodes = json::array();
    for (std::size_t i = 0; i < marking.symbols.size(); ++i) {
        json symbols = json::array();
        for (const auto& s : marking.symbols[i]) {
            if (marking.topology.kind == GraphKind::Path)
                symbols.push_back({{"modulus", s.modulus}});
            else
                symbols.push_back({{"modulus", s.modulus}, {"residue", s.residue}});
        }
        nodes.push_back({{"node", i + 1}, {"symbols", std::move(symbols)}});
    }
    return {{"topology",
             {{"kind", kind_name(marking.topology.kind)}, {"n", marking.topology.n}}},
            {"nodes", std::move(nodes)}};
}

ObservabilityReport report_from_json(const json& j) {
    const auto& topo = j.at("topology");
    const std::int64_t n = topo.at("n").get<std::int64_t>();
    const GraphKind kind = kind_from(topo.at("kind").get<std::string>());
    GraphTopology topology = (kind == GraphKind::Path) ? GraphTopology::path(n)
                                                       : GraphTopology::cycle(n);
    ObservabilityReport report{
        .topology = topology,
        .nodes = NodeSet(j.at("nodes").get<std::vector<std::int64_t>>(), n)};
    report.observable = j.at("observable").get<bool>();
    report.blocking_moduli = j.at("blocking_moduli").get<std::vector<std::int64_t>>();
    for (const auto& pair : j.at("unobservable_eigenpairs"))
        report.unobservable_eigenpairs.push_back(eigenpair_from_json(pair));
    report.witness_subspace = j.at("witnesses").get<std::vector<std::vector<double>>>();
    report.oracle_checked = j.at("oracle_checked").get<bool>();
    if (j.contains("gaps")) {
        report.gaps = j.at("gaps").get<std::vector<std::int64_t>>();
        report.gap_gcd = j.at("gap_gcd").get<std::int64_t>();
    }
    if (j.contains("oracle")) {
        OracleSummary summary;
        summary.rank = j.at("oracle").at("rank").get<std::size_t>();
        summary.full_rank = j.at("oracle").at("full_rank").get<std::size_t>();
        summary.agrees = j.at("oracle").at("agrees").get<bool>();
        report.oracle = summary;
    }
    return report;
}

json document(const std::string& command, json payload) {
    json j{{"schema_version", kSchemaVersion}, {"command", command}};
    j.update(payload);
    return j;
}

}  // namespace netobs::json_io
