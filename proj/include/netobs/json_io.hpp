#pragma once

// JSON encoding of analysis reports and markings (schema "1.0"). Eigenvalues
// always carry both the exact angle {a, b} and the floating value.

#include <json.hpp>

#include "netobs/report.hpp"

namespace netobs::json_io {

inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::json to_json(const spectral::CosEigenvalue& value);
// include_vectors = false drops the witness/eigenvector arrays (the document
// then carries "witness_vectors_omitted": true); eigenvalues always stay.
nlohmann::json to_json(const ObservabilityReport& report, bool include_vectors = true);
nlohmann::json to_json(const NodeMarking& marking);

ObservabilityReport report_from_json(const nlohmann::json& j);

// Top-level CLI document: schema version + command echo + payload.
nlohmann::json document(const std::string& command, nlohmann::json payload);

}  // namespace netobs::json_io
