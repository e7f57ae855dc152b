#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ksq/distribution.hpp"
#include "ksq/quantum.hpp"
#include "ksq/scenario.hpp"

#include <json.hpp>

namespace ksq {

/// Thrown for malformed scenario or distribution documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scenario file: the scenario plus optional realizing vectors.
struct ScenarioFile {
    Scenario scenario;
    std::vector<ComplexVector> vectors;  // empty when the field is absent
};

/// Scenario document:
///   {"name": str, "events": [str,...],
///    "contexts": [{"members":[int,...], "complete": bool},...],
///    "vectors": [[[re,im],...],...]}   (optional; one per event, equal length)
ScenarioFile scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s,
                                const std::vector<ComplexVector>& vectors = {});

ScenarioFile read_scenario_file(const std::filesystem::path& path);
void write_scenario_file(const std::filesystem::path& path, const Scenario& s,
                         const std::vector<ComplexVector>& vectors = {});

/// Distribution document:
///   {"scenario": str, "mode": "rational"|"float",
///    "support": [{"bits": "0101…", "weight": "num/den" | number}, ...]}
/// Rational weights are "num/den" strings; float weights are JSON numbers.
nlohmann::json distribution_to_json(const QuasiDistribution& q);
/// The scenario the document refers to by name must be supplied; its name
/// must match the document's "scenario" field.
QuasiDistribution distribution_from_json(const nlohmann::json& j,
                                         const Scenario& scenario);

QuasiDistribution read_distribution_file(const std::filesystem::path& path,
                                         const Scenario& scenario);
void write_distribution_file(const std::filesystem::path& path,
                             const QuasiDistribution& q);

/// Density-matrix document: {"rho": [[[re,im],...],...]} (d rows of d pairs).
QuantumState state_from_json(const nlohmann::json& j);
QuantumState read_state_file(const std::filesystem::path& path);

}  // namespace ksq
