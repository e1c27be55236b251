#pragma once

#include <json.hpp>

#include "bruhat/coincidence.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/orders.hpp"
#include "bruhat/partition.hpp"

namespace bruhat {

// Matrix: {"m": 2, "n": 2, "rows": ["10", "01"]}
nlohmann::json matrix_to_json(const BinaryMatrix& a);
BinaryMatrix matrix_from_json(const nlohmann::json& j);

// Class: {"n": 4, "k": 2} for constant margins, else {"R": [...], "S": [...]}
nlohmann::json class_to_json(const ClassSpec& spec);
ClassSpec class_from_json(const nlohmann::json& j);

// Diagram: {"kind": "bruhat", "nodes": [matrix...], "edges": [[a, b], ...]}
nlohmann::json hasse_to_json(const HasseDiagram& h);

// Certificate: class, narrative, x/y/z matrices, covers with 1-based
// positions and the four condition flags. Round-trips losslessly.
nlohmann::json certificate_to_json(const CounterexampleCertificate& cert);
CounterexampleCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CertificateReport& rep);
nlohmann::json lemma_report_to_json(const LemmaFamilyReport& rep);
nlohmann::json coincidence_to_json(const ClassSpec& spec, const CoincidenceResult& res);
nlohmann::json theorem_table_to_json(const std::vector<TheoremCell>& cells);

}  // namespace bruhat
