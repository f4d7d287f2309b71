#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "idem/checks.hpp"
#include "idem/edges.hpp"
#include "idem/reduct.hpp"
#include "idem/synth.hpp"
#include "idem/thin.hpp"

namespace idem {

inline constexpr int kReportVersion = 1;

/// {"format": "idem-report", "version": ..., "command": ...}
nlohmann::json report_envelope(const std::string& command);

nlohmann::json algebra_json(const FiniteAlgebra& a);
/// Congruences are written as lists of blocks of parent labels.
nlohmann::json edge_report_json(const FiniteAlgebra& a, const EdgeReport& r);
nlohmann::json graph_json(const FiniteAlgebra& a, const StructureGraph& g);
nlohmann::json thin_json(const FiniteAlgebra& a, const ThinGraph& g);
/// Terms, their realized tables on every member, the thick-edge inventory and the checks.
nlohmann::json uniform_json(const UniformOps& u);
nlohmann::json reduct_json(const BoundedReduct& r, const ReductDiff& d);
nlohmann::json suites_json(const std::vector<SuiteResult>& suites);

/// One line per pair: "ac: Semilattice via {a|c} (t = f(p0, p1))".
std::string edge_report_text(const FiniteAlgebra& a, const EdgeReport& r);

}  // namespace idem
