#pragma once

#include <string>

#include <json.hpp>

#include "netpriv/greedy.hpp"
#include "netpriv/hardness.hpp"

namespace netpriv::cli {

inline constexpr int kFormatVersion = 1;

// Every index set leaving these helpers is 1-based.
nlohmann::json set_json(const IndexSet& s);
nlohmann::json complex_json(Complex z);
nlohmann::json tolerance_json(const Tolerance& tol);
nlohmann::json spectrum_json(const Spectrum& spectrum);
nlohmann::json certificate_json(const ObservabilityReport& report);
nlohmann::json solution_json(const BlockingSolution& solution);
nlohmann::json trace_json(const GreedyTrace& trace);
nlohmann::json rational_matrix_json(const RationalMatrix& m);
nlohmann::json reduction_json(const ReductionInstance& inst);

std::string render_text(const nlohmann::json& report);

}  // namespace netpriv::cli
