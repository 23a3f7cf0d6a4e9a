#pragma once

#include "qmd/config.hpp"
#include "qmd/report.hpp"

namespace qmd {

using SuiteFn = void (*)(const ScenarioConfig&, VerificationReport&);

/// Registered suites in their canonical execution order.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

/// Run the suites selected by the config ("all" expands to every suite).
/// Deterministic for a fixed config; unknown suite names are errors.
VerificationReport run_suites(const ScenarioConfig& cfg);

}  // namespace qmd
