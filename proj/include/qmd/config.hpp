#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmd/bridge.hpp"
#include "qmd/grid.hpp"

namespace qmd {

struct GridSpec {
    GridBox box{{-1.0, -1.0, -1.0}, {2.0, 2.0, 2.0}};
    double h = 0.1;
};

/// The fixed Maxwell pair and parameter set used by the transport checks.
struct TransportSpec {
    MediumParams medium;
    DiracParams dirac;
    AnalyticField electric;
    AnalyticField magnetic;
};

/// Scenario shared by the CLI subcommands and the verification suites.
/// A config file may override any subset; omitted sections keep these
/// defaults. The arithmetic mode decides how every literal is read, so it
/// is fixed before parsing.
struct ScenarioConfig {
    ArithMode mode = ArithMode::Exact;
    double tolerance = 1e-12;
    std::uint64_t seed = 12345;
    std::vector<std::string> suites{"all"};
    MediumParams medium;
    DiracParams dirac;
    GridSpec grid;
    TransportSpec transport;

    static ScenarioConfig defaults(ArithMode m);

    /// Overlay a JSON document onto the defaults. Unknown keys are errors.
    static ScenarioConfig from_json(const nlohmann::json& j, std::optional<ArithMode> mode_override,
                                    std::optional<double> tol_override);

    static ScenarioConfig load_file(const std::string& path, std::optional<ArithMode> mode_override,
                                    std::optional<double> tol_override);

private:
    explicit ScenarioConfig(ArithMode m);
};

}  // namespace qmd
