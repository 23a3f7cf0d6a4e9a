#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmd/arith.hpp"

namespace qmd {

/// One executed check. `identity` names the mathematical claim being
/// certified; `residual` is the observed defect in the max norm and
/// `tolerance` the bound it was held to (0 in exact mode).
struct CheckResult {
    std::string name;
    std::string identity;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    ArithMode mode = ArithMode::Exact;
    std::string detail;  // optional free-form note
};

/// Sign and orientation conventions the engine fixes or measures; every
/// report carries them so results are interpretable on their own.
struct Conventions {
    std::string maxwell_time_factor = "exp(-j*omega*t)";
    std::string dirac_time_factor = "exp(+j*(E/hbar)*t)";
    std::optional<int> clifford_sign;       // s in {g_mu, g_nu} = 2 s eta_mu_nu
    std::optional<int> gamma_triple_sign;   // t in Q = t * g1*g2*g3
    std::optional<int> conjugation_sign;    // c in D_alpha = c * A (g1g2g3 DD) A^-1
};

class VerificationReport {
public:
    explicit VerificationReport(ArithMode mode, double tolerance)
        : mode_(mode), tolerance_(tolerance) {}

    /// Appends a check; names must be unique within one report.
    void add(CheckResult r);

    ArithMode mode() const { return mode_; }
    double tolerance() const { return tolerance_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    Conventions& conventions() { return conventions_; }
    const Conventions& conventions() const { return conventions_; }

    bool all_pass() const;
    size_t passed() const;

private:
    ArithMode mode_;
    double tolerance_;
    Conventions conventions_;
    std::vector<CheckResult> checks_;
};

/// Stable-ordered JSON form of a report (schema documented in docs/).
nlohmann::ordered_json report_to_json(const VerificationReport& r);

/// One line per check plus a summary block.
std::string report_to_text(const VerificationReport& r);

/// Render in the requested format ("json" or "text").
std::string emit_report(const VerificationReport& r, const std::string& format);

}  // namespace qmd
