#include "qmd/report.hpp"

#include <algorithm>

namespace qmd {

using nlohmann::ordered_json;

void VerificationReport::add(CheckResult r) {
    for (const auto& c : checks_)
        if (c.name == r.name)
            throw std::logic_error("duplicate check name in report: " + r.name);
    checks_.push_back(std::move(r));
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

size_t VerificationReport::passed() const {
    return static_cast<size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; }));
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["report"] = "quaternionic-maxwell-dirac-verification";
    j["mode"] = to_string(r.mode());
    j["tolerance"] = r.tolerance();
    ordered_json conv;
    conv["maxwell_time_factor"] = r.conventions().maxwell_time_factor;
    conv["dirac_time_factor"] = r.conventions().dirac_time_factor;
    if (r.conventions().clifford_sign) conv["clifford_sign"] = *r.conventions().clifford_sign;
    if (r.conventions().gamma_triple_sign)
        conv["gamma_triple_sign"] = *r.conventions().gamma_triple_sign;
    if (r.conventions().conjugation_sign)
        conv["conjugation_sign"] = *r.conventions().conjugation_sign;
    j["conventions"] = conv;
    auto checks = ordered_json::array();
    for (const auto& c : r.checks()) {
        ordered_json e;
        e["name"] = c.name;
        e["identity"] = c.identity;
        e["status"] = c.pass ? "pass" : "fail";
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["mode"] = to_string(c.mode);
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    ordered_json summary;
    summary["total"] = r.checks().size();
    summary["passed"] = r.passed();
    summary["failed"] = r.checks().size() - r.passed();
    j["summary"] = summary;
    return j;
}

std::string report_to_text(const VerificationReport& r) {
    std::string out;
    for (const auto& c : r.checks()) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        out += "  residual=" + format_double(c.residual);
        out += " tol=" + format_double(c.tolerance);
        out += " mode=";
        out += to_string(c.mode);
        out += "  :: " + c.identity;
        if (!c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    out += "summary: " + std::to_string(r.passed()) + "/" + std::to_string(r.checks().size()) +
           " passed\n";
    out += "conventions: maxwell " + r.conventions().maxwell_time_factor + "; dirac " +
           r.conventions().dirac_time_factor;
    if (r.conventions().clifford_sign)
        out += "; clifford_sign=" + std::to_string(*r.conventions().clifford_sign);
    if (r.conventions().gamma_triple_sign)
        out += "; gamma_triple_sign=" + std::to_string(*r.conventions().gamma_triple_sign);
    if (r.conventions().conjugation_sign)
        out += "; conjugation_sign=" + std::to_string(*r.conventions().conjugation_sign);
    out += "\n";
    return out;
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r).dump(2) + "\n";
    if (format == "text") return report_to_text(r);
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace qmd
