#include "qmd/config.hpp"

#include <fstream>

#include "qmd/json_io.hpp"

namespace qmd {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
}

ComplexScalar get_complex(const json& j, const char* key, const ComplexScalar& fallback,
                          ArithMode m) {
    if (!j.contains(key)) return fallback;
    return complex_from_json(j.at(key), m);
}

MediumParams medium_from_json(const json& j, const MediumParams& base, ArithMode m) {
    reject_unknown_keys(j, {"eps0", "mu0", "eps_r", "mu_r", "omega", "c"}, "medium");
    return MediumParams(get_complex(j, "eps0", base.eps0, m), get_complex(j, "mu0", base.mu0, m),
                        get_complex(j, "eps_r", base.eps_r, m),
                        get_complex(j, "mu_r", base.mu_r, m),
                        get_complex(j, "omega", base.omega, m), get_complex(j, "c", base.c, m));
}

DiracParams dirac_from_json(const json& j, const DiracParams& base, ArithMode m) {
    reject_unknown_keys(j, {"energy", "mass", "hbar", "c"}, "dirac");
    return DiracParams(get_complex(j, "energy", base.energy, m),
                       get_complex(j, "mass", base.mass, m),
                       get_complex(j, "hbar", base.hbar, m), get_complex(j, "c", base.c, m));
}

GridSpec grid_from_json(const json& j, const GridSpec& base) {
    reject_unknown_keys(j, {"corner", "extent", "h"}, "grid");
    GridSpec g = base;
    if (j.contains("corner")) {
        const auto& c = j.at("corner");
        if (!c.is_array() || c.size() != 3)
            throw std::invalid_argument("grid corner must be an array of three numbers");
        for (int i = 0; i < 3; ++i) g.box.corner[static_cast<size_t>(i)] = c[static_cast<size_t>(i)].get<double>();
    }
    if (j.contains("extent")) {
        const auto& e = j.at("extent");
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("grid extent must be an array of three numbers");
        for (int i = 0; i < 3; ++i) g.box.extent[static_cast<size_t>(i)] = e[static_cast<size_t>(i)].get<double>();
    }
    if (j.contains("h")) g.h = j.at("h").get<double>();
    return g;
}

}  // namespace

ScenarioConfig::ScenarioConfig(ArithMode m)
    : mode(m),
      medium(MediumParams::vacuum_natural(ComplexScalar::integer(4, m))),
      dirac(DiracParams::natural(ComplexScalar::integer(5, m), ComplexScalar::integer(3, m))),
      transport{MediumParams::vacuum_natural(ComplexScalar::one(m)),
                DiracParams::natural(ComplexScalar::one(m), ComplexScalar::zero(m)),
                AnalyticField::plane_wave({ComplexScalar::zero(m), ComplexScalar::one(m),
                                           ComplexScalar::zero(m), ComplexScalar::zero(m)},
                                          {ComplexScalar::zero(m), ComplexScalar::zero(m),
                                           ComplexScalar::one(m)}),
                AnalyticField::plane_wave({ComplexScalar::zero(m), ComplexScalar::zero(m),
                                           ComplexScalar::one(m), ComplexScalar::zero(m)},
                                          {ComplexScalar::zero(m), ComplexScalar::zero(m),
                                           ComplexScalar::one(m)})} {}

ScenarioConfig ScenarioConfig::defaults(ArithMode m) {
    return ScenarioConfig(m);
}

ScenarioConfig ScenarioConfig::from_json(const json& j, std::optional<ArithMode> mode_override,
                                         std::optional<double> tol_override) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    reject_unknown_keys(
        j, {"mode", "tolerance", "seed", "suites", "medium", "dirac", "grid", "transport"},
        "config");

    ArithMode m = ArithMode::Exact;
    if (j.contains("mode")) m = arith_mode_from_string(j.at("mode").get<std::string>());
    if (mode_override) m = *mode_override;

    ScenarioConfig cfg(m);
    if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
    if (tol_override) cfg.tolerance = *tol_override;
    if (cfg.tolerance < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("suites")) {
        if (!j.at("suites").is_array()) throw std::invalid_argument("suites must be an array");
        cfg.suites.clear();
        for (const auto& s : j.at("suites")) cfg.suites.push_back(s.get<std::string>());
    }
    if (j.contains("medium")) cfg.medium = medium_from_json(j.at("medium"), cfg.medium, m);
    if (j.contains("dirac")) cfg.dirac = dirac_from_json(j.at("dirac"), cfg.dirac, m);
    if (j.contains("grid")) cfg.grid = grid_from_json(j.at("grid"), cfg.grid);
    if (j.contains("transport")) {
        const auto& t = j.at("transport");
        reject_unknown_keys(t, {"medium", "dirac", "electric", "magnetic"}, "transport");
        if (t.contains("medium"))
            cfg.transport.medium = medium_from_json(t.at("medium"), cfg.transport.medium, m);
        if (t.contains("dirac"))
            cfg.transport.dirac = dirac_from_json(t.at("dirac"), cfg.transport.dirac, m);
        if (t.contains("electric")) cfg.transport.electric = field_from_json(t.at("electric"), m);
        if (t.contains("magnetic")) cfg.transport.magnetic = field_from_json(t.at("magnetic"), m);
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load_file(const std::string& path,
                                         std::optional<ArithMode> mode_override,
                                         std::optional<double> tol_override) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
    }
    return from_json(j, mode_override, tol_override);
}

}  // namespace qmd
