#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmd/expr.hpp"
#include "qmd/json_io.hpp"
#include "qmd/suites.hpp"

namespace {

using namespace qmd;
using nlohmann::ordered_json;

struct CommonOpts {
    std::string config_path;
    std::string mode;
    std::string format = "text";
    double tolerance = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "scenario config file (JSON)");
    cmd->add_option("--mode", o.mode, "arithmetic mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--tol", o.tolerance, "residual tolerance for float mode (default 1e-12)");
}

ScenarioConfig resolve_config(const CommonOpts& o) {
    std::optional<ArithMode> mode;
    if (!o.mode.empty()) mode = arith_mode_from_string(o.mode);
    std::optional<double> tol;
    if (o.tolerance >= 0.0) tol = o.tolerance;
    if (!o.config_path.empty()) return ScenarioConfig::load_file(o.config_path, mode, tol);
    auto cfg = ScenarioConfig::defaults(mode.value_or(ArithMode::Exact));
    if (tol) cfg.tolerance = *tol;
    return cfg;
}

int run_verify(const CommonOpts& o, const std::vector<std::string>& suites) {
    auto cfg = resolve_config(o);
    if (!suites.empty()) cfg.suites = suites;
    auto rep = run_suites(cfg);
    std::cout << emit_report(rep, o.format);
    return rep.all_pass() ? 0 : 1;
}

int run_gamma(const CommonOpts& o) {
    auto cfg = resolve_config(o);
    auto rec = reconstruct_gammas(cfg.mode);
    ordered_json j;
    j["gamma0"] = matrix_to_json(rec.gammas.g0);
    j["gamma1"] = matrix_to_json(rec.gammas.g1);
    j["gamma2"] = matrix_to_json(rec.gammas.g2);
    j["gamma3"] = matrix_to_json(rec.gammas.g3);
    j["q_matrix"] = matrix_to_json(rec.q_matrix);
    j["clifford_sign"] = rec.gammas.clifford_sign;
    j["gamma_triple_sign"] = rec.triple_sign;
    j["conjugation_sign"] = rec.conjugation_sign;
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "clifford_sign " << rec.gammas.clifford_sign << ", gamma_triple_sign "
                  << rec.triple_sign << ", conjugation_sign " << rec.conjugation_sign << "\n"
                  << j.dump(2) << "\n";
    }
    return 0;
}

int run_transport(const CommonOpts& o) {
    auto cfg = resolve_config(o);
    const auto& ts = cfg.transport;
    auto f = maxwell_to_dirac(MaxwellPair{ts.electric, ts.magnetic}, ts.medium, ts.dirac,
                              cfg.tolerance);
    auto residual = apply_operator(dirac_quaternionic(ts.dirac), f);
    bool pass = cfg.mode == ArithMode::Exact ? residual.is_zero()
                                             : residual.sup_amp_norm() <= cfg.tolerance;
    if (o.format == "json") {
        ordered_json j;
        j["field"] = field_to_json(f);
        j["dirac_residual"] = residual.sup_amp_norm();
        j["scalar_part_norm"] = f.scalar_part().sup_amp_norm();
        j["status"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " transport  dirac_residual="
                  << format_double(residual.sup_amp_norm())
                  << " scalar_part_norm=" << format_double(f.scalar_part().sup_amp_norm())
                  << "\n"
                  << "f = " << field_to_json(f).dump() << "\n";
    }
    return pass ? 0 : 1;
}

int run_dispersion(const CommonOpts& o) {
    auto cfg = resolve_config(o);
    auto rec = DispersionRecord::from(cfg.medium, cfg.dirac);
    auto rep = dispersion_check(rec);
    bool pass = cfg.mode == ArithMode::Exact ? rep.all_zero() : rep.sup_norm() <= cfg.tolerance;
    ordered_json j;
    j["omega"] = complex_to_json(rec.omega);
    j["kappa"] = complex_to_json(rec.kappa);
    j["energy"] = complex_to_json(rec.energy);
    j["mass"] = complex_to_json(rec.mass);
    j["momentum"] = complex_to_json(rec.momentum);
    j["eps_r"] = complex_to_json(rec.eps_r);
    j["mu_r"] = complex_to_json(rec.mu_r);
    j["hbar"] = complex_to_json(rec.hbar);
    j["c"] = complex_to_json(rec.c);
    j["residuals"]["kappa_vs_alpha"] = rep.kappa_vs_alpha.modulus();
    j["residuals"]["planck_einstein"] = rep.planck_einstein.modulus();
    j["residuals"]["energy_momentum"] = rep.energy_momentum.modulus();
    j["status"] = pass ? "pass" : "fail";
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " dispersion  kappa="
                  << rec.kappa.str() << " p=" << rec.momentum.str()
                  << " residual=" << format_double(rep.sup_norm()) << "\n";
    }
    return pass ? 0 : 1;
}

int run_eval(const CommonOpts& o, const std::string& op_text, const std::string& field_arg) {
    auto cfg = resolve_config(o);
    auto ast = parse_operator(op_text, cfg.mode);
    auto op = lower(ast, cfg.mode);

    std::string field_text = field_arg;
    if (!field_arg.empty() && field_arg[0] == '@') {
        std::ifstream in(field_arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open field file: " + field_arg.substr(1));
        field_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    auto f = field_from_json(nlohmann::json::parse(field_text), cfg.mode);
    auto result = apply_operator(op, f);

    if (o.format == "json") {
        ordered_json j;
        j["operator"] = print_operator(op);
        j["result"] = field_to_json(result);
        j["result_norm"] = result.sup_amp_norm();
        j["is_zero"] = result.is_zero();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "operator: " << print_operator(op) << "\n"
                  << "result norm: " << format_double(result.sup_amp_norm())
                  << (result.is_zero() ? " (identically zero)" : "") << "\n"
                  << "result: " << field_to_json(result).dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic Maxwell/Dirac verification engine"};
    app.require_subcommand(1);

    CommonOpts vo, go, to, dso, eo;
    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, vo);
    verify->add_option("--suite", suites, "suites to run (default: from config; 'all' = everything)");

    auto* gamma = app.add_subcommand("gamma", "dump the reconstructed gamma matrices");
    add_common(gamma, go);
    go.format = "json";

    auto* transport = app.add_subcommand("transport", "Maxwell -> Dirac solution transport");
    add_common(transport, to);

    auto* dispersion = app.add_subcommand("dispersion", "check the dispersion chain");
    add_common(dispersion, dso);

    auto* eval = app.add_subcommand("eval", "apply an operator expression to a field literal");
    add_common(eval, eo);
    std::string op_text, field_arg;
    eval->add_option("--op", op_text, "operator expression")->required();
    eval->add_option("--field", field_arg, "field literal JSON, or @file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(vo, suites);
        if (gamma->parsed()) return run_gamma(go);
        if (transport->parsed()) return run_transport(to);
        if (dispersion->parsed()) return run_dispersion(dso);
        if (eval->parsed()) return run_eval(eo, op_text, field_arg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
