// Acceptance suite: one check per release criterion, one line of output
// each. Criteria run against the exact-arithmetic engine except where a
// floating-point bound is part of the criterion itself. Exits nonzero when
// any selected criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmd/bridge.hpp"
#include "qmd/expr.hpp"
#include "qmd/grid.hpp"
#include "qmd/suites.hpp"

namespace {

using namespace qmd;
using Clock = std::chrono::steady_clock;

constexpr ArithMode EX = ArithMode::Exact;

std::string g_cli_path;
std::string g_config_path;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: the operator identity and both reverse directions -----

Outcome criterion_relop() {
    auto t0 = Clock::now();
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto alpha = alpha_vector(p);
    auto kappa = ComplexScalar::exact(4);
    auto ids = relop_check(kappa, alpha);
    bool ok = ids.forward.is_zero() && ids.reverse_plus.is_zero() && ids.reverse_minus.is_zero();
    double dt = seconds_since(t0);
    if (dt >= 1.0) return {false, "runtime " + format_double(dt) + "s exceeds 1s"};
    if (!ok) return {false, "a normal-form difference is nonempty"};
    return {true, "forward and both reverse identities are empty normal forms in " +
                      format_double(dt) + "s"};
}

// ---- criterion 2: projector laws and the off-condition defect -----------

Outcome criterion_projectors() {
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto alpha = alpha_vector(p);
    auto at4 = projector_laws(projectors(ComplexScalar::exact(4), alpha));
    if (!at4.all_zero()) return {false, "laws fail at kappa = 4"};
    auto at1 = projector_laws(projectors(ComplexScalar::exact(1), alpha));
    auto expected = Quaternion::scalar(ComplexScalar::exact(Rational(-15, 4)));
    if (!(at1.orthogonality_mp == expected && at1.orthogonality_pm == expected))
        return {false, "orthogonality product at kappa = 1 is not -15/4"};
    return {true, "idempotence/orthogonality exact at kappa=4; defect at kappa=1 equals -15/4"};
}

// ---- criterion 3: gamma reconstruction ----------------------------------

Outcome criterion_gammas() {
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto n = conjugated_dirac(p);
    if (n.has_reflections()) return {false, "N has a residual reflection mask"};
    GammaReconstruction rec = reconstruct_gammas(EX);  // throws if Q singular or Clifford fails
    if (rec.gammas.clifford_sign != 1 && rec.gammas.clifford_sign != -1)
        return {false, "no single Clifford sign"};
    auto triple = rec.gammas.g1 * rec.gammas.g2 * rec.gammas.g3;
    if (!(rec.q_matrix == triple)) {
        std::string measured = rec.q_matrix == -triple ? "Q == -g1*g2*g3" : "no sign relates them";
        return {false,
                "masks empty, Q invertible, Clifford holds with s = " +
                    std::to_string(rec.gammas.clifford_sign) + ", but Q != g1*g2*g3 (measured: " +
                    measured + "; the conjugation identity certifies with sign +1, not -1)"};
    }
    return {true, "reconstruction satisfies every clause including Q == g1*g2*g3"};
}

// ---- criterion 4: the transform pair ------------------------------------

Outcome criterion_transform() {
    auto t = TransformA::standard(EX);
    if (!(t.inverse_m * t.forward_m == Matrix4::identity(EX)))
        return {false, "A_inv * A != Id"};

    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4), ki(-2, 2);
    for (int it = 0; it < 50; ++it) {
        auto rc = [&] {
            return ComplexScalar::exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        };
        auto phi = AnalyticField::plane_wave({rc(), rc(), rc(), rc()},
                                             {ComplexScalar::integer(ki(rng), EX),
                                              ComplexScalar::integer(ki(rng), EX),
                                              ComplexScalar::integer(ki(rng), EX)});
        if (!(transform_A_inv(transform_A(phi)) - phi).is_zero())
            return {false, "exact round-trip failed"};
        if (!(transform_A(transform_A_inv(phi)) - phi).is_zero())
            return {false, "exact round-trip failed in the other order"};
    }
    double worst = 0.0;
    for (int it = 0; it < 50; ++it) {
        auto rc = [&] {
            return ComplexScalar::floating(static_cast<double>(num(rng)) / static_cast<double>(den(rng)),
                                           static_cast<double>(num(rng)) / static_cast<double>(den(rng)));
        };
        auto phi = AnalyticField::plane_wave(
            {rc(), rc(), rc(), rc()},
            {ComplexScalar::floating(static_cast<double>(ki(rng))),
             ComplexScalar::floating(static_cast<double>(ki(rng))),
             ComplexScalar::floating(static_cast<double>(ki(rng)))});
        worst = std::max(worst, (transform_A_inv(transform_A(phi)) - phi).sup_amp_norm());
        worst = std::max(worst, (transform_A(transform_A_inv(phi)) - phi).sup_amp_norm());
    }
    if (worst > 1e-14) return {false, "float round-trip residual " + format_double(worst)};
    return {true, "A_inv*A == Id; 50 exact round-trips residual 0; float residual " +
                      format_double(worst) + " <= 1e-14"};
}

// ---- criterion 5: transport soundness ------------------------------------

Outcome criterion_transport() {
    auto O = ComplexScalar::zero(EX), I = ComplexScalar::one(EX);
    auto m = MediumParams::vacuum_natural(I);
    auto pair = MaxwellPair{AnalyticField::plane_wave({O, I, O, O}, {O, O, I}),
                            AnalyticField::plane_wave({O, O, I, O}, {O, O, I})};
    auto p = DiracParams::natural(I, O);
    auto f = maxwell_to_dirac(pair, m, p);
    auto expected = AnalyticField::plane_wave({-I, O, I, O}, {O, O, I});
    if (!(f - expected).is_zero()) return {false, "f != -i0 e^{j x3} + i2 e^{j x3}"};
    if (!apply_operator(dirac_quaternionic(p), f).is_zero())
        return {false, "D_alpha f != 0"};
    if (f.scalar_part().is_zero()) return {false, "scalar part vanished"};
    return {true, "f == (-i0 + i2) e^{j x3}, D_alpha f == 0 exactly, Sc(f) nonzero"};
}

// ---- criterion 6: the Maxwell/Beltrami equivalences ----------------------

Outcome criterion_maxwell() {
    auto O = ComplexScalar::zero(EX), I = ComplexScalar::one(EX);
    auto m = MediumParams::vacuum_natural(ComplexScalar::exact(4));
    auto kappa = wavenumber(m);
    const std::array<ComplexScalar, 3> e1{I, O, O}, e2{O, I, O}, e3{O, O, I};
    for (const auto& [khat, pol] :
         {std::pair{e3, e1}, std::pair{e1, e2}, std::pair{e2, e3}}) {
        auto pair = plane_wave(m, khat, pol);
        if (!maxwell_residuals(pair, m).all_zero())
            return {false, "a generated pair violates the classical equations"};
        auto [q1, q2] = maxwell_quaternionic_residuals(pair, m);
        if (!q1.is_zero() || !q2.is_zero())
            return {false, "a generated pair violates the quaternionic form"};
        auto [phi, psi] = to_beltrami(pair, m);
        if (!beltrami_residual(phi, kappa, Sign::Minus).is_zero() ||
            !beltrami_residual(psi, kappa, Sign::Plus).is_zero())
            return {false, "a generated pair violates the diagonal form"};
    }
    auto pair = plane_wave(m, e3, e1);
    auto bad = MaxwellPair{pair.electric, pair.magnetic.scale(ComplexScalar::ratio(11, 10, EX))};
    if (maxwell_residuals(bad, m).ampere.is_zero())
        return {false, "perturbation left the first equation satisfied"};
    auto [phib, psib] = to_beltrami(bad, m);
    (void)psib;
    if (beltrami_residual(phib, kappa, Sign::Minus).is_zero())
        return {false, "perturbation left (D - kappa)phi == 0"};
    return {true, "all residual families vanish on solutions and flag the 10% perturbation"};
}

// ---- criterion 7: the dispersion chain -----------------------------------

Outcome criterion_dispersion() {
    auto m = MediumParams::vacuum_natural(ComplexScalar::exact(4));
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto rec = DispersionRecord::from(m, p);
    if (!(rec.kappa == ComplexScalar::exact(4)) || !(rec.momentum == ComplexScalar::exact(4)))
        return {false, "kappa or momentum is not 4"};
    if (!dispersion_check(rec).all_zero()) return {false, "a dispersion residual is nonzero"};
    auto e2 = rec.energy * rec.energy;
    auto rhs = rec.momentum * rec.momentum * rec.c * rec.c +
               rec.mass * rec.mass * rec.c * rec.c * rec.c * rec.c;
    if (!(e2 == rhs)) return {false, "25 != 16 + 9"};

    auto mm = MediumParams::vacuum_natural(ComplexScalar::one(EX));
    auto pm = DiracParams::natural(ComplexScalar::one(EX), ComplexScalar::zero(EX));
    auto rm = DispersionRecord::from(mm, pm);
    if (!dispersion_check(rm).all_zero() || !(rm.energy == rm.hbar * rm.omega) ||
        !(rm.hbar * rm.omega == rm.momentum * rm.c))
        return {false, "massless chain broke"};
    return {true, "kappa = omega = p = 4 with 25 == 16 + 9; massless E == hbar*omega == p*c"};
}

// ---- criterion 8: operator sanity and the finite-difference cross-check --

Outcome criterion_fd() {
    auto t0 = Clock::now();
    auto d_exact = moisil_theodoresco(EX);
    auto lap = DiffOperator::zero(EX);
    for (int k = 1; k <= 3; ++k)
        lap = lap + compose(DiffOperator::partial(k, EX), DiffOperator::partial(k, EX));
    if (!(compose(d_exact, d_exact) + lap).is_zero())
        return {false, "D*D != -Laplacian in normal form"};

    const ArithMode F = ArithMode::Float;
    auto O = ComplexScalar::zero(F), I = ComplexScalar::one(F);
    GridBox box{{-1.0, -1.0, -1.0}, {2.0, 2.0, 2.0}};
    auto f = AnalyticField::plane_wave({O, I, O, O}, {O, O, I});
    auto d = moisil_theodoresco(F);
    auto err = [&](double h) {
        auto g = sample(f, box, h);
        auto numeric = fd_apply(d, g);
        auto truth = sample(apply_operator(d, f), box, h);
        truth.set_margin(numeric.margin());
        return residual_max(grid_sub(numeric, truth));
    };
    double e1 = err(0.1), e2 = err(0.05);
    double ratio = e1 / e2;
    double dt = seconds_since(t0);
    if (dt >= 10.0) return {false, "runtime " + format_double(dt) + "s exceeds 10s"};
    if (!(ratio >= 3.5 && ratio <= 4.5))
        return {false, "error ratio " + format_double(ratio) + " outside [3.5, 4.5]"};
    if (!(std::log2(ratio) >= 1.8))
        return {false, "observed order " + format_double(std::log2(ratio)) + " below 1.8"};
    return {true, "D*D == -Laplacian exactly; halving h gives ratio " + format_double(ratio) +
                      " (order " + format_double(std::log2(ratio)) + ") in " +
                      format_double(dt) + "s"};
}

// ---- criterion 9: the CLI contract ---------------------------------------

struct CliRun {
    int status;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = "\"" + g_cli_path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

Outcome criterion_cli() {
    if (g_cli_path.empty() || g_config_path.empty())
        return {false, "pass --cli and --config to run the CLI criterion"};

    const std::string args =
        "verify --suite all --mode exact --format json --config \"" + g_config_path + "\"";
    auto r1 = run_cli(args);
    if (r1.status != 0) return {false, "verify exited with status " + std::to_string(r1.status)};
    auto r2 = run_cli(args);
    if (r1.output != r2.output || r1.output.empty())
        return {false, "two runs differ byte for byte"};

    const char* corpus[] = {
        "D", "d1", "d2", "d3", "R1", "R2", "R3",
        "L[0,1,0,0]", "M[0,-5j,-3,0]", "5", "5j", "3/8",
        "D + M[0,-5j,-3,0]", "D*D + (d1*d1 + d2*d2 + d3*d3)",
        "M[0,1,0,0] * M[0,0,1,0]", "R3*d3 + d3*R3", "(D - 4) * (D + 4)",
        "L[1/2,0,-1/2j,0]*d1*d2*R3", "(d1 + d2)*(d1 - d2)",
        "M[1,2,3,4]*L[0,0,0,1] - L[0,0,0,1]*M[1,2,3,4]", "0 - D", "1 + 2j",
    };
    size_t count = 0;
    for (const char* src : corpus) {
        auto e1 = parse_operator(src, EX);
        auto e2 = parse_operator(print_expr(e1), EX);
        if (!(e1 == e2) || !(lower(e1, EX) == lower(e2, EX)))
            return {false, std::string("round-trip failed for '") + src + "'"};
        ++count;
    }
    return {true, "verify exits 0 with byte-identical reports; " + std::to_string(count) +
                      "-expression corpus round-trips"};
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "operator identity (forward and both reverse directions)", criterion_relop},
    {2, "projector laws and the off-condition defect", criterion_projectors},
    {3, "gamma reconstruction", criterion_gammas},
    {4, "transform exactness", criterion_transform},
    {5, "transport soundness", criterion_transport},
    {6, "Maxwell/Beltrami equivalence", criterion_maxwell},
    {7, "dispersion chain", criterion_dispersion},
    {8, "operator algebra sanity and FD cross-check", criterion_fd},
    {9, "CLI determinism and parser corpus", criterion_cli},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;  // 0 = all
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string { return i + 1 < argc ? argv[++i] : ""; };
        if (a == "--criterion") {
            std::string v = next();
            if (v != "all") selected = std::stoi(v);
        } else if (a == "--cli") {
            g_cli_path = next();
        } else if (a == "--config") {
            g_config_path = next();
        } else {
            std::cerr << "usage: acceptance [--criterion N|all] [--cli path] [--config path]\n";
            return 2;
        }
    }

    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (selected != 0 && c.number != selected) continue;
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.number << " [" << (o.pass ? "PASS" : "FAIL") << "] "
                  << c.title << " -- " << o.detail << "\n";
    }
    return all_pass ? 0 : 1;
}
