#include "qmd/suites.hpp"

#include <cmath>
#include <random>

#include "qmd/bridge.hpp"
#include "qmd/grid.hpp"

namespace qmd {

namespace {

// Shared helpers: each check reduces to a defect that must vanish, a
// defect that must NOT vanish (witness), or an explicit expectation.
struct Ctx {
    const ScenarioConfig& cfg;
    VerificationReport& rep;
    std::mt19937_64 rng;

    Ctx(const ScenarioConfig& c, VerificationReport& r) : cfg(c), rep(r), rng(c.seed) {}

    ArithMode mode() const { return cfg.mode; }
    double tol() const { return cfg.mode == ArithMode::Exact ? 0.0 : cfg.tolerance; }

    ComplexScalar rnd() {
        std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
        long nr = num(rng), dr = den(rng), ni = num(rng), di = den(rng);
        if (mode() == ArithMode::Exact)
            return ComplexScalar::exact(Rational(nr, dr), Rational(ni, di));
        return ComplexScalar::floating(static_cast<double>(nr) / static_cast<double>(dr),
                                       static_cast<double>(ni) / static_cast<double>(di));
    }
    Quaternion rndq() { return {rnd(), rnd(), rnd(), rnd()}; }

    void vanishes(const std::string& name, const std::string& identity, double residual,
                  bool exact_zero, std::string detail = {}) {
        bool pass = mode() == ArithMode::Exact ? exact_zero : residual <= cfg.tolerance;
        rep.add({name, identity, pass, residual, tol(), mode(), std::move(detail)});
    }
    void vanishes(const std::string& name, const std::string& identity, const DiffOperator& d,
                  std::string detail = {}) {
        vanishes(name, identity, d.sup_norm(), d.is_zero(), std::move(detail));
    }
    void vanishes(const std::string& name, const std::string& identity, const AnalyticField& f,
                  std::string detail = {}) {
        vanishes(name, identity, f.sup_amp_norm(), f.is_zero(), std::move(detail));
    }
    void vanishes(const std::string& name, const std::string& identity, const Quaternion& q,
                  std::string detail = {}) {
        vanishes(name, identity, q.sup_norm(), q.is_zero(), std::move(detail));
    }
    void vanishes(const std::string& name, const std::string& identity, const Matrix4& mt,
                  std::string detail = {}) {
        vanishes(name, identity, mt.sup_norm(), mt.is_zero(), std::move(detail));
    }
    void expect(const std::string& name, const std::string& identity, bool pass, double residual,
                double tolerance, ArithMode m, std::string detail = {}) {
        rep.add({name, identity, pass, residual, tolerance, m, std::move(detail)});
    }
};

// ---------------------------------------------------------------- algebra

void suite_algebra(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();

    double worst = 0.0;
    bool exact = true;
    for (int it = 0; it < 200; ++it) {
        auto a = c.rndq(), b = c.rndq(), d = c.rndq();
        auto diff = qmul(qmul(a, b), d) - qmul(a, qmul(b, d));
        worst = std::max(worst, diff.sup_norm());
        exact = exact && diff.is_zero();
    }
    c.vanishes("algebra/associativity-200", "(a*b)*c == a*(b*c)", worst, exact);

    worst = 0.0;
    exact = true;
    for (int it = 0; it < 100; ++it) {
        auto a = c.rndq(), b = c.rndq();
        auto diff = qmul(a, b) - qmul_vecform(a, b);
        worst = std::max(worst, diff.sup_norm());
        exact = exact && diff.is_zero();
    }
    c.vanishes("algebra/vecform-agreement",
               "a*b == a0 b0 - <a,b> + [a x b] + a0 b + b0 a", worst, exact);

    auto i1 = Quaternion::unit(1, m), i2 = Quaternion::unit(2, m), i3 = Quaternion::unit(3, m);
    bool witness = qmul(i1, i2) == i3 && qmul(i2, i1) == -i3 && !(qmul(i1, i2) == qmul(i2, i1));
    c.expect("algebra/noncommutativity", "i1*i2 == -i2*i1 == i3", witness,
             witness ? 0.0 : 1.0, 0.0, m);

    worst = 0.0;
    exact = true;
    for (int it = 0; it < 50; ++it) {
        auto p = c.rndq(), q = c.rndq();
        auto d1 = lift_left(qmul(p, q)) - lift_left(p) * lift_left(q);
        auto d2 = lift_right(qmul(p, q)) - lift_right(q) * lift_right(p);
        worst = std::max({worst, d1.sup_norm(), d2.sup_norm()});
        exact = exact && d1.is_zero() && d2.is_zero();
    }
    c.vanishes("algebra/lift-homomorphism", "L(pq) == L(p)L(q); R(pq) == R(q)R(p)", worst, exact);

    worst = 0.0;
    exact = true;
    for (int it = 0; it < 50; ++it) {
        auto p = c.rndq(), q = c.rndq();
        auto d = lift_left(p) * lift_right(q) - lift_right(q) * lift_left(p);
        worst = std::max(worst, d.sup_norm());
        exact = exact && d.is_zero();
    }
    c.vanishes("algebra/lift-commutation", "L(p) R(q) == R(q) L(p)", worst, exact);

    // alpha(E, m)^2 against the closed form, at the config hbar and c
    worst = 0.0;
    exact = true;
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        long en = num(c.rng), ed = den(c.rng), mn = num(c.rng), md = den(c.rng);
        auto energy = m == ArithMode::Exact
                          ? ComplexScalar::exact(Rational(en, ed))
                          : ComplexScalar::floating(static_cast<double>(en) / static_cast<double>(ed));
        auto mass = m == ArithMode::Exact
                        ? ComplexScalar::exact(Rational(mn, md))
                        : ComplexScalar::floating(static_cast<double>(mn) / static_cast<double>(md));
        auto j = ComplexScalar::imaginary(m);
        const auto& hbar = cfg.dirac.hbar;
        const auto& cc = cfg.dirac.c;
        auto alpha = Quaternion::vector(-j * energy / (cc * hbar), -mass * cc / hbar,
                                        ComplexScalar::zero(m));
        auto want = (energy * energy / (cc * cc) - mass * mass * cc * cc) / (hbar * hbar);
        auto diff = square_of_vector(alpha) - want;
        worst = std::max(worst, diff.modulus());
        exact = exact && diff.is_zero();
    }
    c.vanishes("algebra/vector-square-dispersion",
               "alpha^2 == (E^2/c^2 - m^2 c^2)/hbar^2", worst, exact);
}

// -------------------------------------------------------------- operators

void suite_operators(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();
    auto d = moisil_theodoresco(m);

    auto lap = DiffOperator::zero(m);
    for (int k = 1; k <= 3; ++k)
        lap = lap + compose(DiffOperator::partial(k, m), DiffOperator::partial(k, m));
    c.vanishes("operators/d-squared-laplacian", "D*D == -(d1*d1 + d2*d2 + d3*d3)",
               compose(d, d) + lap);

    auto random_atom = [&]() -> DiffOperator {
        std::uniform_int_distribution<int> kind(0, 4), axis(1, 3);
        switch (kind(c.rng)) {
            case 0: return DiffOperator::partial(axis(c.rng), m);
            case 1: return DiffOperator::reflect(axis(c.rng), m);
            case 2: return DiffOperator::const_left(c.rndq());
            case 3: return DiffOperator::const_right(c.rndq());
            default: return DiffOperator::scalar(c.rnd());
        }
    };
    double worst = 0.0;
    bool exact = true;
    for (int it = 0; it < 25; ++it) {
        std::uniform_int_distribution<size_t> len(2, 6);
        std::vector<DiffOperator> atoms;
        for (size_t i = 0, n = len(c.rng); i < n; ++i) atoms.push_back(random_atom());
        auto left = atoms[0];
        for (size_t i = 1; i < atoms.size(); ++i) left = compose(left, atoms[i]);
        auto right = atoms.back();
        for (size_t i = atoms.size() - 1; i-- > 0;) right = compose(atoms[i], right);
        auto diff = left - right;
        worst = std::max(worst, diff.sup_norm());
        exact = exact && diff.is_zero();
    }
    c.vanishes("operators/confluence", "association order does not change the normal form",
               worst, exact);

    auto d1 = DiffOperator::partial(1, m), d3 = DiffOperator::partial(3, m);
    auto r3 = DiffOperator::reflect(3, m);
    auto conj_d3 = compose(r3, compose(d3, r3)) + d3;
    auto conj_d1 = compose(r3, compose(d1, r3)) - d1;
    c.vanishes("operators/reflection-conjugation", "R3 d3 R3 == -d3; R3 d1 R3 == d1",
               conj_d3 + conj_d1);
    c.vanishes("operators/reflection-involution", "R3*R3 == Id",
               compose(r3, r3) - DiffOperator::identity(m));

    worst = 0.0;
    exact = true;
    for (int it = 0; it < 25; ++it) {
        auto p = c.rndq(), q = c.rndq();
        auto diff = compose(DiffOperator::const_right(p), DiffOperator::const_right(q)) -
                    DiffOperator::const_right(qmul(q, p));
        worst = std::max(worst, diff.sup_norm());
        exact = exact && diff.is_zero();
    }
    c.vanishes("operators/right-mult-reversal", "M^p after M^q == M^(q*p)", worst, exact);

    auto kappa = wavenumber(cfg.medium);
    auto split = d_kappa(kappa, Sign::Plus) - d_kappa(kappa, Sign::Minus) -
                 DiffOperator::scalar(kappa + kappa);
    c.vanishes("operators/d-kappa-split", "D_{+kappa} - D_{-kappa} == 2 kappa", split);

    c.vanishes("operators/d-alpha-zero", "D_0 == D", d_alpha(Quaternion::zero(m)) - d);
}

// ---------------------------------------------------------------- maxwell

void suite_maxwell(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();
    const auto& med = cfg.medium;
    auto kappa = wavenumber(med);

    auto kk = kappa * kappa - med.omega * med.omega * med.eps() * med.mu();
    c.vanishes("maxwell/kappa-consistency", "kappa^2 == omega^2 eps mu", kk.modulus(),
               kk.is_zero());

    auto O = ComplexScalar::zero(m), I = ComplexScalar::one(m);
    const std::array<ComplexScalar, 3> e1{I, O, O}, e2{O, I, O}, e3{O, O, I};
    const std::pair<std::array<ComplexScalar, 3>, std::array<ComplexScalar, 3>> cases[] = {
        {e3, e1}, {e1, e2}, {e2, e3}};

    double worst = 0.0;
    bool exact = true;
    double worst_q = 0.0;
    bool exact_q = true;
    double worst_b = 0.0;
    bool exact_b = true;
    for (const auto& [khat, pol] : cases) {
        auto pair = plane_wave(med, khat, pol);
        auto res = maxwell_residuals(pair, med);
        worst = std::max(worst, res.sup_norm());
        exact = exact && res.all_zero();
        auto [q1, q2] = maxwell_quaternionic_residuals(pair, med);
        worst_q = std::max({worst_q, q1.sup_amp_norm(), q2.sup_amp_norm()});
        exact_q = exact_q && q1.is_zero() && q2.is_zero();
        auto [phi, psi] = to_beltrami(pair, med);
        auto bphi = beltrami_residual(phi, kappa, Sign::Minus);
        auto bpsi = beltrami_residual(psi, kappa, Sign::Plus);
        worst_b = std::max({worst_b, bphi.sup_amp_norm(), bpsi.sup_amp_norm()});
        exact_b = exact_b && bphi.is_zero() && bpsi.is_zero();
    }
    c.vanishes("maxwell/plane-wave-solves", "generated pairs satisfy all four equations", worst,
               exact);
    c.vanishes("maxwell/quaternionic-equivalence", "D E == j w mu H and D H == -j w eps E",
               worst_q, exact_q);
    c.vanishes("maxwell/beltrami-diagonalization", "(D - kappa)phi == 0 and (D + kappa)psi == 0",
               worst_b, exact_b);

    // 10% perturbation of H must break both formulations and the phi field
    auto pair = plane_wave(med, e3, e1);
    auto bad = MaxwellPair{pair.electric,
                           pair.magnetic.scale(ComplexScalar::ratio(11, 10, m))};
    auto resb = maxwell_residuals(bad, med);
    auto [qb1, qb2] = maxwell_quaternionic_residuals(bad, med);
    auto [phib, psib] = to_beltrami(bad, med);
    auto bres = beltrami_residual(phib, kappa, Sign::Minus);
    double floor_ = std::min({resb.ampere.sup_amp_norm(),
                              std::max(qb1.sup_amp_norm(), qb2.sup_amp_norm()),
                              bres.sup_amp_norm()});
    c.expect("maxwell/perturbation-detected",
             "10% H perturbation yields nonzero residuals in every formulation", floor_ > 1e-3,
             floor_, 0.0, m, "residual floor must stay away from zero");
    (void)psib;

    double worst_rt = 0.0;
    bool exact_rt = true;
    for (int it = 0; it < 10; ++it) {
        std::uniform_int_distribution<long> ki(-2, 2);
        std::array<ComplexScalar, 3> k{ComplexScalar::integer(ki(c.rng), m),
                                       ComplexScalar::integer(ki(c.rng), m),
                                       ComplexScalar::integer(ki(c.rng), m)};
        auto e = AnalyticField::plane_wave({ComplexScalar::zero(m), c.rnd(), c.rnd(), c.rnd()}, k);
        auto h = AnalyticField::plane_wave({ComplexScalar::zero(m), c.rnd(), c.rnd(), c.rnd()}, k);
        auto [phi, psi] = to_beltrami(MaxwellPair{e, h}, med);
        auto back = from_beltrami(phi, psi, med);
        auto d1 = back.electric - e, d2 = back.magnetic - h;
        worst_rt = std::max({worst_rt, d1.sup_amp_norm(), d2.sup_amp_norm()});
        exact_rt = exact_rt && d1.is_zero() && d2.is_zero();
    }
    c.vanishes("maxwell/beltrami-roundtrip", "from_beltrami inverts to_beltrami", worst_rt,
               exact_rt);

    auto plus = circular_beltrami(kappa, e3, Sign::Plus);
    auto minus = circular_beltrami(kappa, e3, Sign::Minus);
    auto r1 = beltrami_residual(plus, kappa, Sign::Minus);
    auto r2 = beltrami_residual(minus, kappa, Sign::Plus);
    c.vanishes("maxwell/circular-eigenfields", "(D -+ kappa)(u +- j v)e^{j kappa <k,x>} == 0",
               r1 + r2);
}

// ------------------------------------------------------------------ dirac

void suite_dirac(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();
    const auto& p = cfg.dirac;
    auto j = ComplexScalar::imaginary(m);

    auto alpha = alpha_vector(p);
    auto a_want = Quaternion::vector(-j * p.coeff_a(), -p.coeff_b(), ComplexScalar::zero(m));
    c.vanishes("dirac/alpha-form", "alpha == -(1/hbar)(j(E/c) i1 + m c i2)", alpha - a_want);

    auto sq = square_of_vector(alpha) -
              (p.energy * p.energy / (p.c * p.c) - p.mass * p.mass * p.c * p.c) /
                  (p.hbar * p.hbar);
    c.vanishes("dirac/alpha-square", "alpha^2 == (E^2/c^2 - m^2 c^2)/hbar^2", sq.modulus(),
               sq.is_zero());

    auto t = TransformA::standard(m);
    c.vanishes("dirac/a-transform-identity", "A_inv * A == Id (with the 1/2 folded into A)",
               t.inverse_m * t.forward_m - Matrix4::identity(m));

    double worst = 0.0;
    bool exact = true;
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<long> ki(-2, 2);
        auto phi = AnalyticField::plane_wave({c.rnd(), c.rnd(), c.rnd(), c.rnd()},
                                             {ComplexScalar::integer(ki(c.rng), m),
                                              ComplexScalar::integer(ki(c.rng), m),
                                              ComplexScalar::integer(ki(c.rng), m)});
        auto diff = transform_A_inv(transform_A(phi)) - phi;
        worst = std::max(worst, diff.sup_amp_norm());
        exact = exact && diff.is_zero();
    }
    c.expect("dirac/a-transform-roundtrip", "A_inv(A(phi)) == phi on 50 random plane waves",
             m == ArithMode::Exact ? exact : worst <= 1e-14, worst,
             m == ArithMode::Exact ? 0.0 : 1e-14, m);

    auto n = conjugated_dirac(p);
    c.expect("dirac/conjugation-masks", "N = -A_inv D_alpha A has empty reflection masks",
             !n.has_reflections() && n.max_total_degree() <= 1, n.has_reflections() ? 1.0 : 0.0,
             0.0, m);

    std::optional<GammaReconstruction> maybe_rec;
    std::string recon_error;
    try {
        maybe_rec = reconstruct_gammas(m);
    } catch (const ReconstructionError& e) {
        recon_error = e.what();
    }
    if (!maybe_rec) {
        c.expect("dirac/gamma-clifford",
                 "reconstructed set satisfies {g_mu, g_nu} == 2 s eta_mu_nu with one sign s",
                 false, 1.0, 0.0, m, recon_error);
        return;
    }
    const auto& rec = *maybe_rec;
    rep.conventions().clifford_sign = rec.gammas.clifford_sign;
    rep.conventions().gamma_triple_sign = rec.triple_sign;
    rep.conventions().conjugation_sign = rec.conjugation_sign;

    c.expect("dirac/gamma-clifford",
             "reconstructed set satisfies {g_mu, g_nu} == 2 s eta_mu_nu with one sign s", true,
             0.0, 0.0, m, "s = " + std::to_string(rec.gammas.clifford_sign));

    auto p1 = DiracParams(ComplexScalar::integer(2, m), ComplexScalar::integer(3, m), p.hbar, p.c);
    auto p2 = DiracParams(ComplexScalar::integer(5, m), ComplexScalar::integer(1, m), p.hbar, p.c);
    auto rec2 = reconstruct_gammas(p1, p2);
    double pt = std::max({(rec2.gammas.g0 - rec.gammas.g0).sup_norm(),
                          (rec2.gammas.g1 - rec.gammas.g1).sup_norm(),
                          (rec2.gammas.g2 - rec.gammas.g2).sup_norm(),
                          (rec2.gammas.g3 - rec.gammas.g3).sup_norm()});
    c.vanishes("dirac/gamma-two-point-independence",
               "reconstruction does not depend on the parameter points", pt,
               pt == 0.0);

    c.expect("dirac/gamma-triple-sign", "Q == t * g1 g2 g3 for a single sign t",
             rec.triple_sign != 0, rec.triple_sign != 0 ? 0.0 : 1.0, 0.0, m,
             "measured t = " + std::to_string(rec.triple_sign));

    c.expect("dirac/conjugation-sign",
             "D_alpha == c * A (g1 g2 g3 DD) A_inv for a single sign c", rec.conjugation_sign != 0,
             rec.conjugation_sign != 0 ? 0.0 : 1.0, 0.0, m,
             "measured c = " + std::to_string(rec.conjugation_sign));

    // transported solution solves the covariant equation
    const auto& ts = cfg.transport;
    auto f = maxwell_to_dirac(MaxwellPair{ts.electric, ts.magnetic}, ts.medium, ts.dirac,
                              cfg.tolerance);
    auto q = transform_A_inv(f);
    c.vanishes("dirac/covariant-transport", "DD (A_inv f) == 0 for transported solutions",
               covariant_residual(q, rec.gammas, ts.dirac));

    // restatement: DD q == c * (g1g2g3)^{-1} A_inv [D_alpha A q] with the measured sign
    auto triple = rec.gammas.g1 * rec.gammas.g2 * rec.gammas.g3;
    auto tinv = triple.inverse();
    double worst_r = 0.0;
    bool exact_r = true;
    if (tinv && rec.conjugation_sign != 0) {
        for (int it = 0; it < 10; ++it) {
            std::uniform_int_distribution<long> ki(-2, 2);
            auto qq = AnalyticField::plane_wave({c.rnd(), c.rnd(), c.rnd(), c.rnd()},
                                                {ComplexScalar::integer(ki(c.rng), m),
                                                 ComplexScalar::integer(ki(c.rng), m),
                                                 ComplexScalar::integer(ki(c.rng), m)});
            auto lhs = covariant_residual(qq, rec.gammas, p);
            auto chained = apply_operator(DiffOperator::const_matrix(*tinv),
                                          transform_A_inv(apply_operator(dirac_quaternionic(p),
                                                                         transform_A(qq))));
            if (rec.conjugation_sign < 0) chained = -chained;
            auto diff = lhs - chained;
            worst_r = std::max(worst_r, diff.sup_amp_norm());
            exact_r = exact_r && diff.is_zero();
        }
    }
    c.vanishes("dirac/covariant-restatement",
               "DD q == c (g1g2g3)^{-1} A_inv[D_alpha A q] with the measured sign", worst_r,
               exact_r);

    auto mk = matching_kappa(p);
    auto mk_defect = mk * mk - square_of_vector(alpha);
    c.vanishes("dirac/matching-kappa", "matching_kappa(p)^2 == alpha^2", mk_defect.modulus(),
               mk_defect.is_zero());
}

// ----------------------------------------------------------------- bridge

void suite_projector_laws(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    auto kappa = wavenumber(cfg.medium);
    auto alpha = alpha_vector(cfg.dirac);
    auto pp = projectors(kappa, alpha);
    auto laws = projector_laws(pp);
    c.vanishes("projector-laws/completeness", "P+ + P- == 1", laws.completeness);
    c.vanishes("projector-laws/idempotence", "P+ P+ == P+ and P- P- == P-",
               std::max(laws.idempotence_plus.sup_norm(), laws.idempotence_minus.sup_norm()),
               laws.idempotence_plus.is_zero() && laws.idempotence_minus.is_zero());
    c.vanishes("projector-laws/orthogonality", "P- P+ == 0 and P+ P- == 0",
               std::max(laws.orthogonality_mp.sup_norm(), laws.orthogonality_pm.sup_norm()),
               laws.orthogonality_mp.is_zero() && laws.orthogonality_pm.is_zero());
}

void suite_bridge(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();
    auto kappa = wavenumber(cfg.medium);
    auto alpha = alpha_vector(cfg.dirac);

    auto pp = projectors(kappa, alpha);
    auto laws = projector_laws(pp);
    c.vanishes("bridge/projector-completeness", "P+ + P- == 1", laws.completeness);
    c.vanishes("bridge/projector-idempotence", "P+ P+ == P+ and P- P- == P-",
               std::max(laws.idempotence_plus.sup_norm(), laws.idempotence_minus.sup_norm()),
               laws.idempotence_plus.is_zero() && laws.idempotence_minus.is_zero());
    c.vanishes("bridge/projector-orthogonality", "P- P+ == 0 and P+ P- == 0",
               std::max(laws.orthogonality_mp.sup_norm(), laws.orthogonality_pm.sup_norm()),
               laws.orthogonality_mp.is_zero() && laws.orthogonality_pm.is_zero());

    // fixed defect at kappa = 1 against alpha(5,3): (1 - 16)/4 = -15/4
    {
        auto a53 = Quaternion::vector(ComplexScalar::integer(-5, m) * ComplexScalar::imaginary(m),
                                      ComplexScalar::integer(-3, m), ComplexScalar::zero(m));
        auto pp1 = projectors(ComplexScalar::one(m), a53);
        auto defect = projector_laws(pp1).orthogonality_mp -
                      Quaternion::scalar(ComplexScalar::ratio(-15, 4, m));
        c.vanishes("bridge/projector-defect-expected",
                   "off the matching condition P- P+ == (kappa^2 - alpha^2)/(4 kappa^2)", defect);
    }

    auto ids = relop_check(kappa, alpha);
    c.vanishes("bridge/relop-forward", "D_alpha == P+ D_kappa + P- D_-kappa", ids.forward);
    c.vanishes("bridge/relop-reverse-plus", "D_kappa == P+ D_alpha + P- D_-alpha",
               ids.reverse_plus);
    c.vanishes("bridge/relop-reverse-minus", "D_-kappa == P- D_alpha + P+ D_-alpha",
               ids.reverse_minus);
    c.vanishes("bridge/relop-commutation", "P+- commute with D_+-kappa",
               std::max(ids.commute_plus.sup_norm(), ids.commute_minus.sup_norm()),
               ids.commute_plus.is_zero() && ids.commute_minus.is_zero());
    c.vanishes("bridge/relop-mixed-commutation", "P+ D_alpha == D_kappa P+ (and the minus form)",
               std::max(ids.mixed_plus.sup_norm(), ids.mixed_minus.sup_norm()),
               ids.mixed_plus.is_zero() && ids.mixed_minus.is_zero());

    // the linear identity survives off the matching condition; the mixed one fails
    {
        auto a53 = Quaternion::vector(ComplexScalar::integer(-5, m) * ComplexScalar::imaginary(m),
                                      ComplexScalar::integer(-3, m), ComplexScalar::zero(m));
        auto off = relop_check(ComplexScalar::one(m), a53);
        c.vanishes("bridge/relop-linear-unconditional",
                   "D_alpha == P+ D_kappa + P- D_-kappa holds for every kappa != 0", off.forward,
                   "checked at kappa = 1 with alpha^2 = 16");
        double defect = off.mixed_plus.sup_norm();
        c.expect("bridge/relop-mixed-needs-matching",
                 "P+ D_alpha == D_kappa P+ fails when kappa^2 != alpha^2", defect > 1e-3, defect,
                 0.0, m, "nonzero defect expected");
    }

    // transport on the configured pair
    const auto& ts = cfg.transport;
    auto f = maxwell_to_dirac(MaxwellPair{ts.electric, ts.magnetic}, ts.medium, ts.dirac,
                              cfg.tolerance);
    auto t_alpha = alpha_vector(ts.dirac);
    auto t_kappa = wavenumber(ts.medium);
    c.vanishes("bridge/transport-solves", "D_alpha f == 0 for the transported field",
               apply_operator(dirac_quaternionic(ts.dirac), f));

    // worked example: f == -i0 e^{j x3} + i2 e^{j x3} when the config keeps the defaults
    {
        auto dflt = ScenarioConfig::defaults(m);
        auto fd = maxwell_to_dirac(MaxwellPair{dflt.transport.electric, dflt.transport.magnetic},
                                   dflt.transport.medium, dflt.transport.dirac, cfg.tolerance);
        auto O = ComplexScalar::zero(m), I = ComplexScalar::one(m);
        auto expected = AnalyticField::plane_wave({-I, O, I, O}, {O, O, I});
        c.vanishes("bridge/transport-worked-example",
                   "vacuum omega=1, E=i1 e^{j x3}, H=i2 e^{j x3}, (E,m)=(1,0): f == (-i0 + i2) e^{j x3}",
                   fd - expected);
        c.expect("bridge/scalar-part-emergence", "Sc(f) == -e^{j x3} is nonzero",
                 !fd.scalar_part().is_zero(), fd.scalar_part().sup_amp_norm(), 0.0, m,
                 "full quaternion, not purely vectorial");
    }

    // f equals the projector combination of the beltrami pair
    {
        auto [phi, psi] = to_beltrami(MaxwellPair{ts.electric, ts.magnetic}, ts.medium);
        auto ppt = projectors(t_kappa, t_alpha);
        auto combo = mul_right(psi, ppt.p_plus) + mul_right(phi, ppt.p_minus);
        c.vanishes("bridge/transport-projector-form", "f == P+ psi + P- phi", f - combo);
    }

    // decomposition of the transported solution
    {
        auto [psi, phi] = decompose(f, t_kappa, t_alpha);
        c.vanishes("bridge/decompose-sums", "f == P+ f + P- f", psi + phi - f);
        c.vanishes("bridge/decompose-beltrami",
                   "(D + kappa)(P+ f) == 0 and (D - kappa)(P- f) == 0",
                   std::max(beltrami_residual(psi, t_kappa, Sign::Plus).sup_amp_norm(),
                            beltrami_residual(phi, t_kappa, Sign::Minus).sup_amp_norm()),
                   beltrami_residual(psi, t_kappa, Sign::Plus).is_zero() &&
                       beltrami_residual(phi, t_kappa, Sign::Minus).is_zero());
    }

    // completeness of the decomposition on non-solutions
    {
        double worst = 0.0;
        bool exact = true;
        for (int it = 0; it < 10; ++it) {
            std::uniform_int_distribution<long> ki(-2, 2);
            auto g = AnalyticField::plane_wave({c.rnd(), c.rnd(), c.rnd(), c.rnd()},
                                               {ComplexScalar::integer(ki(c.rng), m),
                                                ComplexScalar::integer(ki(c.rng), m),
                                                ComplexScalar::integer(ki(c.rng), m)});
            auto [psi, phi] = decompose(g, kappa, alpha);
            auto diff = psi + phi - g;
            worst = std::max(worst, diff.sup_amp_norm());
            exact = exact && diff.is_zero();
        }
        c.vanishes("bridge/decompose-completeness", "P+ g + P- g == g for arbitrary g", worst,
                   exact);
    }

    // eigen-multiplier edge: phi = (kappa - alpha) e^{j <j*alpha, x>}
    {
        auto amp = Quaternion::scalar(kappa) - alpha;
        auto j = ComplexScalar::imaginary(m);
        std::array<ComplexScalar, 3> k{j * alpha[1], j * alpha[2], j * alpha[3]};
        auto phi = AnalyticField::plane_wave({amp[0], amp[1], amp[2], amp[3]}, k);
        auto [psi_part, phi_part] = decompose(phi, kappa, alpha);
        c.vanishes("bridge/decompose-eigen-edge",
                   "phi with phi*(kappa+alpha) == 0 satisfies P- phi == phi",
                   std::max((phi_part - phi).sup_amp_norm(), psi_part.sup_amp_norm()),
                   (phi_part - phi).is_zero() && psi_part.is_zero());
    }
}

// ------------------------------------------------------------- dispersion

void suite_dispersion(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    const ArithMode m = c.mode();

    auto rec = DispersionRecord::from(cfg.medium, cfg.dirac);
    auto rp = dispersion_check(rec);
    c.vanishes("dispersion/config-chain",
               "kappa^2 == (E^2/c^2 - m^2 c^2)/hbar^2; (hbar w)^2 er mr == E^2 - m^2 c^4; "
               "E^2 == p^2 c^2 + m^2 c^4",
               rp.sup_norm(), rp.all_zero());

    // massless chain: E = hbar w = p c
    {
        auto one = ComplexScalar::one(m);
        auto med = MediumParams::vacuum_natural(one);
        auto p = DiracParams::natural(one, ComplexScalar::zero(m));
        auto r = DispersionRecord::from(med, p);
        auto chain = dispersion_check(r);
        auto d1 = r.energy - r.hbar * r.omega;
        auto d2 = r.hbar * r.omega - r.momentum * r.c;
        double worst = std::max({chain.sup_norm(), d1.modulus(), d2.modulus()});
        c.vanishes("dispersion/massless-chain", "m == 0 gives E == hbar*omega == p*c", worst,
                   chain.all_zero() && d1.is_zero() && d2.is_zero());
    }

    // denser medium: eps_r mu_r = 2 forces an irrational omega, so this
    // check always runs in floating point
    {
        double omega = 4.0 / std::sqrt(2.0);
        auto med = MediumParams(ComplexScalar::floating(1), ComplexScalar::floating(1),
                                ComplexScalar::floating(2), ComplexScalar::floating(1),
                                ComplexScalar::floating(omega), ComplexScalar::floating(1));
        auto p = DiracParams::natural(ComplexScalar::floating(5), ComplexScalar::floating(3));
        auto chain = dispersion_check(DispersionRecord::from(med, p));
        c.expect("dispersion/denser-medium", "(hbar w)^2 eps_r mu_r == E^2 - m^2 c^4 at er*mr = 2",
                 chain.sup_norm() <= 1e-12, chain.sup_norm(), 1e-12, ArithMode::Float);
    }
}

// ---------------------------------------------------------- fd-convergence

void suite_fd(const ScenarioConfig& cfg, VerificationReport& rep) {
    Ctx c(cfg, rep);
    // grid work is always floating point; exact inputs are evaluated at the
    // sampling boundary
    const ArithMode F = ArithMode::Float;
    auto O = ComplexScalar::zero(F), I = ComplexScalar::one(F);
    const auto& box = cfg.grid.box;
    const double h = cfg.grid.h;
    auto d = moisil_theodoresco(F);

    auto fd_err = [&](const DiffOperator& op, const AnalyticField& f, double hh) {
        auto g = sample(f, box, hh);
        auto numeric = fd_apply(op, g);
        auto exact = sample(apply_operator(op, f), box, hh);
        exact.set_margin(numeric.margin());
        return residual_max(grid_sub(numeric, exact));
    };

    {
        auto f = AnalyticField::constant(
            Quaternion{ComplexScalar::floating(1.5), I, O, ComplexScalar::floating(0, 2)});
        double r = residual_max(fd_apply(d, sample(f, box, h)));
        c.expect("fd/constant-field", "central differences annihilate constants", r == 0.0, r,
                 0.0, F);
    }

    {
        auto f = AnalyticField::plane_wave({O, I, O, O}, {O, O, I});
        double e1 = fd_err(d, f, h), e2 = fd_err(d, f, h / 2);
        double ratio = e2 > 0 ? e1 / e2 : 0.0;
        c.expect("fd/order-k1", "halving h divides the D residual by ~4 (|k| = 1)",
                 ratio >= 3.5 && ratio <= 4.5, ratio, 4.5, F,
                 "observed order " + format_double(std::log2(ratio)));
    }

    {
        auto f = AnalyticField::plane_wave({O, I, O, O},
                                           {O, ComplexScalar::floating(2.0), O});
        double e1 = fd_err(d, f, h), e2 = fd_err(d, f, h / 2);
        double order = e2 > 0 ? std::log2(e1 / e2) : 0.0;
        c.expect("fd/order-k2", "observed convergence order >= 1.8 at |k| = 2", order >= 1.8,
                 order, 0.0, F);
    }

    {
        auto f = AnalyticField::plane_wave({O, I, O, O}, {O, O, I});
        auto dd = compose(d, d);
        double e1 = fd_err(dd, f, h), e2 = fd_err(dd, f, h / 2);
        double ratio = e2 > 0 ? e1 / e2 : 0.0;
        c.expect("fd/order-degree2", "the repeated stencil for D*D stays second order",
                 ratio >= 3.4 && ratio <= 4.6, ratio, 4.6, F);
    }

    {
        auto f = AnalyticField::plane_wave({O, I, O, O},
                                           {ComplexScalar::floating(1.0), O, I});
        double r = fd_err(DiffOperator::reflect(3, F), f, h);
        c.expect("fd/reflection-exact", "axis reflection on a symmetric box is exact", r <= 1e-13,
                 r, 1e-13, F);
    }

    {
        auto f = AnalyticField(
            F, {PlaneWaveTerm{{I, ComplexScalar::floating(0.5, 1.0), O, I},
                              {ComplexScalar::floating(1.0), O, ComplexScalar::floating(2.0)}},
                PlaneWaveTerm{{O, I, I, O},
                              {O, ComplexScalar::floating(-1.0), ComplexScalar::floating(0.5)}}});
        auto gs = sample(f, box, h, Exec::Serial);
        auto gp = sample(f, box, h, Exec::Parallel);
        auto op = compose(d, DiffOperator::reflect(3, F));
        auto rs = fd_apply(op, gs, Exec::Serial);
        auto rpp = fd_apply(op, gp, Exec::Parallel);
        bool same = gs == gp && rs == rpp &&
                    residual_max(rs, Exec::Serial) == residual_max(rpp, Exec::Parallel);
        c.expect("fd/serial-parallel-identical",
                 "OpenMP kernels match the serial reference bit for bit", same, same ? 0.0 : 1.0,
                 0.0, F);
    }
}

}  // namespace

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"algebra", suite_algebra},
        {"operators", suite_operators},
        {"maxwell", suite_maxwell},
        {"dirac", suite_dirac},
        {"bridge", suite_bridge},
        {"projector-laws", suite_projector_laws},
        {"dispersion", suite_dispersion},
        {"fd-convergence", suite_fd},
    };
    return reg;
}

VerificationReport run_suites(const ScenarioConfig& cfg) {
    VerificationReport rep(cfg.mode, cfg.tolerance);
    bool all = false;
    for (const auto& s : cfg.suites)
        if (s == "all") all = true;
    std::vector<std::string> selected;
    if (all) {
        for (const auto& [name, fn] : suite_registry()) selected.push_back(name);
    } else {
        selected = cfg.suites;
    }
    for (const auto& name : selected) {
        bool found = false;
        for (const auto& [rname, fn] : suite_registry())
            if (rname == name) {
                fn(cfg, rep);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

}  // namespace qmd
