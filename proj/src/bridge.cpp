#include "qmd/bridge.hpp"

#include <algorithm>

namespace qmd {

ProjectorPair projectors(const ComplexScalar& kappa, const Quaternion& alpha) {
    if (kappa.is_zero()) throw std::invalid_argument("projectors require kappa != 0");
    const ArithMode m = kappa.mode();
    if (alpha.mode() != m) throw ModeError("kappa and alpha of different arithmetic modes");
    auto inv2k = ComplexScalar::one(m) / (ComplexScalar::integer(2, m) * kappa);
    auto ks = Quaternion::scalar(kappa);
    return ProjectorPair{(ks + alpha).scale(inv2k), (ks - alpha).scale(inv2k)};
}

bool ProjectorLaws::all_zero() const {
    return idempotence_plus.is_zero() && idempotence_minus.is_zero() &&
           orthogonality_mp.is_zero() && orthogonality_pm.is_zero() && completeness.is_zero();
}

double ProjectorLaws::sup_norm() const {
    return std::max({idempotence_plus.sup_norm(), idempotence_minus.sup_norm(),
                     orthogonality_mp.sup_norm(), orthogonality_pm.sup_norm(),
                     completeness.sup_norm()});
}

ProjectorLaws projector_laws(const ProjectorPair& pp) {
    const auto& p = pp.p_plus;
    const auto& q = pp.p_minus;
    return ProjectorLaws{qmul(p, p) - p, qmul(q, q) - q, qmul(q, p), qmul(p, q),
                         p + q - Quaternion::one(p.mode())};
}

RelopIdentities relop_check(const ComplexScalar& kappa, const Quaternion& alpha) {
    auto pp = projectors(kappa, alpha);
    auto proj_p = DiffOperator::const_right(pp.p_plus);
    auto proj_m = DiffOperator::const_right(pp.p_minus);
    auto dk = d_kappa(kappa, Sign::Plus);
    auto dmk = d_kappa(kappa, Sign::Minus);
    auto da = d_alpha(alpha);
    auto dma = d_alpha(-alpha);
    return RelopIdentities{
        da - (compose(proj_p, dk) + compose(proj_m, dmk)),
        dk - (compose(proj_p, da) + compose(proj_m, dma)),
        dmk - (compose(proj_m, da) + compose(proj_p, dma)),
        compose(proj_p, dk) - compose(dk, proj_p),
        compose(proj_m, dmk) - compose(dmk, proj_m),
        compose(proj_p, da) - compose(dk, proj_p),
        compose(proj_m, da) - compose(dmk, proj_m)};
}

AnalyticField maxwell_to_dirac(const MaxwellPair& pair, const MediumParams& m,
                               const DiracParams& p, double tol) {
    const ArithMode mode = m.mode();
    auto kappa = wavenumber(m);
    auto alpha = alpha_vector(p);
    auto rel = kappa * kappa - square_of_vector(alpha);
    bool rel_ok = mode == ArithMode::Exact ? rel.is_zero() : rel.modulus() <= tol;
    if (!rel_ok)
        throw std::invalid_argument(
            "transport requires the matching condition kappa^2 = alpha^2 (got defect " +
            rel.str() + ")");
    auto res = maxwell_residuals(pair, m);
    bool valid = mode == ArithMode::Exact ? res.all_zero() : res.sup_norm() <= tol;
    if (!valid) throw std::invalid_argument("transport requires a valid Maxwell pair");

    auto jwe_over_k = ComplexScalar::imaginary(mode) * m.omega * m.eps() / kappa;
    return mul_right(pair.electric, alpha).scale(jwe_over_k) + pair.magnetic.scale(kappa);
}

std::pair<AnalyticField, AnalyticField> decompose(const AnalyticField& f,
                                                  const ComplexScalar& kappa,
                                                  const Quaternion& alpha) {
    auto pp = projectors(kappa, alpha);
    return {mul_right(f, pp.p_plus), mul_right(f, pp.p_minus)};
}

DispersionRecord DispersionRecord::from(const MediumParams& m, const DiracParams& p) {
    auto kappa = wavenumber(m);
    return DispersionRecord{m.omega, kappa,        p.energy, p.mass, p.hbar * kappa,
                            m.eps_r, m.mu_r,       p.hbar,   p.c};
}

bool DispersionReport::all_zero() const {
    return kappa_vs_alpha.is_zero() && planck_einstein.is_zero() && energy_momentum.is_zero();
}

double DispersionReport::sup_norm() const {
    return std::max({kappa_vs_alpha.modulus(), planck_einstein.modulus(),
                     energy_momentum.modulus()});
}

DispersionReport dispersion_check(const DispersionRecord& r) {
    auto e2 = r.energy * r.energy;
    auto c2 = r.c * r.c;
    auto m2c2 = r.mass * r.mass * c2;
    auto hbar2 = r.hbar * r.hbar;
    auto hw = r.hbar * r.omega;
    auto pc = r.momentum * r.c;
    return DispersionReport{r.kappa * r.kappa - (e2 / c2 - m2c2) / hbar2,
                            hw * hw * r.eps_r * r.mu_r - (e2 - m2c2 * c2),
                            e2 - (pc * pc + m2c2 * c2)};
}

}  // namespace qmd
