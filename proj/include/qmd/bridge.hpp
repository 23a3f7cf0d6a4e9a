#pragma once

#include "qmd/dirac.hpp"
#include "qmd/maxwell.hpp"

namespace qmd {

/// Right-multiplier pair p_pm = (kappa +- alpha)/(2 kappa). As operators
/// P^pm f = f * p_pm. Complete for every kappa != 0; idempotent and
/// orthogonal exactly when kappa^2 = alpha^2.
struct ProjectorPair {
    Quaternion p_plus;
    Quaternion p_minus;
};

ProjectorPair projectors(const ComplexScalar& kappa, const Quaternion& alpha);

/// Defects of the projector laws; each entry is zero when the law holds.
struct ProjectorLaws {
    Quaternion idempotence_plus;    // p+ p+ - p+
    Quaternion idempotence_minus;   // p- p- - p-
    Quaternion orthogonality_mp;    // p- p+
    Quaternion orthogonality_pm;    // p+ p-
    Quaternion completeness;        // p+ + p- - 1

    bool all_zero() const;
    double sup_norm() const;
};

ProjectorLaws projector_laws(const ProjectorPair& pp);

/// Normal-form differences for the operator identities tying D_alpha to
/// D_{+-kappa}. The projector multiplier always acts after the operator:
/// P^+ D_kappa f = (D_kappa f) * p_plus.
struct RelopIdentities {
    DiffOperator forward;         // D_alpha - (P+ D_k + P- D_-k); zero unconditionally
    DiffOperator reverse_plus;    // D_k - (P+ D_a + P- D_-a); zero iff kappa^2 = alpha^2
    DiffOperator reverse_minus;   // D_-k - (P- D_a + P+ D_-a); zero iff kappa^2 = alpha^2
    DiffOperator commute_plus;    // P+ D_k - D_k P+; zero unconditionally
    DiffOperator commute_minus;   // P- D_-k - D_-k P-; zero unconditionally
    DiffOperator mixed_plus;      // P+ D_a - D_k P+; zero iff kappa^2 = alpha^2
    DiffOperator mixed_minus;     // P- D_a - D_-k P-; zero iff kappa^2 = alpha^2
};

RelopIdentities relop_check(const ComplexScalar& kappa, const Quaternion& alpha);

/// Maxwell -> Dirac transport: f = (j*omega*eps/kappa) E*alpha + kappa*H.
/// Requires wavenumber(m)^2 = alpha^2 and a valid Maxwell pair; the result
/// satisfies D_alpha f = 0. `tol` bounds the float-mode residual checks.
AnalyticField maxwell_to_dirac(const MaxwellPair& pair, const MediumParams& m,
                               const DiracParams& p, double tol = 1e-12);

/// f = psi + phi with psi = P+ f and phi = P- f. When D_alpha f = 0 and
/// kappa^2 = alpha^2, psi solves (D + kappa)psi = 0 and phi solves
/// (D - kappa)phi = 0. Returned as (psi, phi).
std::pair<AnalyticField, AnalyticField> decompose(const AnalyticField& f,
                                                  const ComplexScalar& kappa,
                                                  const Quaternion& alpha);

/// Frequency/wavenumber and energy/mass bookkeeping, with the de Broglie
/// identification momentum = hbar*kappa.
struct DispersionRecord {
    ComplexScalar omega, kappa, energy, mass, momentum, eps_r, mu_r, hbar, c;

    static DispersionRecord from(const MediumParams& m, const DiracParams& p);
};

/// The three dispersion residuals; all vanish iff the matching condition
/// and the energy-momentum relation hold.
struct DispersionReport {
    ComplexScalar kappa_vs_alpha;     // kappa^2 - (E^2/c^2 - m^2 c^2)/hbar^2
    ComplexScalar planck_einstein;    // (hbar*omega)^2 eps_r mu_r - (E^2 - m^2 c^4)
    ComplexScalar energy_momentum;    // E^2 - (p^2 c^2 + m^2 c^4)

    bool all_zero() const;
    double sup_norm() const;
};

DispersionReport dispersion_check(const DispersionRecord& r);

}  // namespace qmd
