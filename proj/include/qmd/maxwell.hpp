#pragma once

#include "qmd/field.hpp"

namespace qmd {

/// Medium and frequency data for the time-harmonic Maxwell system.
/// Construction enforces eps0*mu0*c^2 = 1 (exactly in exact mode).
/// Fields carry the implicit time factor exp(-j*omega*t).
struct MediumParams {
    ComplexScalar eps0, mu0, eps_r, mu_r, omega, c;

    MediumParams(ComplexScalar eps0_, ComplexScalar mu0_, ComplexScalar eps_r_,
                 ComplexScalar mu_r_, ComplexScalar omega_, ComplexScalar c_);

    /// Natural units: eps0 = mu0 = c = 1, relative parameters 1.
    static MediumParams vacuum_natural(ComplexScalar omega);

    ComplexScalar eps() const { return eps0 * eps_r; }
    ComplexScalar mu() const { return mu0 * mu_r; }
    ArithMode mode() const { return omega.mode(); }
};

/// A candidate electromagnetic field pair; purely vectorial by contract.
struct MaxwellPair {
    AnalyticField electric;
    AnalyticField magnetic;
};

/// kappa = omega*sqrt(eps*mu) = (omega/c)*sqrt(eps_r*mu_r), principal
/// branch (cut on the negative real axis; nonnegative imaginary part for
/// negative real radicands).
ComplexScalar wavenumber(const MediumParams& m);

/// Residual fields of the four time-harmonic equations:
/// rot H + j*omega*eps*E, rot E - j*omega*mu*H, div E, div H.
/// All four vanish identically iff the pair solves the system.
struct MaxwellResiduals {
    AnalyticField ampere;    // rot H + j*omega*eps*E
    AnalyticField faraday;   // rot E - j*omega*mu*H
    AnalyticField gauss_e;   // div E
    AnalyticField gauss_h;   // div H

    bool all_zero() const;
    double sup_norm() const;
};

MaxwellResiduals maxwell_residuals(const MaxwellPair& p, const MediumParams& m);

/// Quaternionic form residuals: D E - j*omega*mu*H and D H + j*omega*eps*E.
std::pair<AnalyticField, AnalyticField> maxwell_quaternionic_residuals(const MaxwellPair& p,
                                                                       const MediumParams& m);

/// Diagonalizing combinations phi = -j*omega*eps*E + kappa*H and
/// psi = j*omega*eps*E + kappa*H; phi solves (D - kappa)phi = 0 and psi
/// solves (D + kappa)psi = 0 whenever (E, H) solves Maxwell.
std::pair<AnalyticField, AnalyticField> to_beltrami(const MaxwellPair& p, const MediumParams& m);

/// Inverse of to_beltrami: E = (psi - phi)/(2j*omega*eps), H = (psi + phi)/(2kappa).
/// Throws std::invalid_argument when kappa = 0 or omega*eps = 0.
MaxwellPair from_beltrami(const AnalyticField& phi, const AnalyticField& psi,
                          const MediumParams& m);

/// (D + kappa) f for Sign::Plus, (D - kappa) f for Sign::Minus.
AnalyticField beltrami_residual(const AnalyticField& f, const ComplexScalar& kappa, Sign sign);

/// Transverse plane-wave solution: E = pol * exp(j*kappa*<khat,x>),
/// H = (kappa/(omega*mu)) * (khat x pol) * same phase. Requires khat real
/// with <khat,khat> = 1 and <khat,pol> = 0.
MaxwellPair plane_wave(const MediumParams& m, const std::array<ComplexScalar, 3>& khat,
                       const std::array<ComplexScalar, 3>& pol);

/// Circularly polarized Beltrami eigenfield (u +- j*v) exp(j*kappa*<khat,x>)
/// with {u, v, khat} right-handed orthonormal; satisfies (D -+ kappa)f = 0
/// (Sign::Plus gives D f = +kappa f).
AnalyticField circular_beltrami(const ComplexScalar& kappa,
                                const std::array<ComplexScalar, 3>& khat, Sign sign);

}  // namespace qmd
