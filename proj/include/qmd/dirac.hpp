#pragma once

#include "qmd/field.hpp"

namespace qmd {

/// Fixed-energy Dirac parameters. hbar and c must be positive reals,
/// the mass a nonnegative real, the energy real.
struct DiracParams {
    ComplexScalar energy, mass, hbar, c;

    DiracParams(ComplexScalar energy_, ComplexScalar mass_, ComplexScalar hbar_,
                ComplexScalar c_);

    static DiracParams natural(ComplexScalar energy, ComplexScalar mass);

    ArithMode mode() const { return energy.mode(); }
    /// a = E/(c*hbar), b = m*c/hbar: the two constant-term coefficients.
    ComplexScalar coeff_a() const { return energy / (c * hbar); }
    ComplexScalar coeff_b() const { return mass * c / hbar; }
};

/// alpha = -(1/hbar)(j*(E/c)*i1 + m*c*i2): the right-multiplier of the
/// quaternionic Dirac operator. Purely vectorial.
Quaternion alpha_vector(const DiracParams& p);

/// kappa with kappa^2 = alpha^2 = (E^2/c^2 - m^2 c^2)/hbar^2, principal
/// branch (imaginary for E^2 < m^2 c^4).
ComplexScalar matching_kappa(const DiracParams& p);

/// The bispinor <-> quaternion transform pair. Both directions reflect the
/// third coordinate of the argument before the matrix acts. `forward`
/// carries the overall 1/2, so inverse_m * forward_m = Id.
struct TransformA {
    Matrix4 forward_m;   // bispinor components -> quaternion coordinates
    Matrix4 inverse_m;   // quaternion coordinates -> bispinor components

    static TransformA standard(ArithMode m);

    /// As operators on fields: const(M) composed after the x3 reflection.
    DiffOperator forward_op() const;
    DiffOperator inverse_op() const;
};

/// Transform a bispinor-valued field into a quaternion-valued one and back.
AnalyticField transform_A(const AnalyticField& bispinor);
AnalyticField transform_A_inv(const AnalyticField& quat_field);

/// D_alpha for the given parameters: D + M^alpha.
DiffOperator dirac_quaternionic(const DiracParams& p);

/// Gamma matrices recovered from the quaternionic side, with measured
/// convention signs. clifford_sign is s in
/// {gamma_mu, gamma_nu} = 2 s diag(1,-1,-1,-1) Id.
struct GammaSet {
    Matrix4 g0, g1, g2, g3;
    int clifford_sign;
};

/// Result of the reconstruction. q_matrix and p_matrix are the constant-term
/// coefficients extracted from N = -A^{-1} D_alpha A = B0(a,b) + sum B_k d_k
/// with B0 = j*a*P + j*b*Q. triple_sign is the measured t with
/// q_matrix = t * g1*g2*g3; conjugation_sign is the measured sign c with
/// D_alpha = c * A (g1 g2 g3 DD) A^{-1} as a normal-form identity
/// (0 if neither sign certifies).
struct GammaReconstruction {
    GammaSet gammas;
    Matrix4 p_matrix;
    Matrix4 q_matrix;
    int triple_sign;
    int conjugation_sign;
};

/// Thrown when the extraction runs into a structural inconsistency
/// (reflections fail to cancel, Q singular, no Clifford sign fits).
struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The conjugated operator N = -A^{-1} D_alpha A in normal form.
DiffOperator conjugated_dirac(const DiracParams& p);

/// Reconstruct the gamma set from two parameter points whose coefficient
/// pairs (a, b) are linearly independent.
GammaReconstruction reconstruct_gammas(const DiracParams& p1, const DiracParams& p2);

/// Canonical reconstruction at (a,b) = (1,0) and (0,1) in the given mode.
GammaReconstruction reconstruct_gammas(ArithMode m);

/// The covariant operator (j*E/(c*hbar)) g0 + sum g_k d_k + j*m*c/hbar.
DiffOperator covariant_dirac_operator(const GammaSet& g, const DiracParams& p);

/// Residual of the covariant equation on a bispinor field.
AnalyticField covariant_residual(const AnalyticField& q, const GammaSet& g, const DiracParams& p);

}  // namespace qmd
