#pragma once

#include <vector>

#include "qmd/diffop.hpp"

namespace qmd {

/// One plane-wave term amp * exp(j<k,x>). The amplitude is a 4-component
/// complex vector (quaternion coordinates or bispinor components, per
/// context); the wave vector may be complex (evanescent waves).
struct PlaneWaveTerm {
    std::array<ComplexScalar, 4> amp;
    std::array<ComplexScalar, 3> wave;
};

/// Finite sum of plane-wave terms. Closed under differentiation, axis
/// reflection and constant matrix action, so any DiffOperator maps an
/// AnalyticField to an AnalyticField exactly.
class AnalyticField {
public:
    AnalyticField(ArithMode m, std::vector<PlaneWaveTerm> terms);

    static AnalyticField zero(ArithMode m);
    static AnalyticField plane_wave(std::array<ComplexScalar, 4> amp,
                                    std::array<ComplexScalar, 3> wave);
    /// Constant field (wave vector zero).
    static AnalyticField constant(const Quaternion& q);

    ArithMode mode() const { return mode_; }
    const std::vector<PlaneWaveTerm>& terms() const { return terms_; }

    /// Canonical form: terms merged by equal wave vector, zero amplitudes
    /// dropped, terms sorted by wave vector. Plane waves with distinct wave
    /// vectors are linearly independent, so is_zero() is decidable.
    AnalyticField normalized() const;
    bool is_zero() const;
    /// Max amplitude-component modulus after normalization.
    double sup_amp_norm() const;

    AnalyticField operator-() const;
    AnalyticField scale(const ComplexScalar& c) const;
    friend AnalyticField operator+(const AnalyticField& a, const AnalyticField& b);
    friend AnalyticField operator-(const AnalyticField& a, const AnalyticField& b);

    AnalyticField scalar_part() const;  // component 0 only
    AnalyticField vector_part() const;  // components 1..3
    bool purely_vectorial() const;

private:
    ArithMode mode_;
    std::vector<PlaneWaveTerm> terms_;
};

/// Pointwise quaternion products with a constant quaternion.
AnalyticField mul_left(const Quaternion& q, const AnalyticField& f);
AnalyticField mul_right(const AnalyticField& f, const Quaternion& q);

/// Apply a DiffOperator: d_j multiplies by j*k_j, a reflection negates the
/// corresponding wave-vector component, matrix coefficients act on the
/// amplitude. Exact in the coefficients.
AnalyticField apply_operator(const DiffOperator& op, const AnalyticField& f);

/// The pieces of Df = -div(fvec) + grad(f0) + rot(fvec), separated.
/// divergence is a scalar-part-only field; gradient and curl are vector
/// fields.
struct VectorParts {
    AnalyticField divergence;
    AnalyticField gradient;
    AnalyticField curl;
};

VectorParts vector_parts(const AnalyticField& f);

}  // namespace qmd
