#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qmd/quaternion.hpp"

namespace qmd {

/// Dense 4x4 complex matrix acting on quaternion coordinates (scalar-first)
/// or on bispinor components, depending on context.
class Matrix4 {
public:
    explicit Matrix4(std::array<ComplexScalar, 16> entries);

    static Matrix4 zero(ArithMode m);
    static Matrix4 identity(ArithMode m);
    static Matrix4 scalar(const ComplexScalar& c);  // c * Id

    ArithMode mode() const { return m_[0].mode(); }
    const ComplexScalar& at(int r, int c) const { return m_[static_cast<size_t>(r * 4 + c)]; }
    ComplexScalar& at(int r, int c) { return m_[static_cast<size_t>(r * 4 + c)]; }
    const std::array<ComplexScalar, 16>& entries() const { return m_; }

    bool is_zero() const;
    double sup_norm() const;

    Matrix4 operator-() const;
    Matrix4 scale(const ComplexScalar& c) const;
    friend Matrix4 operator+(const Matrix4& a, const Matrix4& b);
    friend Matrix4 operator-(const Matrix4& a, const Matrix4& b);
    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
    friend bool operator==(const Matrix4& a, const Matrix4& b);
    friend bool operator!=(const Matrix4& a, const Matrix4& b) { return !(a == b); }

    std::array<ComplexScalar, 4> apply(const std::array<ComplexScalar, 4>& v) const;

    std::optional<Matrix4> inverse() const;

private:
    std::array<ComplexScalar, 16> m_;
};

/// Coordinate matrix of left multiplication: lift_left(q) * coords(f) = coords(q*f).
Matrix4 lift_left(const Quaternion& q);

/// Coordinate matrix of right multiplication: lift_right(q) * coords(f) = coords(f*q).
Matrix4 lift_right(const Quaternion& q);

/// Gaussian elimination on an n x n system with m right-hand sides
/// (row-major). Exact in exact mode, partial pivoting in float mode.
/// Returns the n x m solution block, or nullopt for a singular system.
std::optional<std::vector<ComplexScalar>> solve_linear(std::vector<ComplexScalar> a,
                                                       std::vector<ComplexScalar> rhs, int n,
                                                       int m);

}  // namespace qmd
