#include "qmd/quaternion.hpp"

#include <algorithm>

namespace qmd {

Quaternion::Quaternion(ComplexScalar a0, ComplexScalar a1, ComplexScalar a2, ComplexScalar a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
    for (int k = 1; k < 4; ++k)
        if (c_[static_cast<size_t>(k)].mode() != c_[0].mode())
            throw ModeError("quaternion components of mixed arithmetic modes");
}

Quaternion Quaternion::zero(ArithMode m) {
    auto z = ComplexScalar::zero(m);
    return {z, z, z, z};
}

Quaternion Quaternion::one(ArithMode m) {
    return unit(0, m);
}

Quaternion Quaternion::unit(int k, ArithMode m) {
    if (k < 0 || k > 3) throw std::invalid_argument("quaternion unit index out of range");
    auto z = ComplexScalar::zero(m);
    std::array<ComplexScalar, 4> c{z, z, z, z};
    c[static_cast<size_t>(k)] = ComplexScalar::one(m);
    return {c[0], c[1], c[2], c[3]};
}

Quaternion Quaternion::scalar(ComplexScalar a0) {
    auto z = ComplexScalar::zero(a0.mode());
    return {std::move(a0), z, z, z};
}

Quaternion Quaternion::vector(ComplexScalar a1, ComplexScalar a2, ComplexScalar a3) {
    auto z = ComplexScalar::zero(a1.mode());
    return {z, std::move(a1), std::move(a2), std::move(a3)};
}

Quaternion Quaternion::vector_part() const {
    return {ComplexScalar::zero(mode()), c_[1], c_[2], c_[3]};
}

bool Quaternion::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ComplexScalar& c) { return c.is_zero(); });
}

double Quaternion::sup_norm() const {
    double r = 0.0;
    for (const auto& c : c_) r = std::max(r, c.modulus());
    return r;
}

Quaternion Quaternion::operator-() const {
    return {-c_[0], -c_[1], -c_[2], -c_[3]};
}

Quaternion Quaternion::scale(const ComplexScalar& c) const {
    return {c_[0] * c, c_[1] * c, c_[2] * c, c_[3] * c};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
}

std::string Quaternion::str() const {
    return "[" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + "," + c_[3].str() + "]";
}

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    // i0^2 = i0 = -ik^2, i1 i2 = i3 cyclically; j commutes with everything
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qmul_vecform(const Quaternion& a, const Quaternion& b) {
    ComplexScalar dot = a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    ComplexScalar cx1 = a[2] * b[3] - a[3] * b[2];
    ComplexScalar cx2 = a[3] * b[1] - a[1] * b[3];
    ComplexScalar cx3 = a[1] * b[2] - a[2] * b[1];
    return {a[0] * b[0] - dot,
            cx1 + a[0] * b[1] + b[0] * a[1],
            cx2 + a[0] * b[2] + b[0] * a[2],
            cx3 + a[0] * b[3] + b[0] * a[3]};
}

ComplexScalar square_of_vector(const Quaternion& v) {
    if (!v.purely_vectorial())
        throw std::invalid_argument("square_of_vector requires a purely vectorial quaternion");
    return -(v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

}  // namespace qmd
