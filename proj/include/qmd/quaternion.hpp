#pragma once

#include <array>
#include <string>

#include "qmd/arith.hpp"

namespace qmd {

/// Element of the complex quaternion algebra H(C). Coordinates are stored
/// scalar-first: (a0, a1, a2, a3) with a = a0 + a1*i1 + a2*i2 + a3*i3.
/// The complex unit j commutes with the quaternion units.
class Quaternion {
public:
    Quaternion(ComplexScalar a0, ComplexScalar a1, ComplexScalar a2, ComplexScalar a3);

    static Quaternion zero(ArithMode m);
    static Quaternion one(ArithMode m);
    static Quaternion unit(int k, ArithMode m);  // i_k, k in 0..3
    static Quaternion scalar(ComplexScalar a0);
    static Quaternion vector(ComplexScalar a1, ComplexScalar a2, ComplexScalar a3);

    ArithMode mode() const { return c_[0].mode(); }
    const ComplexScalar& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    const std::array<ComplexScalar, 4>& coords() const { return c_; }

    ComplexScalar scalar_part() const { return c_[0]; }
    Quaternion vector_part() const;
    bool purely_vectorial() const { return c_[0].is_zero(); }
    bool is_zero() const;
    double sup_norm() const;  // max component modulus

    Quaternion operator-() const;
    Quaternion scale(const ComplexScalar& c) const;
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion& a, const Quaternion& b);
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    std::string str() const;  // "[c0,c1,c2,c3]"

private:
    std::array<ComplexScalar, 4> c_;
};

/// Quaternion product from the basis multiplication table.
Quaternion qmul(const Quaternion& a, const Quaternion& b);

/// Same product computed through the scalar/vector decomposition
/// a0*b0 - <a,b> + [a x b] + a0*b + b0*a. Agrees with qmul exactly.
Quaternion qmul_vecform(const Quaternion& a, const Quaternion& b);

/// For purely vectorial v returns v^2 = -<v,v> as a scalar.
/// Throws std::invalid_argument when v has a scalar part.
ComplexScalar square_of_vector(const Quaternion& v);

}  // namespace qmd
