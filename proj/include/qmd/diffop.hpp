#pragma once

#include <compare>
#include <map>

#include "qmd/matrix4.hpp"

namespace qmd {

enum class Sign { Plus, Minus };

/// Key of one normal-form term: derivative multi-index plus the set of
/// axis reflections applied to the argument before differentiation.
struct TermKey {
    std::array<unsigned, 3> degree{0, 0, 0};
    unsigned mask = 0;  // bit k-1 set = reflection along axis k

    auto operator<=>(const TermKey&) const = default;
    unsigned total_degree() const { return degree[0] + degree[1] + degree[2]; }
};

/// Constant-coefficient differential operator on 4-component functions of
/// x in R^3, kept in a canonical normal form: a pruned map
/// (degree, mask) -> Matrix4 with all reflections commuted to the right of
/// all derivatives. Two operators are equal iff their maps coincide.
///
/// A term (M, d, mask) acts as f |-> M * d^d (R_mask f), where
/// R_k f(x) = f(..., -x_k, ...). The normalization rules are
/// R_k d_k = -d_k R_k, R_k d_j = d_j R_k (j != k), R_k^2 = Id.
class DiffOperator {
public:
    static DiffOperator zero(ArithMode m);
    static DiffOperator identity(ArithMode m);
    static DiffOperator partial(int axis, ArithMode m);   // axis in 1..3
    static DiffOperator reflect(int axis, ArithMode m);   // axis in 1..3
    static DiffOperator const_matrix(Matrix4 coeff);
    static DiffOperator const_left(const Quaternion& q);   // f |-> q*f
    static DiffOperator const_right(const Quaternion& q);  // f |-> f*q
    static DiffOperator scalar(const ComplexScalar& c);

    ArithMode mode() const { return mode_; }
    const std::map<TermKey, Matrix4>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned max_total_degree() const;
    bool has_reflections() const;
    double sup_norm() const;  // max coefficient entry modulus

    DiffOperator operator-() const;
    DiffOperator scale(const ComplexScalar& c) const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b);
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    /// Operator product: compose(A, B) applies B first. Associative,
    /// distributes over +, and renormalizes the result.
    friend DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

private:
    explicit DiffOperator(ArithMode m) : mode_(m) {}
    void add_term(const TermKey& key, const Matrix4& coeff);

    ArithMode mode_;
    std::map<TermKey, Matrix4> terms_;
};

/// The Moisil-Theodoresco operator D = i1 d1 + i2 d2 + i3 d3.
DiffOperator moisil_theodoresco(ArithMode m);

/// D_alpha = D + M^alpha (right multiplication by alpha).
DiffOperator d_alpha(const Quaternion& alpha);

/// D + kappa (Plus) or D - kappa (Minus).
DiffOperator d_kappa(const ComplexScalar& kappa, Sign sign);

}  // namespace qmd
