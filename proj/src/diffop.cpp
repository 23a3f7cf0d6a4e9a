#include "qmd/diffop.hpp"

#include <algorithm>

namespace qmd {

namespace {

void check_axis(int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis out of range (expected 1..3)");
}

}  // namespace

void DiffOperator::add_term(const TermKey& key, const Matrix4& coeff) {
    if (coeff.mode() != mode_) throw ModeError("operator term of mismatched arithmetic mode");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(key, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

DiffOperator DiffOperator::zero(ArithMode m) {
    return DiffOperator(m);
}

DiffOperator DiffOperator::identity(ArithMode m) {
    return const_matrix(Matrix4::identity(m));
}

DiffOperator DiffOperator::partial(int axis, ArithMode m) {
    check_axis(axis);
    DiffOperator op(m);
    TermKey key;
    key.degree[static_cast<size_t>(axis - 1)] = 1;
    op.add_term(key, Matrix4::identity(m));
    return op;
}

DiffOperator DiffOperator::reflect(int axis, ArithMode m) {
    check_axis(axis);
    DiffOperator op(m);
    TermKey key;
    key.mask = 1u << (axis - 1);
    op.add_term(key, Matrix4::identity(m));
    return op;
}

DiffOperator DiffOperator::const_matrix(Matrix4 coeff) {
    DiffOperator op(coeff.mode());
    op.add_term(TermKey{}, coeff);
    return op;
}

DiffOperator DiffOperator::const_left(const Quaternion& q) {
    return const_matrix(lift_left(q));
}

DiffOperator DiffOperator::const_right(const Quaternion& q) {
    return const_matrix(lift_right(q));
}

DiffOperator DiffOperator::scalar(const ComplexScalar& c) {
    return const_matrix(Matrix4::scalar(c));
}

unsigned DiffOperator::max_total_degree() const {
    unsigned d = 0;
    for (const auto& [key, coeff] : terms_) d = std::max(d, key.total_degree());
    return d;
}

bool DiffOperator::has_reflections() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.mask != 0; });
}

double DiffOperator::sup_norm() const {
    double r = 0.0;
    for (const auto& [key, coeff] : terms_) r = std::max(r, coeff.sup_norm());
    return r;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(mode_);
    for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, -coeff);
    return r;
}

DiffOperator DiffOperator::scale(const ComplexScalar& c) const {
    DiffOperator r(mode_);
    if (c.is_zero()) return r;
    for (const auto& [key, coeff] : terms_) r.add_term(key, coeff.scale(c));
    return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    if (a.mode_ != b.mode_) throw ModeError("adding operators of different arithmetic modes");
    DiffOperator r = a;
    for (const auto& [key, coeff] : b.terms_) r.add_term(key, coeff);
    return r;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    return a + (-b);
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    if (a.mode_ != b.mode_) throw ModeError("comparing operators of different arithmetic modes");
    return a.terms_ == b.terms_;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.mode() != b.mode())
        throw ModeError("composing operators of different arithmetic modes");
    DiffOperator r(a.mode());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // Move the reflections of the left factor past the derivatives of
            // the right factor: R_k d_k = -d_k R_k picks up one sign per
            // reflected-axis derivative.
            unsigned flips = 0;
            for (int ax = 0; ax < 3; ++ax)
                if (ka.mask & (1u << ax)) flips += kb.degree[static_cast<size_t>(ax)];
            TermKey key;
            for (int ax = 0; ax < 3; ++ax)
                key.degree[static_cast<size_t>(ax)] =
                    ka.degree[static_cast<size_t>(ax)] + kb.degree[static_cast<size_t>(ax)];
            key.mask = ka.mask ^ kb.mask;
            Matrix4 coeff = ca * cb;
            if (flips % 2 == 1) coeff = -coeff;
            r.add_term(key, coeff);
        }
    }
    return r;
}

DiffOperator moisil_theodoresco(ArithMode m) {
    DiffOperator d = DiffOperator::zero(m);
    for (int k = 1; k <= 3; ++k)
        d = d + compose(DiffOperator::const_left(Quaternion::unit(k, m)),
                        DiffOperator::partial(k, m));
    return d;
}

DiffOperator d_alpha(const Quaternion& alpha) {
    return moisil_theodoresco(alpha.mode()) + DiffOperator::const_right(alpha);
}

DiffOperator d_kappa(const ComplexScalar& kappa, Sign sign) {
    auto k = sign == Sign::Plus ? kappa : -kappa;
    return moisil_theodoresco(kappa.mode()) + DiffOperator::scalar(k);
}

}  // namespace qmd
