#include "qmd/matrix4.hpp"

#include <algorithm>

namespace qmd {

Matrix4::Matrix4(std::array<ComplexScalar, 16> entries) : m_(std::move(entries)) {
    for (size_t i = 1; i < 16; ++i)
        if (m_[i].mode() != m_[0].mode())
            throw ModeError("matrix entries of mixed arithmetic modes");
}

Matrix4 Matrix4::zero(ArithMode m) {
    std::array<ComplexScalar, 16> e;
    e.fill(ComplexScalar::zero(m));
    return Matrix4(e);
}

Matrix4 Matrix4::identity(ArithMode m) {
    return scalar(ComplexScalar::one(m));
}

Matrix4 Matrix4::scalar(const ComplexScalar& c) {
    auto r = zero(c.mode());
    for (int i = 0; i < 4; ++i) r.at(i, i) = c;
    return r;
}

bool Matrix4::is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const ComplexScalar& c) { return c.is_zero(); });
}

double Matrix4::sup_norm() const {
    double r = 0.0;
    for (const auto& c : m_) r = std::max(r, c.modulus());
    return r;
}

Matrix4 Matrix4::operator-() const {
    auto r = *this;
    for (auto& c : r.m_) c = -c;
    return r;
}

Matrix4 Matrix4::scale(const ComplexScalar& c) const {
    auto r = *this;
    for (auto& e : r.m_) e *= c;
    return r;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    auto r = a;
    for (size_t i = 0; i < 16; ++i) r.m_[i] += b.m_[i];
    return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    auto r = a;
    for (size_t i = 0; i < 16; ++i) r.m_[i] -= b.m_[i];
    return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    auto r = Matrix4::zero(a.mode());
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const auto& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < 4; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

bool operator==(const Matrix4& a, const Matrix4& b) {
    for (size_t i = 0; i < 16; ++i)
        if (!(a.m_[i] == b.m_[i])) return false;
    return true;
}

std::array<ComplexScalar, 4> Matrix4::apply(const std::array<ComplexScalar, 4>& v) const {
    std::array<ComplexScalar, 4> r{ComplexScalar::zero(mode()), ComplexScalar::zero(mode()),
                                   ComplexScalar::zero(mode()), ComplexScalar::zero(mode())};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::optional<Matrix4> Matrix4::inverse() const {
    std::vector<ComplexScalar> a(m_.begin(), m_.end());
    std::vector<ComplexScalar> rhs;
    rhs.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rhs.push_back(i == j ? ComplexScalar::one(mode()) : ComplexScalar::zero(mode()));
    auto sol = solve_linear(std::move(a), std::move(rhs), 4, 4);
    if (!sol) return std::nullopt;
    std::array<ComplexScalar, 16> out;
    std::move(sol->begin(), sol->end(), out.begin());
    return Matrix4(out);
}

Matrix4 lift_left(const Quaternion& q) {
    auto m = Matrix4::zero(q.mode());
    const auto& c = q.coords();
    const ComplexScalar vals[4][4] = {{c[0], -c[1], -c[2], -c[3]},
                                      {c[1], c[0], -c[3], c[2]},
                                      {c[2], c[3], c[0], -c[1]},
                                      {c[3], -c[2], c[1], c[0]}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
    return m;
}

Matrix4 lift_right(const Quaternion& q) {
    auto m = Matrix4::zero(q.mode());
    const auto& c = q.coords();
    const ComplexScalar vals[4][4] = {{c[0], -c[1], -c[2], -c[3]},
                                      {c[1], c[0], c[3], -c[2]},
                                      {c[2], -c[3], c[0], c[1]},
                                      {c[3], c[2], -c[1], c[0]}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
    return m;
}

std::optional<std::vector<ComplexScalar>> solve_linear(std::vector<ComplexScalar> a,
                                                       std::vector<ComplexScalar> rhs, int n,
                                                       int m) {
    const size_t un = static_cast<size_t>(n), um = static_cast<size_t>(m);
    if (a.size() != un * un || rhs.size() != un * um)
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const ArithMode mode = a.empty() ? ArithMode::Exact : a[0].mode();
    auto A = [&](size_t r, size_t c) -> ComplexScalar& { return a[r * un + c]; };
    auto B = [&](size_t r, size_t c) -> ComplexScalar& { return rhs[r * um + c]; };

    for (size_t col = 0; col < un; ++col) {
        // pivot: first nonzero in exact mode, largest modulus in float mode
        size_t pivot = col;
        if (mode == ArithMode::Float) {
            double best = A(col, col).modulus();
            for (size_t r = col + 1; r < un; ++r)
                if (A(r, col).modulus() > best) {
                    best = A(r, col).modulus();
                    pivot = r;
                }
        } else {
            while (pivot < un && A(pivot, col).is_zero()) ++pivot;
            if (pivot == un) return std::nullopt;
        }
        if (A(pivot, col).is_zero()) return std::nullopt;
        if (pivot != col) {
            for (size_t c = 0; c < un; ++c) std::swap(A(pivot, c), A(col, c));
            for (size_t c = 0; c < um; ++c) std::swap(B(pivot, c), B(col, c));
        }
        ComplexScalar inv = ComplexScalar::one(mode) / A(col, col);
        for (size_t c = col; c < un; ++c) A(col, c) *= inv;
        for (size_t c = 0; c < um; ++c) B(col, c) *= inv;
        for (size_t r = 0; r < un; ++r) {
            if (r == col || A(r, col).is_zero()) continue;
            ComplexScalar f = A(r, col);
            for (size_t c = col; c < un; ++c) A(r, c) -= f * A(col, c);
            for (size_t c = 0; c < um; ++c) B(r, c) -= f * B(col, c);
        }
    }
    return rhs;
}

}  // namespace qmd
