#include "qmd/field.hpp"

#include <algorithm>

namespace qmd {

AnalyticField::AnalyticField(ArithMode m, std::vector<PlaneWaveTerm> terms)
    : mode_(m), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        for (const auto& a : t.amp)
            if (a.mode() != mode_) throw ModeError("field amplitude of mismatched mode");
        for (const auto& k : t.wave)
            if (k.mode() != mode_) throw ModeError("wave vector of mismatched mode");
    }
}

AnalyticField AnalyticField::zero(ArithMode m) {
    return AnalyticField(m, {});
}

AnalyticField AnalyticField::plane_wave(std::array<ComplexScalar, 4> amp,
                                        std::array<ComplexScalar, 3> wave) {
    ArithMode m = amp[0].mode();
    return AnalyticField(m, {PlaneWaveTerm{std::move(amp), std::move(wave)}});
}

AnalyticField AnalyticField::constant(const Quaternion& q) {
    auto z = ComplexScalar::zero(q.mode());
    return plane_wave(q.coords(), {z, z, z});
}

namespace {

bool wave_equal(const std::array<ComplexScalar, 3>& a, const std::array<ComplexScalar, 3>& b) {
    return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

bool wave_less(const std::array<ComplexScalar, 3>& a, const std::array<ComplexScalar, 3>& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[static_cast<size_t>(i)] == b[static_cast<size_t>(i)]) continue;
        return ComplexScalar::lex_less(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
    }
    return false;
}

}  // namespace

AnalyticField AnalyticField::normalized() const {
    std::vector<PlaneWaveTerm> sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const PlaneWaveTerm& a, const PlaneWaveTerm& b) {
                         return wave_less(a.wave, b.wave);
                     });
    std::vector<PlaneWaveTerm> merged;
    for (auto& t : sorted) {
        if (!merged.empty() && wave_equal(merged.back().wave, t.wave)) {
            for (int i = 0; i < 4; ++i)
                merged.back().amp[static_cast<size_t>(i)] += t.amp[static_cast<size_t>(i)];
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const PlaneWaveTerm& t) {
        return std::all_of(t.amp.begin(), t.amp.end(),
                           [](const ComplexScalar& c) { return c.is_zero(); });
    });
    return AnalyticField(mode_, std::move(merged));
}

bool AnalyticField::is_zero() const {
    return normalized().terms_.empty();
}

double AnalyticField::sup_amp_norm() const {
    double r = 0.0;
    const auto canonical = normalized();
    for (const auto& t : canonical.terms_)
        for (const auto& a : t.amp) r = std::max(r, a.modulus());
    return r;
}

AnalyticField AnalyticField::operator-() const {
    auto r = *this;
    for (auto& t : r.terms_)
        for (auto& a : t.amp) a = -a;
    return r;
}

AnalyticField AnalyticField::scale(const ComplexScalar& c) const {
    auto r = *this;
    for (auto& t : r.terms_)
        for (auto& a : t.amp) a *= c;
    return r;
}

AnalyticField operator+(const AnalyticField& a, const AnalyticField& b) {
    if (a.mode_ != b.mode_) throw ModeError("adding fields of different arithmetic modes");
    auto terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return AnalyticField(a.mode_, std::move(terms)).normalized();
}

AnalyticField operator-(const AnalyticField& a, const AnalyticField& b) {
    return a + (-b);
}

AnalyticField AnalyticField::scalar_part() const {
    auto r = *this;
    for (auto& t : r.terms_)
        for (int i = 1; i < 4; ++i) t.amp[static_cast<size_t>(i)] = ComplexScalar::zero(mode_);
    return r.normalized();
}

AnalyticField AnalyticField::vector_part() const {
    auto r = *this;
    for (auto& t : r.terms_) t.amp[0] = ComplexScalar::zero(mode_);
    return r.normalized();
}

bool AnalyticField::purely_vectorial() const {
    return scalar_part().is_zero();
}

AnalyticField mul_left(const Quaternion& q, const AnalyticField& f) {
    auto m = lift_left(q);
    auto r = f;
    std::vector<PlaneWaveTerm> terms;
    for (const auto& t : f.terms()) terms.push_back({m.apply(t.amp), t.wave});
    return AnalyticField(f.mode(), std::move(terms));
}

AnalyticField mul_right(const AnalyticField& f, const Quaternion& q) {
    auto m = lift_right(q);
    std::vector<PlaneWaveTerm> terms;
    for (const auto& t : f.terms()) terms.push_back({m.apply(t.amp), t.wave});
    return AnalyticField(f.mode(), std::move(terms));
}

AnalyticField apply_operator(const DiffOperator& op, const AnalyticField& f) {
    if (op.mode() != f.mode())
        throw ModeError("operator and field of different arithmetic modes");
    const ArithMode m = f.mode();
    const auto jc = ComplexScalar::imaginary(m);
    std::vector<PlaneWaveTerm> out;
    for (const auto& [key, coeff] : op.terms()) {
        for (const auto& t : f.terms()) {
            // reflections first: negate the masked wave-vector components
            std::array<ComplexScalar, 3> k = t.wave;
            for (int ax = 0; ax < 3; ++ax)
                if (key.mask & (1u << ax)) k[static_cast<size_t>(ax)] = -k[static_cast<size_t>(ax)];
            // then derivatives: each d_ax contributes a factor j*k_ax
            ComplexScalar factor = ComplexScalar::one(m);
            for (int ax = 0; ax < 3; ++ax)
                for (unsigned d = 0; d < key.degree[static_cast<size_t>(ax)]; ++d)
                    factor *= jc * k[static_cast<size_t>(ax)];
            std::array<ComplexScalar, 4> amp = t.amp;
            for (auto& a : amp) a *= factor;
            out.push_back({coeff.apply(amp), k});
        }
    }
    return AnalyticField(m, std::move(out)).normalized();
}

VectorParts vector_parts(const AnalyticField& f) {
    auto d = moisil_theodoresco(f.mode());
    auto d_scalar = apply_operator(d, f.scalar_part());  // = grad f0
    auto d_vector = apply_operator(d, f.vector_part());  // = -div + rot
    return VectorParts{-d_vector.scalar_part(), d_scalar, d_vector.vector_part()};
}

}  // namespace qmd
