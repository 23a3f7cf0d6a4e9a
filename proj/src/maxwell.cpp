#include "qmd/maxwell.hpp"

#include <cmath>

namespace qmd {

namespace {

using Vec3 = std::array<ComplexScalar, 3>;

ComplexScalar dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 vscale(const Vec3& a, const ComplexScalar& c) {
    return {a[0] * c, a[1] * c, a[2] * c};
}

bool is_real_vec(const Vec3& v) {
    return v[0].is_real() && v[1].is_real() && v[2].is_real();
}

}  // namespace

MediumParams::MediumParams(ComplexScalar eps0_, ComplexScalar mu0_, ComplexScalar eps_r_,
                           ComplexScalar mu_r_, ComplexScalar omega_, ComplexScalar c_)
    : eps0(std::move(eps0_)),
      mu0(std::move(mu0_)),
      eps_r(std::move(eps_r_)),
      mu_r(std::move(mu_r_)),
      omega(std::move(omega_)),
      c(std::move(c_)) {
    const ArithMode m = omega.mode();
    for (const auto* p : {&eps0, &mu0, &eps_r, &mu_r, &c})
        if (p->mode() != m) throw ModeError("medium parameters of mixed arithmetic modes");
    auto unit = eps0 * mu0 * c * c;
    if (m == ArithMode::Exact) {
        if (!(unit == ComplexScalar::one(m)))
            throw std::invalid_argument("medium violates eps0*mu0*c^2 = 1");
    } else {
        if (std::abs(unit.to_complex() - std::complex<double>(1.0)) > 1e-6)
            throw std::invalid_argument("medium violates eps0*mu0*c^2 = 1");
    }
}

MediumParams MediumParams::vacuum_natural(ComplexScalar omega) {
    auto one = ComplexScalar::one(omega.mode());
    return MediumParams(one, one, one, one, std::move(omega), one);
}

ComplexScalar wavenumber(const MediumParams& m) {
    return m.omega * sqrt_principal(m.eps() * m.mu());
}

bool MaxwellResiduals::all_zero() const {
    return ampere.is_zero() && faraday.is_zero() && gauss_e.is_zero() && gauss_h.is_zero();
}

double MaxwellResiduals::sup_norm() const {
    return std::max(std::max(ampere.sup_amp_norm(), faraday.sup_amp_norm()),
                    std::max(gauss_e.sup_amp_norm(), gauss_h.sup_amp_norm()));
}

MaxwellResiduals maxwell_residuals(const MaxwellPair& p, const MediumParams& m) {
    if (!p.electric.purely_vectorial() || !p.magnetic.purely_vectorial())
        throw std::invalid_argument("maxwell_residuals requires purely vectorial fields");
    auto jw = ComplexScalar::imaginary(m.mode()) * m.omega;
    auto pe = vector_parts(p.electric);
    auto ph = vector_parts(p.magnetic);
    return MaxwellResiduals{ph.curl + p.electric.scale(jw * m.eps()),
                            pe.curl - p.magnetic.scale(jw * m.mu()),
                            pe.divergence, ph.divergence};
}

std::pair<AnalyticField, AnalyticField> maxwell_quaternionic_residuals(const MaxwellPair& p,
                                                                       const MediumParams& m) {
    auto d = moisil_theodoresco(m.mode());
    auto jw = ComplexScalar::imaginary(m.mode()) * m.omega;
    auto r1 = apply_operator(d, p.electric) - p.magnetic.scale(jw * m.mu());
    auto r2 = apply_operator(d, p.magnetic) + p.electric.scale(jw * m.eps());
    return {r1, r2};
}

std::pair<AnalyticField, AnalyticField> to_beltrami(const MaxwellPair& p, const MediumParams& m) {
    auto jwe = ComplexScalar::imaginary(m.mode()) * m.omega * m.eps();
    auto kappa = wavenumber(m);
    auto phi = p.electric.scale(-jwe) + p.magnetic.scale(kappa);
    auto psi = p.electric.scale(jwe) + p.magnetic.scale(kappa);
    return {phi, psi};
}

MaxwellPair from_beltrami(const AnalyticField& phi, const AnalyticField& psi,
                          const MediumParams& m) {
    auto kappa = wavenumber(m);
    auto jwe = ComplexScalar::imaginary(m.mode()) * m.omega * m.eps();
    if (kappa.is_zero() || jwe.is_zero())
        throw std::invalid_argument("from_beltrami requires kappa != 0 and omega*eps != 0");
    auto two = ComplexScalar::integer(2, m.mode());
    auto e = (psi - phi).scale(ComplexScalar::one(m.mode()) / (two * jwe));
    auto h = (psi + phi).scale(ComplexScalar::one(m.mode()) / (two * kappa));
    return MaxwellPair{e, h};
}

AnalyticField beltrami_residual(const AnalyticField& f, const ComplexScalar& kappa, Sign sign) {
    return apply_operator(d_kappa(kappa, sign), f);
}

MaxwellPair plane_wave(const MediumParams& m, const Vec3& khat, const Vec3& pol) {
    const ArithMode mode = m.mode();
    if (!is_real_vec(khat)) throw std::invalid_argument("propagation direction must be real");
    auto norm2 = dot(khat, khat);
    bool unit = mode == ArithMode::Exact
                    ? norm2 == ComplexScalar::one(mode)
                    : std::abs(norm2.to_complex() - std::complex<double>(1.0)) <= 1e-12;
    if (!unit) throw std::invalid_argument("propagation direction must be a unit vector");
    auto transv = dot(khat, pol);
    if (!(mode == ArithMode::Exact ? transv.is_zero() : transv.modulus() <= 1e-12))
        throw std::invalid_argument("polarization must be transverse to the propagation direction");

    auto kappa = wavenumber(m);
    Vec3 wave = vscale(khat, kappa);
    auto z = ComplexScalar::zero(mode);
    auto e = AnalyticField::plane_wave({z, pol[0], pol[1], pol[2]}, wave);
    auto hvec = vscale(cross(khat, pol), kappa / (m.omega * m.mu()));
    auto h = AnalyticField::plane_wave({z, hvec[0], hvec[1], hvec[2]}, wave);
    return MaxwellPair{e, h};
}

AnalyticField circular_beltrami(const ComplexScalar& kappa, const Vec3& khat, Sign sign) {
    const ArithMode mode = kappa.mode();
    if (!is_real_vec(khat)) throw std::invalid_argument("propagation direction must be real");
    auto norm2 = dot(khat, khat);
    bool unit = mode == ArithMode::Exact
                    ? norm2 == ComplexScalar::one(mode)
                    : std::abs(norm2.to_complex() - std::complex<double>(1.0)) <= 1e-12;
    if (!unit) throw std::invalid_argument("propagation direction must be a unit vector");

    // u: unit vector orthogonal to khat, from the axis least aligned with it
    int least = 0;
    double best = khat[0].modulus();
    for (int ax = 1; ax < 3; ++ax)
        if (khat[static_cast<size_t>(ax)].modulus() < best) {
            best = khat[static_cast<size_t>(ax)].modulus();
            least = ax;
        }
    Vec3 axis{ComplexScalar::zero(mode), ComplexScalar::zero(mode), ComplexScalar::zero(mode)};
    axis[static_cast<size_t>(least)] = ComplexScalar::one(mode);
    auto proj = dot(axis, khat);
    Vec3 u0{axis[0] - khat[0] * proj, axis[1] - khat[1] * proj, axis[2] - khat[2] * proj};
    auto len = sqrt_principal(dot(u0, u0));
    Vec3 u = vscale(u0, ComplexScalar::one(mode) / len);
    Vec3 v = cross(khat, u);

    auto j = ComplexScalar::imaginary(mode);
    auto pm = sign == Sign::Plus ? j : -j;
    std::array<ComplexScalar, 4> amp{ComplexScalar::zero(mode), u[0] + pm * v[0],
                                     u[1] + pm * v[1], u[2] + pm * v[2]};
    return AnalyticField::plane_wave(amp, vscale(khat, kappa));
}

}  // namespace qmd
