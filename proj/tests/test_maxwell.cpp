#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmd/maxwell.hpp"

using namespace qmd;

namespace {

constexpr ArithMode EX = ArithMode::Exact;

const auto O = ComplexScalar::zero(EX);
const auto I = ComplexScalar::one(EX);
const auto J = ComplexScalar::imaginary(EX);

MediumParams vacuum(long omega) {
    return MediumParams::vacuum_natural(ComplexScalar::integer(omega, EX));
}

const std::array<ComplexScalar, 3> e1{I, O, O};
const std::array<ComplexScalar, 3> e2{O, I, O};
const std::array<ComplexScalar, 3> e3{O, O, I};

std::mt19937_64 rng(991);

}  // namespace

TEST_CASE("medium invariant eps0*mu0*c^2 = 1") {
    CHECK_NOTHROW(MediumParams(I, I, I, I, ComplexScalar::exact(4), I));
    // eps0 = 1/4, c = 2 works; eps0 = 1, c = 2 does not
    CHECK_NOTHROW(MediumParams(ComplexScalar::ratio(1, 4, EX), I, I, I, I,
                               ComplexScalar::exact(2)));
    CHECK_THROWS_AS(MediumParams(I, I, I, I, I, ComplexScalar::exact(2)), std::invalid_argument);
}

TEST_CASE("wavenumber and its branch") {
    CHECK(wavenumber(vacuum(1)) == I);
    auto m4 = MediumParams(I, I, ComplexScalar::exact(4), I, I, I);
    CHECK(wavenumber(m4) == ComplexScalar::exact(2));
    // formally eps_r*mu_r = -1: kappa = j*omega/c
    auto mneg = MediumParams(I, I, ComplexScalar::exact(-1), I, I, I);
    CHECK(wavenumber(mneg) == J);
    // kappa^2 = omega^2 eps mu
    auto m = MediumParams(I, I, ComplexScalar::exact(9), I, ComplexScalar::exact(2), I);
    auto k = wavenumber(m);
    CHECK(k * k == m.omega * m.omega * m.eps() * m.mu());
}

TEST_CASE("plane-wave generator solves the full system") {
    // vacuum omega=1, khat=e3, pol=e1: H = i2 e^{j x3}
    auto p = plane_wave(vacuum(1), e3, e1);
    auto expected_h = AnalyticField::plane_wave({O, O, I, O}, {O, O, I});
    CHECK((p.magnetic - expected_h).is_zero());
    auto res = maxwell_residuals(p, vacuum(1));
    CHECK(res.all_zero());
    CHECK(res.sup_norm() == 0.0);

    // a lossy-ish medium with exact data: eps_r = 4, omega = 3
    auto m = MediumParams(I, I, ComplexScalar::exact(4), I, ComplexScalar::exact(3), I);
    auto p2 = plane_wave(m, e2, {ComplexScalar::exact(2), O, J});
    CHECK(maxwell_residuals(p2, m).all_zero());
}

TEST_CASE("plane-wave preconditions") {
    CHECK_THROWS_AS(plane_wave(vacuum(1), e3, e3), std::invalid_argument);   // not transverse
    CHECK_THROWS_AS(plane_wave(vacuum(1), {O, O, ComplexScalar::exact(2)}, e1),
                    std::invalid_argument);                                   // not unit
    CHECK_THROWS_AS(plane_wave(vacuum(1), {O, O, J}, e1), std::invalid_argument);  // not real
}

TEST_CASE("residuals detect invalid pairs") {
    auto p = plane_wave(vacuum(1), e3, e1);
    auto bad = MaxwellPair{p.electric, p.magnetic.scale(ComplexScalar::exact(2))};
    auto res = maxwell_residuals(bad, vacuum(1));
    CHECK(!res.ampere.is_zero());
    CHECK(res.gauss_e.is_zero());
    auto zero = MaxwellPair{AnalyticField::zero(EX), AnalyticField::zero(EX)};
    CHECK(maxwell_residuals(zero, vacuum(1)).all_zero());
    auto scalar_field = AnalyticField::constant(Quaternion::one(EX));
    CHECK_THROWS_AS(maxwell_residuals(MaxwellPair{scalar_field, scalar_field}, vacuum(1)),
                    std::invalid_argument);
}

TEST_CASE("quaternionic form is equivalent to the classical one") {
    auto m = vacuum(1);
    auto valid = plane_wave(m, e3, e1);
    auto [q1, q2] = maxwell_quaternionic_residuals(valid, m);
    CHECK(q1.is_zero());
    CHECK(q2.is_zero());

    // perturb H by 10%: both formulations must flag it
    auto bad = MaxwellPair{valid.electric,
                           valid.magnetic.scale(ComplexScalar::ratio(11, 10, EX))};
    auto classical = maxwell_residuals(bad, m);
    auto [b1, b2] = maxwell_quaternionic_residuals(bad, m);
    CHECK(!classical.ampere.is_zero());
    CHECK(!(b1.is_zero() && b2.is_zero()));
}

TEST_CASE("beltrami diagonalization") {
    auto m = vacuum(1);
    auto pair = plane_wave(m, e3, e1);
    auto kappa = wavenumber(m);
    auto [phi, psi] = to_beltrami(pair, m);
    CHECK(beltrami_residual(phi, kappa, Sign::Minus).is_zero());  // (D - kappa) phi = 0
    CHECK(beltrami_residual(psi, kappa, Sign::Plus).is_zero());   // (D + kappa) psi = 0

    // perturbed pair: phi is no longer a Beltrami field
    auto bad = MaxwellPair{pair.electric, pair.magnetic.scale(ComplexScalar::ratio(11, 10, EX))};
    auto [phib, psib] = to_beltrami(bad, m);
    CHECK(!beltrami_residual(phib, kappa, Sign::Minus).is_zero());
    (void)psib;
}

TEST_CASE("beltrami residual on simple fields") {
    auto kappa = ComplexScalar::exact(3);
    auto f = AnalyticField::constant(Quaternion::unit(2, EX));
    // D f = 0, so the residual is +-kappa f
    CHECK((beltrami_residual(f, kappa, Sign::Minus) + f.scale(kappa)).is_zero());
    CHECK((beltrami_residual(f, kappa, Sign::Plus) - f.scale(kappa)).is_zero());
    CHECK(beltrami_residual(AnalyticField::zero(EX), kappa, Sign::Plus).is_zero());
}

TEST_CASE("to/from beltrami round-trip") {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4), ki(-2, 2);
    auto m = MediumParams(I, I, ComplexScalar::exact(4), I, ComplexScalar::exact(3), I);
    for (int it = 0; it < 20; ++it) {
        auto rc = [&] {
            return ComplexScalar::exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        };
        std::array<ComplexScalar, 3> k{ComplexScalar::exact(ki(rng)), ComplexScalar::exact(ki(rng)),
                                       ComplexScalar::exact(ki(rng))};
        auto e = AnalyticField::plane_wave({O, rc(), rc(), rc()}, k);
        auto h = AnalyticField::plane_wave({O, rc(), rc(), rc()}, k);
        MaxwellPair p{e, h};
        auto [phi, psi] = to_beltrami(p, m);
        auto back = from_beltrami(phi, psi, m);
        CHECK((back.electric - e).is_zero());
        CHECK((back.magnetic - h).is_zero());
    }
}

TEST_CASE("to_beltrami with E = 0 collapses to kappa H") {
    auto m = vacuum(2);
    auto h = AnalyticField::plane_wave({O, I, O, O}, {O, O, ComplexScalar::exact(2)});
    auto [phi, psi] = to_beltrami(MaxwellPair{AnalyticField::zero(EX), h}, m);
    CHECK((phi - h.scale(wavenumber(m))).is_zero());
    CHECK((phi - psi).is_zero());
}

TEST_CASE("from_beltrami preconditions") {
    auto zero_omega = MediumParams::vacuum_natural(O);
    auto f = AnalyticField::zero(EX);
    CHECK_THROWS_AS(from_beltrami(f, f, zero_omega), std::invalid_argument);
}

TEST_CASE("circular beltrami eigenfields") {
    auto kappa = I;
    auto plus = circular_beltrami(kappa, e3, Sign::Plus);
    auto expected = AnalyticField::plane_wave({O, I, J, O}, {O, O, I});
    CHECK((plus - expected).is_zero());
    CHECK(beltrami_residual(plus, kappa, Sign::Minus).is_zero());
    auto minus = circular_beltrami(kappa, e3, Sign::Minus);
    CHECK(beltrami_residual(minus, kappa, Sign::Plus).is_zero());

    // other axes and a rational kappa
    auto k2 = ComplexScalar::exact(Rational(3, 2));
    for (const auto& khat : {e1, e2}) {
        auto f = circular_beltrami(k2, khat, Sign::Plus);
        CHECK(beltrami_residual(f, k2, Sign::Minus).is_zero());
    }
}
