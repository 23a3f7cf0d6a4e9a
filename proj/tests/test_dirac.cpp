#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmd/dirac.hpp"

using namespace qmd;

namespace {

constexpr ArithMode EX = ArithMode::Exact;

const auto O = ComplexScalar::zero(EX);
const auto I = ComplexScalar::one(EX);
const auto J = ComplexScalar::imaginary(EX);

Matrix4 matrix_from(const std::array<int, 16>& re, const std::array<int, 16>& im,
                    ArithMode m = EX) {
    std::array<ComplexScalar, 16> e;
    for (size_t i = 0; i < 16; ++i)
        e[i] = m == EX ? ComplexScalar::exact(re[i], im[i])
                       : ComplexScalar::floating(re[i], im[i]);
    return Matrix4(e);
}

// The reconstruction must land exactly on these matrices (computed once
// from the two-point extraction with an independent symbolic system).
const Matrix4 kGamma0 = matrix_from({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}, {});
const Matrix4 kGamma1 = matrix_from({0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0}, {});
const Matrix4 kGamma2 = matrix_from({}, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
const Matrix4 kGamma3 = matrix_from({0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0}, {});
const Matrix4 kQ = matrix_from({}, {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});

std::mt19937_64 rng(5150);

AnalyticField random_bispinor(ArithMode m = EX) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4), ki(-2, 2);
    auto rc = [&] {
        if (m == EX)
            return ComplexScalar::exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        return ComplexScalar::floating(static_cast<double>(num(rng)) / static_cast<double>(den(rng)),
                                       static_cast<double>(num(rng)) / static_cast<double>(den(rng)));
    };
    auto rk = [&] {
        return m == EX ? ComplexScalar::integer(ki(rng), m)
                       : ComplexScalar::floating(static_cast<double>(ki(rng)));
    };
    return AnalyticField::plane_wave({rc(), rc(), rc(), rc()}, {rk(), rk(), rk()});
}

}  // namespace

TEST_CASE("alpha vector") {
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto alpha = alpha_vector(p);
    CHECK(alpha == Quaternion::vector(ComplexScalar::exact(0, -5), ComplexScalar::exact(-3), O));
    CHECK(alpha.purely_vectorial());
    CHECK(square_of_vector(alpha) == ComplexScalar::exact(16));

    auto massless = DiracParams::natural(ComplexScalar::exact(7), O);
    auto am = alpha_vector(massless);
    CHECK(am[2].is_zero());
    CHECK(am[3].is_zero());
    CHECK(am[1] == -J * ComplexScalar::exact(7));

    // general hbar, c: a = E/(c hbar), b = m c/hbar
    auto p2 = DiracParams(ComplexScalar::exact(6), ComplexScalar::exact(Rational(1, 2)),
                          ComplexScalar::exact(2), ComplexScalar::exact(3));
    auto a2 = alpha_vector(p2);
    CHECK(a2[1] == -J * ComplexScalar::exact(1));
    CHECK(a2[2] == ComplexScalar::exact(Rational(-3, 4)));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DiracParams::natural(J, O), std::invalid_argument);  // complex energy
    CHECK_THROWS_AS(DiracParams::natural(I, ComplexScalar::exact(-1)), std::invalid_argument);
    CHECK_THROWS_AS(DiracParams(I, O, O, I), std::invalid_argument);     // hbar = 0
}

TEST_CASE("matching kappa and its branch") {
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    CHECK(matching_kappa(p) == ComplexScalar::exact(4));
    auto massless = DiracParams::natural(ComplexScalar::exact(3), O);
    CHECK(matching_kappa(massless) == ComplexScalar::exact(3));
    // sub-threshold energy: imaginary kappa
    auto bound = DiracParams::natural(ComplexScalar::exact(3), ComplexScalar::exact(5));
    CHECK(matching_kappa(bound) == ComplexScalar::exact(0, 4));
}

TEST_CASE("transform matrices multiply to the identity") {
    auto t = TransformA::standard(EX);
    CHECK(t.inverse_m * t.forward_m == Matrix4::identity(EX));
    CHECK(t.forward_m * t.inverse_m == Matrix4::identity(EX));
}

TEST_CASE("first-column image of the transform") {
    // constant bispinor (1,0,0,0) maps to (j i1 - i2)/2
    auto phi = AnalyticField::plane_wave({I, O, O, O}, {O, O, O});
    auto f = transform_A(phi);
    auto expected = AnalyticField::constant(
        Quaternion{O, ComplexScalar::exact(0, Rational(1, 2)),
                   ComplexScalar::exact(Rational(-1, 2)), O});
    CHECK((f - expected).is_zero());
}

TEST_CASE("transform round-trip on random plane waves") {
    for (int it = 0; it < 50; ++it) {
        auto phi = random_bispinor();
        auto back = transform_A_inv(transform_A(phi));
        CHECK((back - phi).is_zero());
        auto f = random_bispinor();
        CHECK((transform_A(transform_A_inv(f)) - f).is_zero());
    }
    // float mode stays within 1e-14
    for (int it = 0; it < 50; ++it) {
        auto phi = random_bispinor(ArithMode::Float);
        auto back = transform_A_inv(transform_A(phi));
        CHECK((back - phi).sup_amp_norm() <= 1e-14);
    }
}

TEST_CASE("dirac operator as d_alpha") {
    auto zero = DiracParams::natural(O, O);
    CHECK(dirac_quaternionic(zero) == moisil_theodoresco(EX));
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto alpha = alpha_vector(p);
    CHECK(dirac_quaternionic(p) == moisil_theodoresco(EX) + DiffOperator::const_right(alpha));
}

TEST_CASE("conjugated operator has no reflections and degree <= 1") {
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto n = conjugated_dirac(p);
    CHECK(!n.has_reflections());
    CHECK(n.max_total_degree() == 1);

    // frozen constant term at (a,b) = (5,3): rows (0,0,2,0),(0,0,0,2),(8,0,0,0),(0,8,0,0)
    auto b0 = n.terms().at(TermKey{});
    CHECK(b0 == matrix_from({0, 0, 2, 0, 0, 0, 0, 2, 8, 0, 0, 0, 0, 8, 0, 0}, {}));
}

TEST_CASE("gamma reconstruction lands on the frozen set") {
    auto rec = reconstruct_gammas(EX);
    CHECK(rec.gammas.g0 == kGamma0);
    CHECK(rec.gammas.g1 == kGamma1);
    CHECK(rec.gammas.g2 == kGamma2);
    CHECK(rec.gammas.g3 == kGamma3);
    CHECK(rec.q_matrix == kQ);
    CHECK(rec.gammas.clifford_sign == 1);
    // measured: Q = -g1 g2 g3 and the conjugation identity holds with +1
    CHECK(rec.triple_sign == -1);
    CHECK(rec.conjugation_sign == 1);
    CHECK(rec.q_matrix == (kGamma1 * kGamma2 * kGamma3).scale(ComplexScalar::exact(-1)));
}

TEST_CASE("reconstruction is independent of the parameter points") {
    auto rec1 = reconstruct_gammas(EX);
    auto p1 = DiracParams::natural(ComplexScalar::exact(2), ComplexScalar::exact(3));
    auto p2 = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(1));
    auto rec2 = reconstruct_gammas(p1, p2);
    CHECK(rec2.gammas.g0 == rec1.gammas.g0);
    CHECK(rec2.gammas.g1 == rec1.gammas.g1);
    CHECK(rec2.gammas.g2 == rec1.gammas.g2);
    CHECK(rec2.gammas.g3 == rec1.gammas.g3);
    CHECK(rec2.triple_sign == rec1.triple_sign);
    CHECK(rec2.conjugation_sign == rec1.conjugation_sign);

    // degenerate pair: (5,3) and (10,6) do not separate the coefficients
    auto p3 = DiracParams::natural(ComplexScalar::exact(10), ComplexScalar::exact(6));
    auto p4 = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    CHECK_THROWS_AS(reconstruct_gammas(p4, p3), std::invalid_argument);
}

TEST_CASE("clifford relations of the reconstructed set") {
    auto rec = reconstruct_gammas(EX);
    const Matrix4* g[4] = {&rec.gammas.g0, &rec.gammas.g1, &rec.gammas.g2, &rec.gammas.g3};
    const int eta[4] = {1, -1, -1, -1};
    auto id = Matrix4::identity(EX);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            auto anti = (*g[mu]) * (*g[nu]) + (*g[nu]) * (*g[mu]);
            if (mu != nu)
                CHECK(anti.is_zero());
            else
                CHECK(anti == id.scale(ComplexScalar::integer(2 * eta[mu], EX)));
        }
}

TEST_CASE("covariant residual vanishes on transported solutions") {
    // f = (-i0 + i2) e^{j x3} solves D_alpha f = 0 for (E, m) = (1, 0)
    auto p = DiracParams::natural(I, O);
    auto f = AnalyticField::plane_wave({-I, O, I, O}, {O, O, I});
    CHECK(apply_operator(dirac_quaternionic(p), f).is_zero());

    auto rec = reconstruct_gammas(EX);
    auto q = transform_A_inv(f);
    CHECK(covariant_residual(q, rec.gammas, p).is_zero());
    CHECK(covariant_residual(AnalyticField::zero(EX), rec.gammas, p).is_zero());
}

TEST_CASE("restatement of the conjugation identity on random bispinors") {
    auto rec = reconstruct_gammas(EX);
    auto p = DiracParams::natural(ComplexScalar::exact(5), ComplexScalar::exact(3));
    auto triple = rec.gammas.g1 * rec.gammas.g2 * rec.gammas.g3;
    auto inv = triple.inverse();
    REQUIRE(inv.has_value());
    for (int it = 0; it < 10; ++it) {
        auto q = random_bispinor();
        auto lhs = covariant_residual(q, rec.gammas, p);
        auto chained = apply_operator(DiffOperator::const_matrix(*inv),
                                      transform_A_inv(apply_operator(dirac_quaternionic(p),
                                                                     transform_A(q))));
        // the identity certifies with the measured +1, not the printed -1
        CHECK((lhs - chained).is_zero());
        CHECK_FALSE((lhs + chained).is_zero());
    }
}
