#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmd/grid.hpp"

using namespace qmd;

namespace {

constexpr ArithMode FL = ArithMode::Float;

const auto O = ComplexScalar::zero(FL);
const auto I = ComplexScalar::one(FL);

const GridBox kBox{{-1.0, -1.0, -1.0}, {2.0, 2.0, 2.0}};

AnalyticField wave_along_3(double k) {
    return AnalyticField::plane_wave({O, I, O, O}, {O, O, ComplexScalar::floating(k)});
}

double fd_error(const DiffOperator& op, const AnalyticField& f, double h) {
    auto g = sample(f, kBox, h);
    auto numeric = fd_apply(op, g);
    auto exact = sample(apply_operator(op, f), kBox, h);
    exact.set_margin(numeric.margin());
    return residual_max(grid_sub(numeric, exact));
}

}  // namespace

TEST_CASE("grid dimensioning and validation") {
    auto n = grid_dims(kBox, 0.1);
    CHECK(n == std::array<std::size_t, 3>{21, 21, 21});
    CHECK_THROWS_AS(grid_dims(kBox, 0.7), std::invalid_argument);   // not a divisor
    CHECK_THROWS_AS(grid_dims(kBox, 1.0), std::invalid_argument);   // 3 nodes < 5
    CHECK_THROWS_AS(grid_dims(kBox, -0.1), std::invalid_argument);
}

TEST_CASE("finite differences annihilate constants") {
    auto f = AnalyticField::constant(
        Quaternion{ComplexScalar::floating(2.5), I, O, ComplexScalar::floating(0, -1)});
    auto g = sample(f, kBox, 0.25);
    auto r = fd_apply(moisil_theodoresco(FL), g);
    CHECK(residual_max(r) == 0.0);
}

TEST_CASE("second-order convergence of the first-derivative stencil") {
    auto d = moisil_theodoresco(FL);
    auto f = wave_along_3(1.0);
    double e1 = fd_error(d, f, 0.1);
    double e2 = fd_error(d, f, 0.05);
    CHECK(e1 > 0.0);
    double ratio = e1 / e2;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    // observed order
    CHECK(std::log2(ratio) >= 1.8);
}

TEST_CASE("convergence with |k| = 2 stays second order") {
    auto d = moisil_theodoresco(FL);
    auto f = wave_along_3(2.0);
    double ratio = fd_error(d, f, 0.1) / fd_error(d, f, 0.05);
    CHECK(std::log2(ratio) >= 1.8);
}

TEST_CASE("mixed-axis second derivatives converge at second order") {
    auto op = compose(DiffOperator::partial(1, FL), DiffOperator::partial(2, FL));
    auto f = AnalyticField::plane_wave({O, I, O, O},
                                       {I, ComplexScalar::floating(2.0), O});
    double e1 = fd_error(op, f, 0.1);
    double e2 = fd_error(op, f, 0.05);
    CHECK(e1 > 0.0);
    CHECK(std::log2(e1 / e2) >= 1.8);
}

TEST_CASE("degree-2 operators go through the repeated stencil") {
    auto d = moisil_theodoresco(FL);
    auto dd = compose(d, d);
    auto f = wave_along_3(1.0);
    double e1 = fd_error(dd, f, 0.1);
    double e2 = fd_error(dd, f, 0.05);
    CHECK(e1 / e2 >= 3.4);
    CHECK(e1 / e2 <= 4.6);
    auto g = sample(f, kBox, 0.1);
    CHECK(fd_apply(dd, g).margin() == 2);

    auto cube = compose(dd, d);
    CHECK_THROWS_AS(fd_apply(cube, g), std::invalid_argument);  // degree 3 unsupported
}

TEST_CASE("reflections on symmetric boxes are exact") {
    auto f = wave_along_3(1.0);
    auto g = sample(f, kBox, 0.1);
    auto r3 = DiffOperator::reflect(3, FL);
    auto refl = fd_apply(r3, g);
    auto expect = sample(apply_operator(r3, f), kBox, 0.1);
    CHECK(residual_max(grid_sub(refl, expect)) <= 1e-13);

    GridBox asym{{0.0, -1.0, -1.0}, {2.0, 2.0, 2.0}};
    auto g2 = sample(f, asym, 0.1);
    CHECK_THROWS_AS(fd_apply(DiffOperator::reflect(1, FL), g2), std::invalid_argument);
    // reflection along a symmetric axis of the same box still works
    CHECK_NOTHROW(fd_apply(r3, g2));
}

TEST_CASE("serial and parallel kernels are bit-identical") {
    auto f = AnalyticField(
        FL, {PlaneWaveTerm{{I, ComplexScalar::floating(0.5, 1.0), O, I},
                           {ComplexScalar::floating(1.0), O, ComplexScalar::floating(2.0)}},
             PlaneWaveTerm{{O, I, I, O},
                           {O, ComplexScalar::floating(-1.0), ComplexScalar::floating(0.5)}}});
    auto gs = sample(f, kBox, 0.1, Exec::Serial);
    auto gp = sample(f, kBox, 0.1, Exec::Parallel);
    CHECK(gs == gp);

    auto op = compose(moisil_theodoresco(FL), DiffOperator::reflect(3, FL));
    auto rs = fd_apply(op, gs, Exec::Serial);
    auto rp = fd_apply(op, gp, Exec::Parallel);
    CHECK(rs == rp);
    CHECK(residual_max(rs, Exec::Serial) == residual_max(rp, Exec::Parallel));
}

TEST_CASE("residual_max honors the margin") {
    GridField g(kBox, 0.5, grid_dims(kBox, 0.5), 0);
    g.at(0, 0, 0, 0) = 100.0;   // corner node
    g.at(2, 2, 2, 1) = 1.0;     // interior node
    CHECK(residual_max(g) == 100.0);
    g.set_margin(1);
    CHECK(residual_max(g) == 1.0);
    g.set_margin(2);
    CHECK(residual_max(g) == 1.0);
    g.set_margin(3);  // no interior left on a 5-node axis
    CHECK_THROWS_AS(residual_max(g), std::invalid_argument);
}
