#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmd/arith.hpp"

using namespace qmd;

TEST_CASE("exact field operations are closed and exact") {
    auto a = ComplexScalar::exact(Rational(1, 3), Rational(2, 7));
    auto b = ComplexScalar::exact(Rational(-5, 2), Rational(1, 6));
    auto sum = a + b;
    CHECK(sum.exact_re() == Rational(-13, 6));
    CHECK(sum.exact_im() == Rational(19, 42));
    auto prod = a * b;
    // (1/3 + 2/7 j)(-5/2 + 1/6 j) = -5/6 - 1/21 + (1/18 - 5/7) j
    CHECK(prod.exact_re() == Rational(-5, 6) - Rational(1, 21));
    CHECK(prod.exact_im() == Rational(1, 18) - Rational(5, 7));
    auto quot = prod / b;
    CHECK(quot == a);
}

TEST_CASE("division by zero is rejected") {
    auto a = ComplexScalar::exact(1);
    CHECK_THROWS_AS(a / ComplexScalar::exact(0), std::domain_error);
}

TEST_CASE("modes never mix") {
    auto e = ComplexScalar::exact(1);
    auto f = ComplexScalar::floating(1.0);
    CHECK_THROWS_AS(e + f, ModeError);
    CHECK_THROWS_AS(e * f, ModeError);
    CHECK_THROWS_AS((void)(e == f), ModeError);
    CHECK_THROWS_AS(e.to_complex() == f.to_complex() ? f.exact_re() : f.exact_re(), ModeError);
}

TEST_CASE("complex literal parsing") {
    auto m = ArithMode::Exact;
    CHECK(parse_complex("5", m) == ComplexScalar::exact(5));
    CHECK(parse_complex("-5j", m) == ComplexScalar::exact(0, -5));
    CHECK(parse_complex("3/8+1/2j", m) == ComplexScalar::exact(Rational(3, 8), Rational(1, 2)));
    CHECK(parse_complex("0.25-4j", m) == ComplexScalar::exact(Rational(1, 4), -4));
    CHECK(parse_complex("1e2", m) == ComplexScalar::exact(100));
    CHECK(parse_complex("2.5e-1", m) == ComplexScalar::exact(Rational(1, 4)));
    CHECK(parse_complex(" 1 + 2j", m) == ComplexScalar::exact(1, 2));
    CHECK_THROWS_AS(parse_complex("", m), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2", m), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("j", m), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1/0", m), std::invalid_argument);

    auto f = parse_complex("0.1", ArithMode::Float);
    CHECK(f.to_complex().real() == doctest::Approx(0.1));
    // decimals convert exactly in exact mode
    CHECK(parse_complex("0.1", m).exact_re() == Rational(1, 10));
}

TEST_CASE("literal printing round-trips") {
    for (const char* text : {"0", "5", "-5j", "3/8+1/2j", "-1/3-2j", "7j", "1", "-4"}) {
        auto v = parse_complex(text, ArithMode::Exact);
        CHECK(parse_complex(v.str(), ArithMode::Exact) == v);
    }
    auto v = ComplexScalar::floating(0.375, -0.5);
    CHECK(parse_complex(v.str(), ArithMode::Float) == v);
    CHECK(ComplexScalar::floating(-0.0).str() == "0");
}

TEST_CASE("exact square roots") {
    auto m = ArithMode::Exact;
    CHECK(*exact_sqrt(ComplexScalar::exact(4)) == ComplexScalar::exact(2));
    CHECK(*exact_sqrt(ComplexScalar::exact(Rational(9, 16))) ==
          ComplexScalar::exact(Rational(3, 4)));
    CHECK(!exact_sqrt(ComplexScalar::exact(2)).has_value());
    // negative real radicand: nonnegative imaginary part
    CHECK(*exact_sqrt(ComplexScalar::exact(-16)) == ComplexScalar::exact(0, 4));
    // (2+j)^2 = 3+4j
    CHECK(*exact_sqrt(ComplexScalar::exact(3, 4)) == ComplexScalar::exact(2, 1));
    CHECK(!exact_sqrt(ComplexScalar::exact(1, 1)).has_value());
    CHECK_THROWS_AS(sqrt_principal(ComplexScalar::exact(2)), NotRepresentable);
    CHECK(sqrt_principal(ComplexScalar::exact(0)).is_zero());
    (void)m;
}

TEST_CASE("float square root uses the principal branch") {
    auto r = sqrt_principal(ComplexScalar::floating(-1.0));
    CHECK(r.to_complex().real() == 0.0);
    CHECK(r.to_complex().imag() == 1.0);
    auto s = sqrt_principal(ComplexScalar::floating(3.0, 4.0));
    CHECK(s.to_complex().real() == doctest::Approx(2.0));
    CHECK(s.to_complex().imag() == doctest::Approx(1.0));
}
