#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmd {

using Rational = boost::multiprecision::cpp_rational;

/// Arithmetic mode carried by every value in the engine. Exact values are
/// Gaussian rationals; Float values are double-precision complex numbers.
/// Values of different modes never mix silently.
enum class ArithMode { Exact, Float };

const char* to_string(ArithMode m);
ArithMode arith_mode_from_string(std::string_view s);

/// Thrown when exact and floating values meet in one expression.
struct ModeError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown when a requested value (typically an irrational square root)
/// has no representation in exact mode.
struct NotRepresentable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex scalar tagged with its arithmetic mode.
class ComplexScalar {
public:
    ComplexScalar();  // exact zero

    static ComplexScalar exact(Rational re, Rational im = 0);
    static ComplexScalar floating(double re, double im = 0.0);
    static ComplexScalar zero(ArithMode m);
    static ComplexScalar one(ArithMode m);
    static ComplexScalar imaginary(ArithMode m);
    static ComplexScalar integer(long v, ArithMode m);
    static ComplexScalar ratio(long num, long den, ArithMode m);

    ArithMode mode() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_real() const;

    const Rational& exact_re() const;  // ModeError unless exact
    const Rational& exact_im() const;
    std::complex<double> to_complex() const;  // evaluates exact values
    double modulus() const;

    ComplexScalar operator-() const;
    ComplexScalar conj() const;
    ComplexScalar& operator+=(const ComplexScalar& o);
    ComplexScalar& operator-=(const ComplexScalar& o);
    ComplexScalar& operator*=(const ComplexScalar& o);
    ComplexScalar& operator/=(const ComplexScalar& o);

    friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
    friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }
    friend ComplexScalar operator*(ComplexScalar a, const ComplexScalar& b) { return a *= b; }
    friend ComplexScalar operator/(ComplexScalar a, const ComplexScalar& b) { return a /= b; }

    friend bool operator==(const ComplexScalar& a, const ComplexScalar& b);
    friend bool operator!=(const ComplexScalar& a, const ComplexScalar& b) { return !(a == b); }

    /// Strict weak order within one mode; used for canonical sorting.
    static bool lex_less(const ComplexScalar& a, const ComplexScalar& b);

    /// Literal form: "a", "bj" or "a+bj"; exact rationals print as "p/q".
    std::string str() const;

private:
    struct Exact {
        Rational re, im;
    };
    std::variant<Exact, std::complex<double>> v_;
};

/// Exact principal square root, when one exists in the Gaussian rationals.
std::optional<ComplexScalar> exact_sqrt(const ComplexScalar& z);

/// Principal square root. Float mode delegates to std::sqrt; exact mode
/// throws NotRepresentable when the root is irrational.
ComplexScalar sqrt_principal(const ComplexScalar& z);

/// Parse a complex literal ("5", "-5j", "3/8+1/2j", "0.25-4j").
/// Decimals convert exactly in exact mode. Throws std::invalid_argument.
ComplexScalar parse_complex(std::string_view text, ArithMode m);

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double v);

}  // namespace qmd
