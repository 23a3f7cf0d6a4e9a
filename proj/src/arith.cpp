#include "qmd/arith.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace qmd {

namespace mp = boost::multiprecision;
using Integer = mp::cpp_int;

const char* to_string(ArithMode m) {
    return m == ArithMode::Exact ? "exact" : "float";
}

ArithMode arith_mode_from_string(std::string_view s) {
    if (s == "exact") return ArithMode::Exact;
    if (s == "float") return ArithMode::Float;
    throw std::invalid_argument("unknown arithmetic mode: " + std::string(s));
}

namespace {

[[noreturn]] void mode_mismatch(const char* where) {
    throw ModeError(std::string("arithmetic mode mismatch in ") + where);
}

}  // namespace

ComplexScalar::ComplexScalar() : v_(Exact{0, 0}) {}

ComplexScalar ComplexScalar::exact(Rational re, Rational im) {
    ComplexScalar c;
    c.v_ = Exact{std::move(re), std::move(im)};
    return c;
}

ComplexScalar ComplexScalar::floating(double re, double im) {
    ComplexScalar c;
    c.v_ = std::complex<double>(re, im);
    return c;
}

ComplexScalar ComplexScalar::zero(ArithMode m) {
    return m == ArithMode::Exact ? exact(0) : floating(0.0);
}

ComplexScalar ComplexScalar::one(ArithMode m) {
    return m == ArithMode::Exact ? exact(1) : floating(1.0);
}

ComplexScalar ComplexScalar::imaginary(ArithMode m) {
    return m == ArithMode::Exact ? exact(0, 1) : floating(0.0, 1.0);
}

ComplexScalar ComplexScalar::integer(long v, ArithMode m) {
    return m == ArithMode::Exact ? exact(v) : floating(static_cast<double>(v));
}

ComplexScalar ComplexScalar::ratio(long num, long den, ArithMode m) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (m == ArithMode::Exact) return exact(Rational(num, den));
    return floating(static_cast<double>(num) / static_cast<double>(den));
}

ArithMode ComplexScalar::mode() const {
    return std::holds_alternative<Exact>(v_) ? ArithMode::Exact : ArithMode::Float;
}

bool ComplexScalar::is_zero() const {
    if (auto* e = std::get_if<Exact>(&v_)) return e->re == 0 && e->im == 0;
    const auto& z = std::get<std::complex<double>>(v_);
    return z.real() == 0.0 && z.imag() == 0.0;
}

bool ComplexScalar::is_one() const {
    if (auto* e = std::get_if<Exact>(&v_)) return e->re == 1 && e->im == 0;
    const auto& z = std::get<std::complex<double>>(v_);
    return z.real() == 1.0 && z.imag() == 0.0;
}

bool ComplexScalar::is_real() const {
    if (auto* e = std::get_if<Exact>(&v_)) return e->im == 0;
    return std::get<std::complex<double>>(v_).imag() == 0.0;
}

const Rational& ComplexScalar::exact_re() const {
    if (auto* e = std::get_if<Exact>(&v_)) return e->re;
    throw ModeError("exact_re() on a float value");
}

const Rational& ComplexScalar::exact_im() const {
    if (auto* e = std::get_if<Exact>(&v_)) return e->im;
    throw ModeError("exact_im() on a float value");
}

std::complex<double> ComplexScalar::to_complex() const {
    if (auto* e = std::get_if<Exact>(&v_))
        return {e->re.convert_to<double>(), e->im.convert_to<double>()};
    return std::get<std::complex<double>>(v_);
}

double ComplexScalar::modulus() const {
    auto z = to_complex();
    return std::hypot(z.real(), z.imag());
}

ComplexScalar ComplexScalar::operator-() const {
    if (auto* e = std::get_if<Exact>(&v_)) return exact(-e->re, -e->im);
    return floating(-std::get<std::complex<double>>(v_).real(),
                    -std::get<std::complex<double>>(v_).imag());
}

ComplexScalar ComplexScalar::conj() const {
    if (auto* e = std::get_if<Exact>(&v_)) return exact(e->re, -e->im);
    auto z = std::get<std::complex<double>>(v_);
    return floating(z.real(), -z.imag());
}

ComplexScalar& ComplexScalar::operator+=(const ComplexScalar& o) {
    if (mode() != o.mode()) mode_mismatch("operator+");
    if (auto* e = std::get_if<Exact>(&v_)) {
        const auto& oe = std::get<Exact>(o.v_);
        e->re += oe.re;
        e->im += oe.im;
    } else {
        std::get<std::complex<double>>(v_) += std::get<std::complex<double>>(o.v_);
    }
    return *this;
}

ComplexScalar& ComplexScalar::operator-=(const ComplexScalar& o) {
    if (mode() != o.mode()) mode_mismatch("operator-");
    if (auto* e = std::get_if<Exact>(&v_)) {
        const auto& oe = std::get<Exact>(o.v_);
        e->re -= oe.re;
        e->im -= oe.im;
    } else {
        std::get<std::complex<double>>(v_) -= std::get<std::complex<double>>(o.v_);
    }
    return *this;
}

ComplexScalar& ComplexScalar::operator*=(const ComplexScalar& o) {
    if (mode() != o.mode()) mode_mismatch("operator*");
    if (auto* e = std::get_if<Exact>(&v_)) {
        const auto& oe = std::get<Exact>(o.v_);
        Rational re = e->re * oe.re - e->im * oe.im;
        Rational im = e->re * oe.im + e->im * oe.re;
        e->re = std::move(re);
        e->im = std::move(im);
    } else {
        std::get<std::complex<double>>(v_) *= std::get<std::complex<double>>(o.v_);
    }
    return *this;
}

ComplexScalar& ComplexScalar::operator/=(const ComplexScalar& o) {
    if (mode() != o.mode()) mode_mismatch("operator/");
    if (o.is_zero()) throw std::domain_error("complex division by zero");
    if (auto* e = std::get_if<Exact>(&v_)) {
        const auto& oe = std::get<Exact>(o.v_);
        Rational den = oe.re * oe.re + oe.im * oe.im;
        Rational re = (e->re * oe.re + e->im * oe.im) / den;
        Rational im = (e->im * oe.re - e->re * oe.im) / den;
        e->re = std::move(re);
        e->im = std::move(im);
    } else {
        std::get<std::complex<double>>(v_) /= std::get<std::complex<double>>(o.v_);
    }
    return *this;
}

bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    if (a.mode() != b.mode()) mode_mismatch("operator==");
    if (auto* e = std::get_if<ComplexScalar::Exact>(&a.v_)) {
        const auto& oe = std::get<ComplexScalar::Exact>(b.v_);
        return e->re == oe.re && e->im == oe.im;
    }
    return std::get<std::complex<double>>(a.v_) == std::get<std::complex<double>>(b.v_);
}

bool ComplexScalar::lex_less(const ComplexScalar& a, const ComplexScalar& b) {
    if (a.mode() != b.mode()) mode_mismatch("lex_less");
    if (auto* e = std::get_if<Exact>(&a.v_)) {
        const auto& oe = std::get<Exact>(b.v_);
        if (e->re != oe.re) return e->re < oe.re;
        return e->im < oe.im;
    }
    auto za = std::get<std::complex<double>>(a.v_);
    auto zb = std::get<std::complex<double>>(b.v_);
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalizes -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string ComplexScalar::str() const {
    std::string re_s, im_s;
    bool re_zero, im_zero, im_neg;
    if (auto* e = std::get_if<Exact>(&v_)) {
        re_zero = e->re == 0;
        im_zero = e->im == 0;
        im_neg = e->im < 0;
        re_s = rational_str(e->re);
        im_s = rational_str(im_neg ? Rational(-e->im) : e->im);
    } else {
        auto z = std::get<std::complex<double>>(v_);
        re_zero = z.real() == 0.0;
        im_zero = z.imag() == 0.0;
        im_neg = z.imag() < 0.0;
        re_s = format_double(z.real());
        im_s = format_double(im_neg ? -z.imag() : z.imag());
    }
    if (im_zero) return re_s;
    if (re_zero) return (im_neg ? "-" : "") + im_s + "j";
    return re_s + (im_neg ? "-" : "+") + im_s + "j";
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = mp::numerator(r), den = mp::denominator(r);
    Integer sn = mp::sqrt(num), sd = mp::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

std::optional<ComplexScalar> exact_sqrt(const ComplexScalar& z) {
    if (z.mode() != ArithMode::Exact) throw ModeError("exact_sqrt on a float value");
    const Rational& x = z.exact_re();
    const Rational& y = z.exact_im();
    if (y == 0) {
        if (x >= 0) {
            auto s = rational_sqrt(x);
            if (!s) return std::nullopt;
            return ComplexScalar::exact(*s);
        }
        auto s = rational_sqrt(-x);
        if (!s) return std::nullopt;
        return ComplexScalar::exact(0, *s);  // nonnegative imaginary part
    }
    // sqrt(x+iy) = u+iv with u = sqrt((|z|+x)/2) > 0, v = y/(2u)
    auto abs2 = rational_sqrt(x * x + y * y);
    if (!abs2) return std::nullopt;
    auto u = rational_sqrt((*abs2 + x) / 2);
    if (!u || *u == 0) return std::nullopt;
    Rational v = y / (2 * *u);
    return ComplexScalar::exact(*u, v);
}

ComplexScalar sqrt_principal(const ComplexScalar& z) {
    if (z.mode() == ArithMode::Float) {
        auto s = std::sqrt(z.to_complex());
        return ComplexScalar::floating(s.real(), s.imag());
    }
    auto s = exact_sqrt(z);
    if (!s) throw NotRepresentable("square root of " + z.str() + " is not a Gaussian rational");
    return *s;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("bad complex literal '" + std::string(s) + "' at offset " +
                                    std::to_string(pos) + ": " + msg);
    }
};

// digits [. digits] [e[+-]digits] | digits / digits  -- returned exactly
Rational scan_rational(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    bool neg = false;
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
        neg = c.s[c.pos] == '-';
        ++c.pos;
        c.skip_ws();
    }
    auto scan_digits = [&]() -> Integer {
        if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            c.fail("expected digits");
        Integer v = 0;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            v = v * 10 + (c.s[c.pos] - '0');
            ++c.pos;
        }
        return v;
    };
    Integer int_part = scan_digits();
    Rational value(int_part);
    if (c.pos < c.s.size() && c.s[c.pos] == '.') {
        ++c.pos;
        size_t fs = c.pos;
        Integer frac = scan_digits();
        Integer scale = 1;
        for (size_t i = fs; i < c.pos; ++i) scale *= 10;
        value += Rational(frac, scale);
    } else if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        Integer den = scan_digits();
        if (den == 0) c.fail("zero denominator");
        value = Rational(int_part, den);
    }
    if (c.pos < c.s.size() && (c.s[c.pos] == 'e' || c.s[c.pos] == 'E')) {
        ++c.pos;
        bool eneg = false;
        if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
            eneg = c.s[c.pos] == '-';
            ++c.pos;
        }
        Integer ev = scan_digits();
        if (ev > 512) c.fail("exponent out of range");
        Integer p = 1;
        for (Integer i = 0; i < ev; ++i) p *= 10;
        if (eneg)
            value /= Rational(p);
        else
            value *= Rational(p);
    }
    (void)start;
    return neg ? Rational(-value) : value;
}

}  // namespace

ComplexScalar parse_complex(std::string_view text, ArithMode m) {
    Cursor c{text};
    if (c.eof()) c.fail("empty literal");
    Rational first = scan_rational(c);
    Rational re = 0, im = 0;
    if (c.pos < c.s.size() && c.s[c.pos] == 'j') {
        ++c.pos;
        im = first;  // pure imaginary: "bj"
    } else {
        re = first;
        c.skip_ws();
        if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
            im = scan_rational(c);
            if (c.pos >= c.s.size() || c.s[c.pos] != 'j') c.fail("expected 'j' after imaginary part");
            ++c.pos;
        }
    }
    if (!c.eof()) c.fail("trailing characters");
    if (m == ArithMode::Exact) return ComplexScalar::exact(re, im);
    return ComplexScalar::floating(re.convert_to<double>(), im.convert_to<double>());
}

}  // namespace qmd
