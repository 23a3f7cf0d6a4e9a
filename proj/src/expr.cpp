#include "qmd/expr.hpp"

#include <cctype>

namespace qmd {

namespace {

struct Parser {
    std::string_view src;
    size_t pos = 0;
    ArithMode mode;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    OperatorExpr parse_expr() {
        std::vector<OperatorExpr> terms;
        terms.push_back(parse_term());
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                terms.push_back(parse_term());
            } else if (c == '-') {
                ++pos;
                OperatorExpr neg;
                neg.kind = OperatorExpr::Kind::Negate;
                neg.children.push_back(parse_term());
                terms.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms[0]);
        OperatorExpr sum;
        sum.kind = OperatorExpr::Kind::Sum;
        sum.children = std::move(terms);
        return sum;
    }

    OperatorExpr parse_term() {
        std::vector<OperatorExpr> factors;
        factors.push_back(parse_factor());
        while (consume('*')) factors.push_back(parse_factor());
        if (factors.size() == 1) return std::move(factors[0]);
        OperatorExpr prod;
        prod.kind = OperatorExpr::Kind::Product;
        prod.children = std::move(factors);
        return prod;
    }

    OperatorExpr parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            auto e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw ParseError("expected a factor", pos);
    }

    // unsigned decimal or rational, with optional 'j' suffix
    OperatorExpr parse_number() {
        size_t start = pos;
        auto digits = [&] {
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        };
        digits();
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            digits();
        } else if (pos < src.size() && src[pos] == '/') {
            ++pos;
            digits();
        }
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            digits();
        }
        bool imag = pos < src.size() && src[pos] == 'j';
        std::string text(src.substr(start, pos - start));
        if (imag) {
            ++pos;
            text += "j";
        }
        OperatorExpr e;
        e.kind = OperatorExpr::Kind::Scalar;
        try {
            e.scalar = parse_complex(text, mode);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), start);
        }
        return e;
    }

    OperatorExpr parse_ident() {
        size_t start = pos;
        while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
        std::string_view name = src.substr(start, pos - start);
        OperatorExpr e;
        if (name == "D") {
            e.kind = OperatorExpr::Kind::Moisil;
            return e;
        }
        if (name.size() == 2 && (name[0] == 'd' || name[0] == 'R') && name[1] >= '1' &&
            name[1] <= '3') {
            e.kind = name[0] == 'd' ? OperatorExpr::Kind::Partial : OperatorExpr::Kind::Reflect;
            e.axis = name[1] - '0';
            return e;
        }
        if (name == "L" || name == "M") {
            e.kind = name == "L" ? OperatorExpr::Kind::LeftMul : OperatorExpr::Kind::RightMul;
            e.quat = parse_quat();
            return e;
        }
        throw ParseError("unknown atom '" + std::string(name) + "'", start);
    }

    Quaternion parse_quat() {
        expect('[');
        std::array<ComplexScalar, 4> c{ComplexScalar::zero(mode), ComplexScalar::zero(mode),
                                       ComplexScalar::zero(mode), ComplexScalar::zero(mode)};
        for (int i = 0; i < 4; ++i) {
            size_t start = pos;
            size_t end = src.find_first_of(i == 3 ? "]" : ",", pos);
            if (end == std::string_view::npos)
                throw ParseError("unterminated quaternion literal", start);
            try {
                c[static_cast<size_t>(i)] = parse_complex(src.substr(start, end - start), mode);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), start);
            }
            pos = end + 1;
        }
        return {c[0], c[1], c[2], c[3]};
    }
};

int precedence(OperatorExpr::Kind k) {
    switch (k) {
        case OperatorExpr::Kind::Sum:
        case OperatorExpr::Kind::Negate: return 0;
        case OperatorExpr::Kind::Product: return 1;
        default: return 2;
    }
}

void print_rec(const OperatorExpr& e, std::string& out, int min_prec) {
    const bool parens = precedence(e.kind) < min_prec;
    if (parens) out += "(";
    switch (e.kind) {
        case OperatorExpr::Kind::Sum:
            for (size_t i = 0; i < e.children.size(); ++i) {
                const auto& ch = e.children[i];
                if (i == 0) {
                    print_rec(ch, out, 1);
                } else if (ch.kind == OperatorExpr::Kind::Negate) {
                    out += " - ";
                    print_rec(ch.children[0], out, 1);
                } else {
                    out += " + ";
                    print_rec(ch, out, 1);
                }
            }
            break;
        case OperatorExpr::Kind::Negate:
            out += "0 - ";
            print_rec(e.children[0], out, 1);
            break;
        case OperatorExpr::Kind::Product:
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += "*";
                print_rec(e.children[i], out, 2);
            }
            break;
        case OperatorExpr::Kind::Moisil: out += "D"; break;
        case OperatorExpr::Kind::Partial: out += "d" + std::to_string(e.axis); break;
        case OperatorExpr::Kind::Reflect: out += "R" + std::to_string(e.axis); break;
        case OperatorExpr::Kind::LeftMul: out += "L" + e.quat->str(); break;
        case OperatorExpr::Kind::RightMul: out += "M" + e.quat->str(); break;
        case OperatorExpr::Kind::Scalar: out += e.scalar->str(); break;
    }
    if (parens) out += ")";
}

}  // namespace

OperatorExpr parse_operator(std::string_view src, ArithMode m) {
    Parser p{src, 0, m};
    auto e = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError("trailing input", p.pos);
    return e;
}

std::string print_expr(const OperatorExpr& e) {
    std::string out;
    print_rec(e, out, 0);
    return out;
}

DiffOperator lower(const OperatorExpr& e, ArithMode m) {
    using K = OperatorExpr::Kind;
    switch (e.kind) {
        case K::Sum: {
            auto r = DiffOperator::zero(m);
            for (const auto& ch : e.children) r = r + lower(ch, m);
            return r;
        }
        case K::Product: {
            auto r = lower(e.children[0], m);
            for (size_t i = 1; i < e.children.size(); ++i) r = compose(r, lower(e.children[i], m));
            return r;
        }
        case K::Negate: return -lower(e.children[0], m);
        case K::Moisil: return moisil_theodoresco(m);
        case K::Partial: return DiffOperator::partial(e.axis, m);
        case K::Reflect: return DiffOperator::reflect(e.axis, m);
        case K::LeftMul: return DiffOperator::const_left(*e.quat);
        case K::RightMul: return DiffOperator::const_right(*e.quat);
        case K::Scalar: return DiffOperator::scalar(*e.scalar);
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

// Coordinates of a matrix in the basis lift_left(i_a) * lift_right(i_b);
// the 16 products span the full matrix algebra.
std::array<std::array<ComplexScalar, 4>, 4> lr_decompose(const Matrix4& m) {
    const ArithMode mode = m.mode();
    std::vector<ComplexScalar> basis(16 * 16, ComplexScalar::zero(mode));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto prod = lift_left(Quaternion::unit(a, mode)) * lift_right(Quaternion::unit(b, mode));
            int col = a * 4 + b;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    basis[static_cast<size_t>((r * 4 + c) * 16 + col)] = prod.at(r, c);
        }
    std::vector<ComplexScalar> rhs;
    rhs.reserve(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rhs.push_back(m.at(r, c));
    auto sol = solve_linear(std::move(basis), std::move(rhs), 16, 1);
    if (!sol) throw std::logic_error("left/right multiplication basis failed to span");
    std::array<std::array<ComplexScalar, 4>, 4> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                (*sol)[static_cast<size_t>(a * 4 + b)];
    return out;
}

OperatorExpr quat_atom(OperatorExpr::Kind kind, const Quaternion& q) {
    OperatorExpr e;
    e.kind = kind;
    e.quat = q;
    return e;
}

}  // namespace

OperatorExpr operator_to_expr(const DiffOperator& op) {
    const ArithMode mode = op.mode();
    std::vector<OperatorExpr> terms;
    for (const auto& [key, coeff] : op.terms()) {
        auto coords = lr_decompose(coeff);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const auto& c = coords[static_cast<size_t>(a)][static_cast<size_t>(b)];
                if (c.is_zero()) continue;
                std::vector<OperatorExpr> factors;
                if (a == 0 && b == 0) {
                    // fold the scalar into a right multiplier so the literal
                    // carries the sign (the grammar has no unary minus)
                    factors.push_back(
                        quat_atom(OperatorExpr::Kind::RightMul, Quaternion::scalar(c)));
                } else {
                    if (a != 0)
                        factors.push_back(quat_atom(OperatorExpr::Kind::LeftMul,
                                                    Quaternion::unit(a, mode).scale(c)));
                    if (b != 0) {
                        auto q = a == 0 ? Quaternion::unit(b, mode).scale(c)
                                        : Quaternion::unit(b, mode);
                        factors.push_back(quat_atom(OperatorExpr::Kind::RightMul, q));
                    }
                }
                for (int ax = 0; ax < 3; ++ax)
                    for (unsigned d = 0; d < key.degree[static_cast<size_t>(ax)]; ++d) {
                        OperatorExpr p;
                        p.kind = OperatorExpr::Kind::Partial;
                        p.axis = ax + 1;
                        factors.push_back(p);
                    }
                for (int ax = 0; ax < 3; ++ax)
                    if (key.mask & (1u << ax)) {
                        OperatorExpr r;
                        r.kind = OperatorExpr::Kind::Reflect;
                        r.axis = ax + 1;
                        factors.push_back(r);
                    }
                if (factors.size() == 1) {
                    terms.push_back(std::move(factors[0]));
                } else {
                    OperatorExpr prod;
                    prod.kind = OperatorExpr::Kind::Product;
                    prod.children = std::move(factors);
                    terms.push_back(std::move(prod));
                }
            }
    }
    if (terms.empty()) {
        OperatorExpr zero;
        zero.kind = OperatorExpr::Kind::Scalar;
        zero.scalar = ComplexScalar::zero(mode);
        return zero;
    }
    if (terms.size() == 1) return std::move(terms[0]);
    OperatorExpr sum;
    sum.kind = OperatorExpr::Kind::Sum;
    sum.children = std::move(terms);
    return sum;
}

std::string print_operator(const DiffOperator& op) {
    return print_expr(operator_to_expr(op));
}

}  // namespace qmd
