#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmd/diffop.hpp"

namespace qmd {

/// Thrown on lexical or syntax errors; the message carries the byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), position(offset) {}
    size_t position;
};

/// Abstract syntax of operator expressions:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "D" | "d1".."d3" | "R1".."R3" | "L[" quat "]" | "M[" quat "]"
///           | complex | "(" expr ")"
///   quat   := "[" complex "," complex "," complex "," complex "]"
/// Complex literals follow qmd::parse_complex; subtraction wraps the right
/// term in a Negate node.
struct OperatorExpr {
    enum class Kind {
        Sum,        // children
        Product,    // children
        Negate,     // one child
        Moisil,     // the operator D
        Partial,    // d<axis>
        Reflect,    // R<axis>
        LeftMul,    // L[q]
        RightMul,   // M[q]
        Scalar      // complex literal
    };

    Kind kind = Kind::Scalar;
    int axis = 0;
    std::optional<Quaternion> quat;
    std::optional<ComplexScalar> scalar;
    std::vector<OperatorExpr> children;

    bool operator==(const OperatorExpr&) const = default;
};

/// Parse source text; literals materialize in the given mode.
OperatorExpr parse_operator(std::string_view src, ArithMode m);

/// Pretty-print an expression in the concrete grammar above.
std::string print_expr(const OperatorExpr& e);

/// Lower an expression to a normal-form operator. "*" composes left to
/// right: (A*B) f = A(B f).
DiffOperator lower(const OperatorExpr& e, ArithMode m);

/// Canonical expression of a normal-form operator. Coefficient matrices are
/// expanded over the left/right multiplication basis, so the result uses
/// only L[...], M[...], d1..d3 and R1..R3 factors and parses back to an
/// operator equal to the input.
OperatorExpr operator_to_expr(const DiffOperator& op);

/// print_expr(operator_to_expr(op)).
std::string print_operator(const DiffOperator& op);

}  // namespace qmd
