#pragma once

#include "sympcheck/error.hpp"
#include "sympcheck/manifold.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace sympcheck {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Construction expression, e.g. "S2^4 # CS(3, S1 x S7)".
///
/// Power is the k-fold Cartesian product; IterSum is the j-fold connected sum.
struct Expr {
    enum class Kind { Atom, Product, ConnSum, Power, IterSum, Spin };

    Kind kind = Kind::Atom;
    std::string atom;   // Atom
    int count = 0;      // Power exponent or IterSum multiplicity
    ExprPtr left;       // Product/ConnSum left; Power/IterSum/Spin operand
    ExprPtr right;      // Product/ConnSum right
    std::size_t position = 0;

    static ExprPtr make_atom(std::string name, std::size_t pos = 0);
    static ExprPtr make_binary(Kind kind, ExprPtr l, ExprPtr r, std::size_t pos = 0);
    static ExprPtr make_unary(Kind kind, ExprPtr operand, int count = 0, std::size_t pos = 0);
};

/// Structural equality; positions are ignored.
bool same_tree(const Expr& a, const Expr& b);

class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t position, const std::string& message)
        : Error(code, "at position " + std::to_string(position) + ": " + message), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar, loosest first:
///   expr    := term ('#' term)*
///   term    := postfix ('x' postfix)*
///   postfix := primary ('^' INT)*
///   primary := S<n> | CP<n> | T<n> | Wu | pt | spin(expr) | CS(INT, expr) | (expr)
/// Whitespace is ignored. Throws ParseError (SyntaxError, NonPositiveExponent).
ExprPtr parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(print(e)) is structurally e.
std::string print(const Expr& e);

/// Builds the descriptor. Errors carry the offending subexpression:
/// DimensionMismatch, DimensionTooLow, HypothesesNotEstablished, UnknownAtom.
ManifoldDescriptor evaluate(const Expr& e);

}  // namespace sympcheck
