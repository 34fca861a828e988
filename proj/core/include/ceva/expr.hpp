#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ceva/errors.hpp"

namespace ceva {

/// AST for scalar functions of one variable. Nodes are immutable and shared;
/// evaluation is pure, so expressions can be used concurrently.
class Expression {
public:
    enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Sqrt };

    using Ptr = std::shared_ptr<const Expression>;

    Kind kind;
    double value = 0.0;   // Constant
    int exponent = 0;     // Pow
    Ptr lhs, rhs;         // children (rhs unused for unary nodes)

    static Ptr constant(double v);
    static Ptr variable();
    static Ptr unary(Kind k, Ptr child);
    static Ptr binary(Kind k, Ptr l, Ptr r);
    static Ptr pow(Ptr base, int exp);

    /// Throws DomainError on division by zero, sqrt of a negative number,
    /// or any non-finite intermediate.
    double eval(double x) const;

    bool structurally_equal(const Expression& other) const;

    std::string pretty() const;
};

/// Parse `text` as an infix arithmetic expression whose single free variable
/// is named `var`. Recognized: + - * / ^ (integer exponent), sqrt(...),
/// parentheses, decimal literals.
Expression::Ptr parse(const std::string& text, const std::string& var);

/// One piece of a piecewise function: expression valid on [lo, hi).
struct Piece {
    double lo;
    double hi; // may be +infinity
    Expression::Ptr expr;
};

/// Piecewise function over half-open intervals [lo, hi). Pieces must be
/// sorted and non-overlapping; queries outside every piece throw.
class PiecewiseFunction {
public:
    PiecewiseFunction() = default;
    explicit PiecewiseFunction(std::vector<Piece> pieces);

    /// Single-expression convenience: one piece on [-inf, inf).
    static PiecewiseFunction total(Expression::Ptr e);

    double eval(double x) const;

    const std::vector<Piece>& pieces() const { return pieces_; }

private:
    std::vector<Piece> pieces_;
};

} // namespace ceva
