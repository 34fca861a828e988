#include "ceva/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace ceva {

Expression::Ptr Expression::constant(double v) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Constant;
    e->value = v;
    return e;
}

Expression::Ptr Expression::variable() {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Variable;
    return e;
}

Expression::Ptr Expression::unary(Kind k, Ptr child) {
    auto e = std::make_shared<Expression>();
    e->kind = k;
    e->lhs = std::move(child);
    return e;
}

Expression::Ptr Expression::binary(Kind k, Ptr l, Ptr r) {
    auto e = std::make_shared<Expression>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

Expression::Ptr Expression::pow(Ptr base, int exp) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Pow;
    e->lhs = std::move(base);
    e->exponent = exp;
    return e;
}

namespace {

double checked(double v, const char* what) {
    if (!std::isfinite(v))
        throw DomainError(std::string("non-finite result in ") + what);
    return v;
}

double int_pow(double base, int exp) {
    if (exp < 0) {
        if (base == 0.0)
            throw DomainError("zero raised to a negative power");
        return 1.0 / int_pow(base, -exp);
    }
    double r = 1.0;
    double b = base;
    // exponentiation by squaring keeps evaluation deterministic and cheap
    while (exp > 0) {
        if (exp & 1)
            r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace

double Expression::eval(double x) const {
    switch (kind) {
    case Kind::Constant:
        return value;
    case Kind::Variable:
        return x;
    case Kind::Negate:
        return -lhs->eval(x);
    case Kind::Add:
        return checked(lhs->eval(x) + rhs->eval(x), "addition");
    case Kind::Sub:
        return checked(lhs->eval(x) - rhs->eval(x), "subtraction");
    case Kind::Mul:
        return checked(lhs->eval(x) * rhs->eval(x), "multiplication");
    case Kind::Div: {
        double d = rhs->eval(x);
        if (d == 0.0)
            throw DomainError("division by zero");
        return checked(lhs->eval(x) / d, "division");
    }
    case Kind::Pow:
        return checked(int_pow(lhs->eval(x), exponent), "power");
    case Kind::Sqrt: {
        double a = lhs->eval(x);
        if (a < 0.0)
            throw DomainError("square root of negative number");
        return std::sqrt(a);
    }
    }
    throw DomainError("corrupt expression node");
}

bool Expression::structurally_equal(const Expression& other) const {
    if (kind != other.kind)
        return false;
    switch (kind) {
    case Kind::Constant:
        return value == other.value;
    case Kind::Variable:
        return true;
    case Kind::Pow:
        return exponent == other.exponent && lhs->structurally_equal(*other.lhs);
    case Kind::Negate:
    case Kind::Sqrt:
        return lhs->structurally_equal(*other.lhs);
    default:
        return lhs->structurally_equal(*other.lhs) && rhs->structurally_equal(*other.rhs);
    }
}

namespace {

int precedence(Expression::Kind k) {
    switch (k) {
    case Expression::Kind::Add:
    case Expression::Kind::Sub:
        return 1;
    case Expression::Kind::Mul:
    case Expression::Kind::Div:
        return 2;
    case Expression::Kind::Negate:
        return 3;
    case Expression::Kind::Pow:
        return 4;
    default:
        return 5;
    }
}

void print(const Expression& e, std::ostringstream& out, const std::string& var) {
    auto child = [&](const Expression& c, bool needs_paren) {
        if (needs_paren)
            out << '(';
        print(c, out, var);
        if (needs_paren)
            out << ')';
    };
    switch (e.kind) {
    case Expression::Kind::Constant: {
        std::ostringstream num;
        num.precision(17);
        num << e.value;
        std::string s = num.str();
        if (e.value < 0) {
            out << '(' << s << ')';
        } else {
            out << s;
        }
        break;
    }
    case Expression::Kind::Variable:
        out << var;
        break;
    case Expression::Kind::Negate:
        out << '-';
        child(*e.lhs, precedence(e.lhs->kind) < precedence(e.kind));
        break;
    case Expression::Kind::Add:
        child(*e.lhs, precedence(e.lhs->kind) < 1);
        out << " + ";
        child(*e.rhs, precedence(e.rhs->kind) <= 1);
        break;
    case Expression::Kind::Sub:
        child(*e.lhs, precedence(e.lhs->kind) < 1);
        out << " - ";
        child(*e.rhs, precedence(e.rhs->kind) <= 1);
        break;
    case Expression::Kind::Mul:
        child(*e.lhs, precedence(e.lhs->kind) < 2);
        out << "*";
        child(*e.rhs, precedence(e.rhs->kind) <= 2);
        break;
    case Expression::Kind::Div:
        child(*e.lhs, precedence(e.lhs->kind) < 2);
        out << "/";
        child(*e.rhs, precedence(e.rhs->kind) <= 2);
        break;
    case Expression::Kind::Pow:
        child(*e.lhs, precedence(e.lhs->kind) < 5);
        out << '^';
        if (e.exponent < 0)
            out << '(' << e.exponent << ')';
        else
            out << e.exponent;
        break;
    case Expression::Kind::Sqrt:
        out << "sqrt(";
        print(*e.lhs, out, var);
        out << ')';
        break;
    }
}

} // namespace

std::string Expression::pretty() const {
    std::ostringstream out;
    print(*this, out, "s");
    return out.str();
}

namespace {

// Recursive-descent parser.
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | primary ('^' intexp)?
//   primary := number | ident | '(' expr ')' | 'sqrt' '(' expr ')'
class Parser {
public:
    Parser(const std::string& text, const std::string& var) : text_(text), var_(var) {}

    Expression::Ptr run() {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError("empty expression", pos_);
        auto e = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    const std::string& var_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    Expression::Ptr expr() {
        auto e = term();
        for (;;) {
            if (accept('+'))
                e = Expression::binary(Expression::Kind::Add, e, term());
            else if (accept('-'))
                e = Expression::binary(Expression::Kind::Sub, e, term());
            else
                return e;
        }
    }

    Expression::Ptr term() {
        auto e = factor();
        for (;;) {
            if (accept('*'))
                e = Expression::binary(Expression::Kind::Mul, e, factor());
            else if (accept('/'))
                e = Expression::binary(Expression::Kind::Div, e, factor());
            else
                return e;
        }
    }

    Expression::Ptr factor() {
        if (accept('-'))
            return Expression::unary(Expression::Kind::Negate, factor());
        auto e = primary();
        if (accept('^'))
            return Expression::pow(e, int_exponent());
        return e;
    }

    int int_exponent() {
        skip_ws();
        bool paren = accept('(');
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw SyntaxError("expected integer exponent", pos_);
        if (pos_ < text_.size() && text_[pos_] == '.')
            throw SyntaxError("exponent must be an integer", pos_);
        int v = std::atoi(text_.substr(start, pos_ - start).c_str());
        if (neg)
            v = -v;
        if (paren)
            expect(')');
        return v;
    }

    Expression::Ptr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        throw SyntaxError("expected number, identifier or '('", pos_);
    }

    Expression::Ptr number() {
        std::size_t start = pos_;
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin)
            throw SyntaxError("malformed number", start);
        // reject C-style hex/inf/nan that strtod would otherwise accept
        for (const char* p = begin; p < end; ++p) {
            char ch = *p;
            if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '.' && ch != 'e' &&
                ch != 'E' && ch != '+' && ch != '-')
                throw SyntaxError("malformed number", start);
        }
        pos_ += static_cast<std::size_t>(end - begin);
        return Expression::constant(v);
    }

    Expression::Ptr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "sqrt") {
            expect('(');
            auto e = expr();
            expect(')');
            return Expression::unary(Expression::Kind::Sqrt, e);
        }
        if (name == var_)
            return Expression::variable();
        throw UnknownIdentifier(name, start);
    }
};

} // namespace

Expression::Ptr parse(const std::string& text, const std::string& var) {
    return Parser(text, var).run();
}

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (!(p.lo < p.hi))
            throw OverlapError("piece interval is empty or inverted");
        if (i > 0 && pieces_[i - 1].hi > p.lo)
            throw OverlapError("pieces overlap or are out of order");
    }
}

PiecewiseFunction PiecewiseFunction::total(Expression::Ptr e) {
    std::vector<Piece> ps;
    ps.push_back(Piece{-std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity(), std::move(e)});
    return PiecewiseFunction(std::move(ps));
}

double PiecewiseFunction::eval(double x) const {
    for (const Piece& p : pieces_) {
        if (x >= p.lo && x < p.hi)
            return p.expr->eval(x);
    }
    throw GapQueryError("no piece covers x = " + std::to_string(x));
}

} // namespace ceva
