#include <doctest.h>

#include <cmath>
#include <limits>

#include "ceva/expr.hpp"

using namespace ceva;

TEST_CASE("basic arithmetic expressions") {
    CHECK(parse("4*s - 16", "s")->eval(3) == doctest::Approx(-4).epsilon(1e-15));
    CHECK(parse("s", "s")->eval(7) == 7);
    CHECK(parse("4*s^2 - 24*s + 32", "s")->eval(4) == doctest::Approx(0).epsilon(1e-15));
    // Horner form of the same polynomial as an independent check
    auto horner = [](double s) { return (4 * s - 24) * s + 32; };
    auto e = parse("4*s^2 - 24*s + 32", "s");
    for (double s : {-2.0, 0.0, 0.5, 1.75, 3.0, 6.0})
        CHECK(e->eval(s) == doctest::Approx(horner(s)).epsilon(1e-14));
}

TEST_CASE("precedence, unary minus and powers") {
    CHECK(parse("2 + 3*4", "x")->eval(0) == 14);
    CHECK(parse("-x^2", "x")->eval(3) == -9);
    CHECK(parse("(2 + x)^3", "x")->eval(1) == 27);
    CHECK(parse("2^(-1)", "x")->eval(0) == 0.5);
    CHECK(parse("10 - 2 - 3", "x")->eval(0) == 5);
    CHECK(parse("8/4/2", "x")->eval(0) == 1);
    CHECK(parse("sqrt((x-1)^2 + 4)", "x")->eval(2) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse("", "s"), SyntaxError);
    CHECK_THROWS_AS(parse("1 +", "s"), SyntaxError);
    CHECK_THROWS_AS(parse("(1", "s"), SyntaxError);
    CHECK_THROWS_AS(parse("s t", "s"), SyntaxError);
    CHECK_THROWS_AS(parse("2^s", "s"), SyntaxError); // exponents must be integer literals
    CHECK_THROWS_AS(parse("foo + 1", "s"), UnknownIdentifier);
    try {
        parse("1 + bar", "s");
        FAIL("expected UnknownIdentifier");
    } catch (const UnknownIdentifier& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("evaluation errors are typed, never NaN") {
    CHECK_THROWS_AS(parse("1/(s-1)", "s")->eval(1), DomainError);
    CHECK_THROWS_AS(parse("sqrt(s)", "s")->eval(-1), DomainError);
    CHECK_THROWS_AS(parse("0^(-1)", "s")->eval(0), DomainError);
}

TEST_CASE("pretty print round trip") {
    for (const char* text : {"4*s - 16", "4*s^2 - 24*s + 32", "-(s + 1)/(s - 2)^3",
                             "sqrt((s-1)^2 + 4)", "1/(s+1)", "s^2 - 8*s + 13",
                             "2*(3 - s)*(s + 5)", "-s", "s - 5.7"}) {
        auto e = parse(text, "s");
        auto round = parse(e->pretty(), "s");
        CHECK_MESSAGE(e->structurally_equal(*round), text);
    }
}

TEST_CASE("piecewise evaluation with half-open intervals") {
    std::vector<Piece> ps;
    ps.push_back(Piece{0, 6, parse("t+1", "t")});
    ps.push_back(Piece{6, std::numeric_limits<double>::infinity(), parse("0", "t")});
    PiecewiseFunction f(std::move(ps));
    CHECK(f.eval(5) == 6);
    CHECK(f.eval(6) == 0);   // boundary belongs to the right piece
    CHECK(f.eval(0) == 1);
    CHECK_THROWS_AS(f.eval(-0.5), GapQueryError);
}

TEST_CASE("piecewise validation") {
    std::vector<Piece> bad;
    bad.push_back(Piece{0, 2, parse("1", "t")});
    bad.push_back(Piece{1, 3, parse("2", "t")});
    CHECK_THROWS_AS(PiecewiseFunction{bad}, OverlapError);

    std::vector<Piece> empty_interval;
    empty_interval.push_back(Piece{2, 2, parse("1", "t")});
    CHECK_THROWS_AS(PiecewiseFunction{empty_interval}, OverlapError);
}

TEST_CASE("total wrapper covers the whole line") {
    PiecewiseFunction f = PiecewiseFunction::total(parse("1/(s+1)", "s"));
    CHECK(f.eval(0) == 1);
    CHECK(f.eval(-100) == doctest::Approx(1.0 / -99.0));
}
