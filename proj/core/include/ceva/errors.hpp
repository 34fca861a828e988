#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ceva {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression or configuration text. Carries a byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An identifier in an expression that is neither the declared variable nor a known function.
class UnknownIdentifier : public SyntaxError {
public:
    UnknownIdentifier(const std::string& name, std::size_t offset)
        : SyntaxError("unknown identifier '" + name + "'", offset) {}
};

/// Piecewise definition with unsorted or overlapping intervals.
class OverlapError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a piecewise function outside every declared piece.
class GapQueryError : public Error {
public:
    using Error::Error;
};

/// Division by zero, square root of a negative number, non-finite result,
/// or a chain evaluated where a defining denominator vanishes.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A proposed basis change does not yield a natural basis.
class NotNaturalBasis : public Error {
public:
    using Error::Error;
};

/// A basis-change matrix with (numerically) zero determinant.
class SingularBasis : public Error {
public:
    using Error::Error;
};

/// Input outside the hypotheses of the classification lemmas.
class OutOfLemmaScope : public Error {
public:
    using Error::Error;
};

/// Structure matrix with all entries (numerically) zero where a nonzero one is required.
class AllZeroError : public Error {
public:
    using Error::Error;
};

/// Matrix that fits neither the equal-rows nor the proportional-rows family.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

/// Witness verification against a singular candidate matrix.
class SingularWitness : public Error {
public:
    using Error::Error;
};

/// Bisection bracket whose endpoints unexpectedly carry the same label.
class NoChangeFound : public Error {
public:
    using Error::Error;
};

/// Bad run configuration (missing keys, wrong function set, unparsable values).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace ceva
