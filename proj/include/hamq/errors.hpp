#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamq {

/// Base class for domain errors: mathematically invalid inputs to an
/// otherwise well-formed request. `name()` is the stable identifier the
/// CLI prints ("error: <name>", exit code 2).
class DomainError : public std::runtime_error {
public:
    DomainError(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

struct ZeroDivisor final : DomainError {
    ZeroDivisor() : DomainError("ZeroDivisor", "inverse of the zero quaternion") {}
};

struct LogOfZero final : DomainError {
    LogOfZero() : DomainError("LogOfZero", "complex logarithm of zero") {}
};

struct AtanPole final : DomainError {
    AtanPole() : DomainError("AtanPole", "complex arctangent at a pole (z = +i or -i)") {}
};

struct NotQuaternionic final : DomainError {
    NotQuaternionic()
        : DomainError("NotQuaternionic",
                      "2x2 complex matrix does not satisfy the quaternionic structure") {}
};

struct CjsDegenerate final : DomainError {
    CjsDegenerate()
        : DomainError("CjsDegenerate",
                      "nonzero quaternion with z1^2 + z2^2 = 0 has no Cjs form") {}
};

struct DegenerateAlpha final : DomainError {
    DegenerateAlpha()
        : DomainError("DegenerateAlpha", "closed-form alpha denominator vanishes") {}
};

struct LogDomain final : DomainError {
    LogDomain()
        : DomainError("LogDomain", "logarithmic form requires strictly positive components") {}
};

struct ZeroLeadingComplex final : DomainError {
    ZeroLeadingComplex()
        : DomainError("ZeroLeadingComplex", "factored binomial power requires a + bi != 0") {}
};

struct UnboundVariable final : DomainError {
    UnboundVariable() : DomainError("UnboundVariable", "expression uses z but no value was bound") {}
};

/// Errors raised while reading input text. Positions are 1-based character
/// offsets into the original string. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
    InputError(const char* name, std::size_t position, const std::string& what)
        : std::runtime_error(what), name_(name), position_(position) {}

    const char* name() const noexcept { return name_; }
    std::size_t position() const noexcept { return position_; }

private:
    const char* name_;
    std::size_t position_;
};

struct LexError final : InputError {
    LexError(std::size_t position, const std::string& what)
        : InputError("LexError", position, what) {}
};

struct ParseError final : InputError {
    ParseError(std::size_t position, const std::string& what)
        : InputError("ParseError", position, what) {}
};

}  // namespace hamq
