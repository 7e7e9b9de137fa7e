#pragma once

#include <stdexcept>
#include <string>

namespace sprime {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands (or an operand and a point) live in different ambient dimensions.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

/// Exact evaluation was requested for a value that depends on a HalfRoot node.
class HalfRootNotExact : public Error {
public:
    HalfRootNotExact() : Error("expression value depends on a half_root node; use eval_approx") {}
};

/// Malformed expression JSON. `where()` is a JSON-pointer style location.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error("parse error at " + (where.empty() ? std::string("/") : where) + ": " + what),
          where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class QuotientNotInferable : public Error {
public:
    QuotientNotInferable()
        : Error("growth certificate cannot be inferred structurally for a quotient node") {}
};

class EmptyList : public Error {
public:
    explicit EmptyList(const std::string& what) : Error(what + ": list must be nonempty") {}
};

class VanishesAtK : public Error {
public:
    VanishesAtK() : Error("f vanishes at k; no maximality witness exists") {}
};

class EqualPoints : public Error {
public:
    EqualPoints() : Error("separator requires two distinct points") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace sprime
