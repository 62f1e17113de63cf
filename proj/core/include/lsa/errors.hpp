#pragma once

#include <stdexcept>
#include <string>

namespace lsa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

struct GradingViolation : Error {
    using Error::Error;
};

struct FamilyError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct UndefinedInvariant : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// Parse errors carry a 1-based source position.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(int line_, int column_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace lsa
