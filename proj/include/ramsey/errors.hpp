#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex or colour outside the range of the structure it indexes.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Arguments that violate an operation's precondition (overlapping sets,
/// colour 0 in a recolour set, infeasible parameters, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// The input is too small for the operation to be meaningful.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// The vertex count exceeds the dense cap and sparse mode was not requested.
class CapacityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A case trace that does not replay against the colouring it is applied to.
class TraceError : public Error {
public:
    using Error::Error;
};

} // namespace ramsey
