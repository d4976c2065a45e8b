#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefdiag {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DuplicateSubject : public Error {
public:
    using Error::Error;
};

class UnknownItem : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class EmptyCluster : public Error {
public:
    using Error::Error;
};

/// Subject has no selections, so no cluster can be preferred.
class DegenerateSubject : public Error {
public:
    using Error::Error;
};

class NoSecondaryCluster : public Error {
public:
    using Error::Error;
};

/// Inputs that should agree with each other do not (profile vs clustering, layout vs diagram).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class InfeasibleOracle : public Error {
public:
    using Error::Error;
};

}  // namespace prefdiag
