#pragma once

#include <stdexcept>
#include <string>

namespace capset {

/// Argument outside the mathematical domain of an operation (negative n, bad divisibility, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Valid input that this build deliberately does not handle (e.g. q != 3 for the rank argument).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition on the input data does not hold.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace capset
