#pragma once

#include <stdexcept>
#include <string>

namespace cdplan {

/// Bad argument to a library operation (overlapping parts, label mismatch, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input outside the supported class (e.g. a disconnected underlying graph).
class UnsupportedInputError : public std::invalid_argument {
public:
    explicit UnsupportedInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An enumeration would exceed the configured search budget.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cdplan
