#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (e.g. inverting zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent arguments.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Polynomial text could not be parsed; `position()` is a byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A configured budget (pair cap, iteration cap, degree bound) was exhausted.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A geometric construction produced an object of the wrong shape.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Random data failed a genericity requirement; callers usually retry.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

class LatticeError : public Error {
public:
    using Error::Error;
};

}  // namespace dpk
