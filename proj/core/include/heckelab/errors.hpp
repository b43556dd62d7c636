#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heckelab {

// Base of every error the library throws. The CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Division by zero or an arithmetic operation that is undefined in the field.
class FieldError : public Error {
public:
    using Error::Error;
};

// A denominator vanished when a rational function was evaluated at a point.
class SpecializationError : public FieldError {
public:
    using FieldError::FieldError;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

class NotAnInteger : public Error {
public:
    using Error::Error;
};

class RankError : public Error {
public:
    using Error::Error;
};

// Raised when an axiom of a Hecke symmetry fails. `location` names the first
// offending entry as "(i1,i2,...;j1,j2,...)" with 1-based indices.
class AxiomViolation : public Error {
public:
    AxiomViolation(const std::string& what, std::string location, std::string residual)
        : Error(what + " at " + location + ", residual " + residual),
          location_(std::move(location)), residual_(std::move(residual)) {}
    const std::string& location() const noexcept { return location_; }
    const std::string& residual() const noexcept { return residual_; }

private:
    std::string location_;
    std::string residual_;
};

class YBEViolation : public AxiomViolation {
public:
    YBEViolation(std::string location, std::string residual)
        : AxiomViolation("Yang-Baxter equation violated", std::move(location), std::move(residual)) {}
};

class HeckeViolation : public AxiomViolation {
public:
    HeckeViolation(std::string location, std::string residual)
        : AxiomViolation("Hecke condition violated", std::move(location), std::move(residual)) {}
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class NotEven : public Error {
public:
    using Error::Error;
};

class RankImageNotOneDimensional : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace heckelab
